#pragma once

// Generators for the small categories used throughout the tests and the --seed-corpus runs:
// posets, monoids, the 2 + 2 example and a few lattices.

#include <kanex/kernel.hpp>

#include <string>
#include <utility>
#include <vector>

namespace kanex::corpus {

struct Instance
{
    std::string name;
    CatPtr category;
};

/// Poset on the given elements; `relations` (pairs of element indices, below <= above) generate
/// the order. The morphism x -> y is named "x<=y".
auto poset(const std::vector<std::string> & elements, const std::vector<std::pair<int, int>> & relations) -> CatPtr;

auto poset_morphism_name(const std::string & below, const std::string & above) -> std::string;

/// 0 <= 1 <= ... <= n-1
auto chain(int length) -> CatPtr;

auto discrete(int size) -> CatPtr;

/// Four-element lattice 0 <= a, b <= 1.
auto diamond() -> CatPtr;

/// Join-semilattice without bottom: a, b <= 1 and c <= a.
auto join_semilattice() -> CatPtr;

/// One-object category "*" on a monoid. Element 0 is the unit (morphism id_*); the others are
/// named by `elements`. table[x][y] is the index of x . y.
auto monoid(const std::vector<std::string> & elements, const std::vector<std::vector<int>> & table) -> CatPtr;

/// The category 2 + 2: objects 0, 1, 0', 1' with i : 0 -> 1 and i' : 0' -> 1'.
auto two_plus_two() -> CatPtr;

/// The inclusion of 1 + 1 = {0, 0'} into 2 + 2.
auto two_plus_two_inclusion() -> Functor;

/// All posets of the given size up to isomorphism, labelled so that x <= y implies x <= y as integers.
auto all_posets(int size) -> std::vector<Instance>;

/// All monoids of the given order up to isomorphism (order >= 1).
auto all_monoids(int order) -> std::vector<Instance>;

/// Posets with at most `max_size` elements followed by monoids of order at most `max_order`,
/// then 2 + 2.
auto seed_categories(int max_size = 4, int max_order = 3) -> std::vector<Instance>;

}
