#pragma once

// Exhaustive enumeration of functors and natural transformations in lexicographic order.

#include <kanex/kernel.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace kanex {

struct Budget
{
    /// Cap on the size of an object-map search space (product of the candidate counts).
    std::uint64_t max_candidates = 1'000'000;
};

/// Per-object restriction of the images a functor may take. An empty list leaves an object free.
using ObjectRestriction = std::vector<std::vector<ObjId>>;

/// Visits every functor source -> target, lexicographically on the object map and then on the
/// morphism map. The visitor returns false to stop. Throws SearchSpaceExceeded when the
/// object-map space exceeds the budget.
void for_each_functor(const CatPtr & source, const CatPtr & target, const Budget & budget,
        const std::function<bool (const Functor &)> & visit, const ObjectRestriction & restriction = {});

auto all_functors(const CatPtr & source, const CatPtr & target, const Budget & budget = {},
        const ObjectRestriction & restriction = {}) -> std::vector<Functor>;

auto all_endofunctors(const CatPtr & category, const Budget & budget = {}) -> std::vector<Functor>;

/// Visits every natural transformation source -> target, lexicographically on the components.
void for_each_nat_trans(const Functor & source, const Functor & target,
        const std::function<bool (const NatTrans &)> & visit);

auto all_nat_trans(const Functor & source, const Functor & target) -> std::vector<NatTrans>;

auto count_nat_trans(const Functor & source, const Functor & target) -> std::uint64_t;

}
