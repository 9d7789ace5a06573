#pragma once

// Ready-made concrete categories, monads and diagrams: the worked examples shipped with the
// tool and the sweeps run by --seed-corpus.

#include <kanex/algebra.hpp>
#include <kanex/concrete.hpp>
#include <kanex/corpus.hpp>
#include <kanex/kan.hpp>

#include <string>
#include <utility>
#include <vector>

namespace kanex::instances {

struct NamedConcrete
{
    std::string name;
    ConcretePtr category;
};

struct NamedMonad
{
    std::string name;
    Monad monad;
};

struct LimitInstance
{
    std::string name;
    ConcreteDiagram diagram;
    ConcreteCone limit;
    /// S : A -> limit
    Functor functor;
    /// V : A -> B
    Functor along;
};

struct SumInstance
{
    std::string name;
    Functor first;
    Functor second;
};

/// The chain 0 <= 1 <= 2 and its closure operator 0 -> 1, 1 -> 1, 2 -> 2.
auto chain3() -> CatPtr;
auto chain_closure() -> Functor;
auto chain_closure_monad() -> Monad;

/// Monotone endomap of a poset from (object, image) name pairs, morphisms forced.
auto monotone_map(const CatPtr & poset, const std::vector<std::pair<std::string, std::string>> & images) -> Functor;

/// The inclusion of {0, 0'} into 2 + 2 as a concrete category.
auto two_plus_two_concrete() -> ConcretePtr;

/// The inclusion of {1, 2} into the chain.
auto upper_inclusion_concrete() -> ConcretePtr;

/// Every monad on every poset with at most max_size elements; every one is a closure operator.
auto closure_monads(int max_size) -> std::vector<NamedMonad>;

/// Every monad on every monoid of order 2 .. max_order.
auto monoid_monads(int max_order) -> std::vector<NamedMonad>;

/// For every category of seed_categories(max_size, max_order): (C, Id), the inclusion of every
/// proper nonempty full subcategory, Alg F for every endofunctor and EM(M) for every monad.
/// Then the 2 + 2 inclusion.
auto concrete_corpus(int max_size = 3, int max_order = 2) -> std::vector<NamedConcrete>;

/// Limits of diagrams of functor-algebra categories over the chain and the diamond lattice, each
/// with S = Id and V = the forgetful functor of the limit.
auto limit_of_alg_instances() -> std::vector<LimitInstance>;

/// Every pair of endofunctors of the chain and of the four-element join-semilattice.
auto sum_instances() -> std::vector<SumInstance>;

}
