#pragma once

// Concrete categories over a fixed base: concrete functors, fibre-wise products, equalizers,
// limits of concrete diagrams, Beck checks and concrete isomorphism search.

#include <kanex/diagrams.hpp>
#include <kanex/enumerate.hpp>
#include <kanex/kernel.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace kanex {

/// Structure data of an f-algebraic category: the endofunctor and, for every total object,
/// its structure morphism F(U x) -> U x.
struct AlgebraData
{
    Functor endofunctor;
    std::vector<MorId> structures;
};

struct ConcreteCategory
{
    Functor forgetful;

    /// Constructive tags. f_algebraic is set only by alg_category; l_algebraic by every
    /// construction that produces a limit of f-algebraic categories.
    bool f_algebraic = false;
    bool l_algebraic = false;
    bool homogeneous = false;
    bool single_induced = false;
    std::optional<AlgebraData> algebra;

    auto total() const -> const FinCategory & { return forgetful.source(); }
    auto total_ptr() const -> const CatPtr & { return forgetful.source_ptr(); }
    auto base() const -> const FinCategory & { return forgetful.target(); }
    auto base_ptr() const -> const CatPtr & { return forgetful.target_ptr(); }

    /// Total objects over a base object, in index order.
    auto fibre(ObjId base_object) const -> std::vector<ObjId>;
    /// The morphism x -> y above h, if there is one (unique by faithfulness).
    auto lift(ObjId x, ObjId y, MorId h) const -> std::optional<MorId>;
};

using ConcretePtr = std::shared_ptr<const ConcreteCategory>;

/// Restriction to a subcategory (names kept) with its inclusion; algebra data is restricted
/// too, tags are left unset.
auto restrict_concrete(const ConcreteCategory & category, const std::vector<bool> & keep_objects,
        const std::vector<bool> & keep_morphisms) -> std::pair<ConcreteCategory, Functor>;
auto full_concrete_subcategory(const ConcreteCategory & category, const std::vector<ObjId> & objects)
        -> std::pair<ConcreteCategory, Functor>;

/// Throws NotFaithful with the colliding morphisms as witness.
auto make_concrete(Functor forgetful) -> ConcreteCategory;

/// (C, Id). Tagged l-algebraic as the limit of the empty diagram.
auto base_as_concrete(const CatPtr & base) -> ConcretePtr;

/// Strict equality of totals and forgetful functors.
auto concretely_identical(const ConcreteCategory & a, const ConcreteCategory & b) -> bool;

struct ConcreteFunctor
{
    ConcretePtr source;
    ConcretePtr target;
    Functor functor;
};

/// Throws NotConcrete unless U_target . functor = U_source.
auto make_concrete_functor(ConcretePtr source, ConcretePtr target, Functor functor) -> ConcreteFunctor;
auto identity_concrete_functor(const ConcretePtr & category) -> ConcreteFunctor;
/// after . before
auto compose(const ConcreteFunctor & after, const ConcreteFunctor & before) -> ConcreteFunctor;

/// The concrete functor with the given object map, morphisms lifted along the target's
/// forgetful functor; none when some morphism has no lift.
auto concrete_functor_from_objects(const ConcretePtr & source, const ConcretePtr & target,
        const std::vector<ObjId> & objects) -> std::optional<ConcreteFunctor>;

/// Every concrete functor source -> target, lexicographically on the object map. The visitor
/// returns false to stop. Throws SearchSpaceExceeded past the budget.
void for_each_concrete_functor(const ConcretePtr & source, const ConcretePtr & target, const Budget & budget,
        const std::function<bool (const ConcreteFunctor &)> & visit);

/// A limit in Con C together with its cone of concrete functors.
struct ConcreteCone
{
    ConcretePtr category;
    std::vector<ConcreteFunctor> legs;
};

/// Fibre-wise product. Objects over A are tuples "<x1,...,xk>" of objects over A (bare names for
/// one factor); the empty product is (C, Id).
auto concrete_product(const std::vector<ConcretePtr> & factors, const CatPtr & base) -> ConcreteCone;

/// The subcategory on which two parallel concrete functors agree; the single leg is the inclusion.
auto concrete_equalizer(const ConcreteFunctor & first, const ConcreteFunctor & second) -> ConcreteCone;

/// A functor from a shape into Con C. morphisms is indexed by shape morphism id.
struct ConcreteDiagram
{
    CatPtr base;
    CatPtr shape;
    std::vector<ConcretePtr> objects;
    std::vector<ConcreteFunctor> morphisms;
};

/// Fills identity morphisms and checks the assignment is functorial; throws FunctorialityViolation.
auto make_concrete_diagram(const CatPtr & base, const CatPtr & shape, std::vector<ConcretePtr> objects,
        const std::vector<std::pair<std::string, ConcreteFunctor>> & morphisms) -> ConcreteDiagram;

/// Product of the objects followed by the equalizer of the compatibility conditions
/// D(phi) x_d = x_e. Legs are the restricted projections.
auto concrete_limit(const ConcreteDiagram & diagram) -> ConcreteCone;

/// Mediating functor K : B -> limit with leg_d . K = components[d] and U . K = base_component.
/// Throws PreconditionUnmet when the components are not a compatible family.
auto mediate(const ConcreteCone & cone, const std::vector<Functor> & components, const Functor & base_component) -> Functor;

/// concrete_limit of a diagram of f-algebraic categories, with the compatibility of the
/// resulting structure families re-checked. Throws NotFAlgebraic.
auto build_l_algebraic(const ConcreteDiagram & diagram) -> ConcreteCone;

/// Whether some shape object maps to every object (hom-sets nonempty).
auto has_weakly_initial_object(const FinCategory & shape) -> bool;

struct BeckCheck
{
    std::string name;
    bool holds = true;
    bool vacuous = false;
    std::string witness;
};

struct BeckVerdict
{
    bool beck = true;
    std::vector<BeckCheck> checks;
    /// Human-readable restriction of the check: the shape library and the split-fork proxy.
    std::string scope;
};

/// Strict creation of every library-shape limit and of coequalizers of pairs that are split
/// in the base.
auto is_beck(const ConcreteCategory & category, const std::vector<Shape> & shapes = default_shapes()) -> BeckVerdict;

/// An invertible concrete functor, or none. Throws SearchSpaceExceeded when the number of
/// partial assignments explored exceeds the budget.
auto concrete_iso_search(const ConcretePtr & first, const ConcretePtr & second, const Budget & budget = {})
        -> std::optional<ConcreteFunctor>;

struct CopowerVerdict
{
    bool exists = true;
    /// Copowers k . A were checked for k = 0 .. max_multiplicity.
    int max_multiplicity = 0;
    std::string witness;
};

/// Coproducts of constant families k . A for every object A and k up to
/// max(2, largest hom-set size).
auto has_copowers(const CatPtr & category) -> CopowerVerdict;

}
