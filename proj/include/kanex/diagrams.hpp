#pragma once

// Cones, limits and colimits by exhaustive search, comma categories, and limit creation.

#include <kanex/kernel.hpp>

#include <optional>
#include <string>
#include <vector>

namespace kanex {

/// A diagram is a functor out of a (small) shape category.
using Diagram = Functor;

/// Legs indexed by shape objects. For a cocone the legs point into the apex.
struct Cone
{
    ObjId apex = none;
    std::vector<MorId> legs;

    auto operator==(const Cone &) const -> bool = default;
};

auto is_cone(const Diagram & diagram, const Cone & cone) -> bool;

/// All cones over the diagram with the given apex, lexicographic in the legs.
auto cones_with_apex(const Diagram & diagram, ObjId apex) -> std::vector<Cone>;

/// Mediating morphisms m : apex(other) -> apex(cone) with cone.legs[d] . m = other.legs[d].
auto factorizations(const Diagram & diagram, const Cone & cone, const Cone & other) -> std::vector<MorId>;

/// A cone is a limit iff for every object X, m |-> cone . m is a bijection from hom(X, apex)
/// onto the cones with apex X.
auto is_limit(const Diagram & diagram, const Cone & cone) -> bool;

/// The canonical limit: smallest apex, then lexicographically smallest legs.
auto limit(const Diagram & diagram) -> std::optional<Cone>;

/// Every limit cone of the diagram, in canonical order.
auto all_limits(const Diagram & diagram) -> std::vector<Cone>;

/// Duals of the above, computed through the opposite category.
auto is_cocone(const Diagram & diagram, const Cone & cocone) -> bool;
auto is_colimit(const Diagram & diagram, const Cone & cocone) -> bool;
auto colimit(const Diagram & diagram) -> std::optional<Cone>;
auto all_colimits(const Diagram & diagram) -> std::vector<Cone>;

/// The comma category A | U with its projection Q_A onto the source of U.
struct CommaCategory
{
    ObjId base_object = none;
    CatPtr category;
    Functor projection;
    /// arrows[x] : base_object -> U(projection(x))
    std::vector<MorId> arrows;
};

auto comma_category(ObjId base_object, const Functor & functor) -> CommaCategory;

/// Fixed library of small shapes used for "all limits" checks.
enum class Shape
{
    empty,
    terminal,
    discrete2,
    discrete3,
    parallel_pair,
    span,
    cospan,
};

auto shape_category(Shape shape) -> CatPtr;
auto shape_name(Shape shape) -> std::string;
auto parse_shape(const std::string & name) -> Shape;
auto default_shapes() -> std::vector<Shape>;

struct CreationVerdict
{
    bool holds = true;
    /// True when the underlying diagram has no limit (colimit), so nothing had to be lifted.
    bool vacuous = false;
    std::string witness;
};

/// Strict creation: every limit cone of U . D lifts to exactly one cone over D, and that
/// cone is a limit.
auto creates_limit(const Functor & functor, const Diagram & diagram) -> CreationVerdict;

/// Dual of creates_limit for the given colimit cocones of U . D (all colimits when empty).
auto creates_colimit(const Functor & functor, const Diagram & diagram,
        const std::vector<Cone> & colimits_below) -> CreationVerdict;

/// Data of a split fork e : B -> Z above a parallel pair f, g : A -> B in the base:
/// e f = e g, e s = id_Z, f t = id_B, g t = s e.
struct SplitFork
{
    MorId coequalizer = none;
    MorId section = none;
    MorId retraction = none;
};

auto split_forks(const FinCategory & category, MorId f, MorId g) -> std::vector<SplitFork>;

/// The parallel-pair diagram on f, g.
auto parallel_pair_diagram(const CatPtr & category, MorId f, MorId g) -> Diagram;

}
