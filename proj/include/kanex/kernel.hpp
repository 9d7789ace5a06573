#pragma once

// Finite categories, functors and natural transformations.
//
// Objects and morphisms are addressed by dense integer indices. Indices follow
// the lexicographic order of the names, so "smallest index" is the canonical
// tie-breaker wherever a choice between isomorphic answers has to be made.

#include <kanex/errors.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kanex {

using ObjId = int;
using MorId = int;

inline constexpr int none = -1;

struct MorphismSpec
{
    std::string name;
    std::string source;
    std::string target;
};

/// after . before = result
struct CompositionFact
{
    std::string after;
    std::string before;
    std::string result;
};

/// Raw input to build_category. Identities are implicit and named by identity_name().
struct Presentation
{
    std::vector<std::string> objects;
    std::vector<MorphismSpec> morphisms;
    std::vector<CompositionFact> compositions;
};

auto identity_name(std::string_view object) -> std::string;

class FinCategory
{
  public:
    FinCategory() = default;

    auto num_objects() const -> int { return static_cast<int>(objects_.size()); }
    auto num_morphisms() const -> int { return static_cast<int>(morphisms_.size()); }

    auto object_name(ObjId a) const -> const std::string & { return objects_[a]; }
    auto morphism_name(MorId f) const -> const std::string & { return morphisms_[f].name; }

    auto source(MorId f) const -> ObjId { return morphisms_[f].source; }
    auto target(MorId f) const -> ObjId { return morphisms_[f].target; }
    auto identity(ObjId a) const -> MorId { return identities_[a]; }
    auto is_identity(MorId f) const -> bool { return identities_[source(f)] == f; }

    /// Composite after . before, or `none` when target(before) != source(after).
    auto compose(MorId after, MorId before) const -> MorId
    {
        return compose_[static_cast<std::size_t>(after) * morphisms_.size() + before];
    }

    auto hom(ObjId a, ObjId b) const -> std::span<const MorId>
    {
        return homs_[static_cast<std::size_t>(a) * objects_.size() + b];
    }

    auto find_object(std::string_view name) const -> std::optional<ObjId>;
    auto find_morphism(std::string_view name) const -> std::optional<MorId>;

    /// Lookups that throw UnknownName.
    auto object(std::string_view name) const -> ObjId;
    auto morphism(std::string_view name) const -> MorId;

    /// The full presentation: every non-identity morphism and every composite.
    auto presentation() const -> Presentation;

    auto operator==(const FinCategory & other) const -> bool;

  private:
    friend auto build_category(const Presentation &) -> FinCategory;
    friend auto opposite(const FinCategory &) -> FinCategory;

    struct Morphism
    {
        std::string name;
        ObjId source;
        ObjId target;
    };

    void index_();

    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<MorId> identities_;
    std::vector<MorId> compose_;
    std::vector<std::vector<MorId>> homs_;
    std::unordered_map<std::string, ObjId> object_index_;
    std::unordered_map<std::string, MorId> morphism_index_;
};

using CatPtr = std::shared_ptr<const FinCategory>;

/// Validates a presentation. Composites missing from `compositions` are filled in when the
/// target hom-set leaves only one choice; otherwise MissingComposite is thrown. Category law
/// failures throw LawViolation with the offending morphisms as witness.
auto build_category(const Presentation & presentation) -> FinCategory;

auto make_category(const Presentation & presentation) -> CatPtr;

/// Same objects and morphism names, sources and targets swapped.
auto opposite(const FinCategory & category) -> FinCategory;

/// The empty category and the category with one object "0".
auto empty_category() -> CatPtr;
auto terminal_category() -> CatPtr;

/// Helper for generated categories: collects objects and morphisms with builder-local ids
/// plus a composition callback, and returns a validated category together with the
/// builder-id to category-id translations.
class CategoryBuilder
{
  public:
    auto add_object(std::string name) -> int;
    /// Identity of a builder object.
    auto identity(int object) -> int;
    auto add_morphism(std::string name, int source, int target) -> int;

    auto num_objects() const -> int { return static_cast<int>(objects_.size()); }
    auto num_morphisms() const -> int { return static_cast<int>(morphisms_.size()); }
    auto morphism_source(int f) const -> int { return morphisms_[f].source; }
    auto morphism_target(int f) const -> int { return morphisms_[f].target; }

    struct Built
    {
        CatPtr category;
        std::vector<ObjId> object_ids;
        std::vector<MorId> morphism_ids;
    };

    /// `compose(g, f)` receives builder ids of a composable pair and returns the builder id of g . f.
    template <typename Compose>
    auto build(Compose && compose) const -> Built
    {
        std::vector<std::pair<int, int>> composable;
        std::vector<int> results;
        for (int g = 0 ; g < num_morphisms() ; ++g)
            for (int f = 0 ; f < num_morphisms() ; ++f)
                if (morphisms_[f].target == morphisms_[g].source
                        && ! morphisms_[f].identity && ! morphisms_[g].identity) {
                    composable.emplace_back(g, f);
                    results.push_back(compose(g, f));
                }
        return finish_(composable, results);
    }

  private:
    struct Entry
    {
        std::string name;
        int source;
        int target;
        bool identity;
    };

    auto finish_(const std::vector<std::pair<int, int>> & composable, const std::vector<int> & results) const -> Built;

    std::vector<std::string> objects_;
    std::vector<Entry> morphisms_;
    std::vector<int> identities_;
};

struct FaithfulnessVerdict
{
    bool faithful = true;
    /// Two distinct morphisms in one hom-set with the same image.
    std::optional<std::pair<MorId, MorId>> witness;
};

class Functor
{
  public:
    Functor() = default;

    auto source() const -> const FinCategory & { return *source_; }
    auto target() const -> const FinCategory & { return *target_; }
    auto source_ptr() const -> const CatPtr & { return source_; }
    auto target_ptr() const -> const CatPtr & { return target_; }

    auto obj(ObjId a) const -> ObjId { return objects_[a]; }
    auto mor(MorId f) const -> MorId { return morphisms_[f]; }
    auto object_map() const -> std::span<const ObjId> { return objects_; }
    auto morphism_map() const -> std::span<const MorId> { return morphisms_; }

    auto is_endofunctor() const -> bool;

    /// Strict equality: same source, same target, same maps.
    auto operator==(const Functor & other) const -> bool;

    /// No validation. Callers guarantee functoriality.
    static auto unchecked(CatPtr source, CatPtr target, std::vector<ObjId> objects, std::vector<MorId> morphisms) -> Functor;

  private:
    CatPtr source_;
    CatPtr target_;
    std::vector<ObjId> objects_;
    std::vector<MorId> morphisms_;
};

/// Throws FunctorialityViolation with a witness on failure.
auto build_functor(CatPtr source, CatPtr target, std::vector<ObjId> objects, std::vector<MorId> morphisms) -> Functor;

/// Name-based construction. Identities are implicit; a non-identity morphism may be left out
/// when its target hom-set has exactly one element.
auto build_functor(CatPtr source, CatPtr target,
        const std::vector<std::pair<std::string, std::string>> & objects,
        const std::vector<std::pair<std::string, std::string>> & morphisms) -> Functor;

/// First failing functoriality equation, if any.
auto functoriality_failure(const Functor & functor) -> std::optional<std::string>;

auto identity_functor(CatPtr category) -> Functor;
auto constant_functor(CatPtr source, CatPtr target, ObjId value) -> Functor;
/// after . before
auto compose(const Functor & after, const Functor & before) -> Functor;
auto opposite(const Functor & functor, CatPtr source_op, CatPtr target_op) -> Functor;

auto check_faithful(const Functor & functor) -> FaithfulnessVerdict;

/// Subcategory on the kept objects and morphisms (names preserved), returned as its inclusion.
/// The kept morphisms must contain the identities of kept objects and be closed under composition.
auto subcategory(const CatPtr & category, const std::vector<bool> & keep_objects, const std::vector<bool> & keep_morphisms) -> Functor;

/// Full subcategory on the given objects, returned as its inclusion.
auto full_subcategory(const CatPtr & category, const std::vector<ObjId> & objects) -> Functor;

/// Endofunctor powers with memoization on the exponent.
class FunctorPowers
{
  public:
    explicit FunctorPowers(Functor base);
    auto base() const -> const Functor & { return powers_[1]; }
    auto operator[](int n) -> const Functor &;

  private:
    std::vector<Functor> powers_;
};

class NatTrans
{
  public:
    NatTrans() = default;

    auto source() const -> const Functor & { return source_; }
    auto target() const -> const Functor & { return target_; }
    auto at(ObjId a) const -> MorId { return components_[a]; }
    auto components() const -> std::span<const MorId> { return components_; }

    auto operator==(const NatTrans & other) const -> bool;

    static auto unchecked(Functor source, Functor target, std::vector<MorId> components) -> NatTrans;

  private:
    Functor source_;
    Functor target_;
    std::vector<MorId> components_;
};

/// Throws NaturalitySquareViolation naming the failing object or morphism.
auto build_nat_trans(Functor source, Functor target, std::vector<MorId> components) -> NatTrans;
auto naturality_failure(const NatTrans & transformation) -> std::optional<std::string>;

auto identity_transformation(const Functor & functor) -> NatTrans;
/// after . before (vertical composite)
auto vertical(const NatTrans & after, const NatTrans & before) -> NatTrans;
/// H a : H F -> H G
auto whisker_left(const Functor & functor, const NatTrans & transformation) -> NatTrans;
/// a K : F K -> G K
auto whisker_right(const NatTrans & transformation, const Functor & functor) -> NatTrans;
/// Godement product b * a : H F -> K G for a : F -> G and b : H -> K.
auto horizontal(const NatTrans & outer, const NatTrans & inner) -> NatTrans;

/// Natural transformation whose components are all isomorphisms.
auto is_natural_iso(const NatTrans & transformation) -> bool;
auto is_iso(const FinCategory & category, MorId f) -> bool;
auto inverse(const FinCategory & category, MorId f) -> std::optional<MorId>;

/// Names for error messages and reports.
auto describe(const FinCategory & category, MorId f) -> std::string;

}
