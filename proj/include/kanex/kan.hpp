#pragma once

// Right Kan extensions, universal arrows, adjoints and codensity monads.

#include <kanex/diagrams.hpp>
#include <kanex/enumerate.hpp>
#include <kanex/kernel.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kanex {

/// Ran_U S = (T, e) with T : C -> B and e : T U -> S for S : A -> B, U : A -> C.
struct RanResult
{
    Functor extension;
    NatTrans counit;
    bool pointwise = false;
    /// Number of competitor functors T' against which universality was checked by
    /// enumeration (zero when only the pointwise construction was used).
    std::uint64_t competitors_checked = 0;
};

/// Same extension and counit (strict equality).
auto same_extension(const RanResult & a, const RanResult & b) -> bool;

struct KanVerdict
{
    bool universal = false;
    std::uint64_t competitors = 0;
    std::string witness;
};

/// Checks Kan universality of (T, e) by enumeration: for every T' : C -> B the map
/// t |-> e . tU from Nat(T', T) to Nat(T'U, S) must be a bijection.
auto verify_right_kan(const Functor & extension, const NatTrans & counit, const Functor & along, const Budget & budget = {}) -> KanVerdict;

/// Exhaustive search over all T : C -> B and e : TU -> S; the first universal pair in
/// lexicographic order is returned. Throws SearchSpaceExceeded.
auto right_kan_search(const Functor & functor, const Functor & along, const Budget & budget = {}) -> std::optional<RanResult>;

/// T(A) is the limit of S . Q_A over the comma category A | U. Throws MissingCommaLimit.
auto right_kan_pointwise(const Functor & functor, const Functor & along) -> RanResult;
auto try_right_kan_pointwise(const Functor & functor, const Functor & along) -> std::optional<RanResult>;

/// Comma-limit criterion: for every A, T(A) with legs e_X . T(f) is a limit of S . Q_A.
auto is_pointwise(const RanResult & ran, const Functor & functor, const Functor & along) -> bool;

/// Hom-functor criterion: hom(C, -) carries (T, e) to the set-valued pointwise extension,
/// i.e. hom(C, T A) is in bijection with compatible families over A | U for every C and A.
auto is_pointwise_via_homs(const RanResult & ran, const Functor & functor, const Functor & along) -> bool;

/// The unique t : T' -> T with e . tU = e'. Pointwise extensions factor through comma
/// limits, others by enumeration of Nat(T', T). Throws NoKanExtension when no unique t exists.
auto factorize(const RanResult & ran, const Functor & along, const Functor & competitor, const NatTrans & competitor_counit) -> NatTrans;
auto factorize_by_search(const RanResult & ran, const Functor & along, const Functor & competitor, const NatTrans & competitor_counit) -> NatTrans;

/// Lexicographically smallest representative of the isomorphism class of (T, e).
auto canonicalize(const RanResult & ran, const Functor & along, const Budget & budget = {}) -> RanResult;

/// Every (T', e . theta U) with theta : T' -> T a natural isomorphism, in lexicographic order.
auto iso_class(const RanResult & ran, const Functor & along, const Budget & budget = {}) -> std::vector<RanResult>;

struct UniversalArrow
{
    ObjId object = none;
    MorId arrow = none;
};

/// (B, u : A -> R B) through which every A -> R X factors uniquely as R g . u.
auto universal_arrow(ObjId object, const Functor & functor) -> std::optional<UniversalArrow>;

struct Adjunction
{
    Functor left;
    Functor right;
    /// Id -> right . left
    NatTrans unit;
    /// left . right -> Id
    NatTrans counit;
};

auto triangle_identities_hold(const Adjunction & adjunction) -> bool;

/// Assembles universal arrows into a left adjoint; none if some object lacks one.
auto left_adjoint(const Functor & functor) -> std::optional<Adjunction>;

struct Monad
{
    Functor endofunctor;
    /// Id -> M
    NatTrans unit;
    /// M M -> M
    NatTrans multiplication;

    auto operator==(const Monad &) const -> bool = default;
};

/// First failing monad law, if any.
auto monad_law_failure(const Monad & monad) -> std::optional<std::string>;
/// Throws LawViolation when a monad law fails.
auto build_monad(Functor endofunctor, NatTrans unit, NatTrans multiplication) -> Monad;
auto identity_monad(const CatPtr & category) -> Monad;
/// (R L, unit, R counit L)
auto adjunction_monad(const Adjunction & adjunction) -> Monad;

/// Transports the monad structure along a natural isomorphism iso : M' -> M.
auto transport_monad(const Monad & monad, const NatTrans & iso) -> Monad;

/// All monads on a category, found by enumeration.
auto all_monads(const CatPtr & category, const Budget & budget = {}) -> std::vector<Monad>;

/// Whether some natural isomorphism theta : M_a -> M_b transports b onto a.
auto monads_isomorphic(const Monad & a, const Monad & b) -> bool;

struct CodensityResult
{
    Monad monad;
    NatTrans counit;
    bool pointwise = false;
    RanResult ran;
};

/// Ran_U U (pointwise first, search otherwise), canonicalized, with unit and multiplication
/// induced by id_U and e . Me. Returns none when the extension does not exist.
auto codensity_monad(const Functor & functor, const Budget & budget = {}) -> std::optional<CodensityResult>;

/// The codensity monad read off an adjunction L -| U: Ran_U U = (U L, U counit), canonicalized
/// and with unit and multiplication induced by universality. Throws NoKanExtension if (U L, U counit)
/// fails the universality check.
auto codensity_from_adjunction(const Adjunction & adjunction, const Budget & budget = {}) -> CodensityResult;

/// Codensity monad computed through the search route only.
auto codensity_monad_by_search(const Functor & functor, const Budget & budget = {}) -> std::optional<CodensityResult>;

}
