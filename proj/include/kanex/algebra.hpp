#pragma once

// Functor algebras, the contravariant Alg construction, polymers, polymeric varieties and
// Eilenberg-Moore categories.

#include <kanex/concrete.hpp>
#include <kanex/kan.hpp>
#include <kanex/kernel.hpp>

#include <optional>
#include <string>
#include <vector>

namespace kanex {

struct FAlgebra
{
    Functor endofunctor;
    ObjId carrier = none;
    /// F(carrier) -> carrier
    MorId structure = none;
};

auto is_algebra(const FAlgebra & algebra) -> bool;

/// "A{alpha}": the canonical name of an algebra object.
auto algebra_name(const FinCategory & base, ObjId carrier, MorId structure) -> std::string;

/// Every algebra of F, ordered by carrier and then by structure morphism.
auto all_algebras(const Functor & endofunctor) -> std::vector<FAlgebra>;

/// Alg F with its forgetful functor. Objects are named "A{alpha}", non-identity morphisms
/// "h:A{alpha}->B{beta}".
auto alg_category(const Functor & endofunctor) -> ConcretePtr;

/// The algebra sitting at a total object of a category that carries algebra data.
auto algebra_at(const ConcreteCategory & category, ObjId object) -> FAlgebra;
auto find_algebra(const ConcreteCategory & category, ObjId carrier, MorId structure) -> std::optional<ObjId>;

/// Alg phi : Alg F -> Alg G for phi : G -> F, sending (A, alpha) to (A, alpha . phi_A).
auto alg_of_transformation(const NatTrans & transformation, const ConcretePtr & alg_source, const ConcretePtr & alg_target)
        -> ConcreteFunctor;
auto alg_of_transformation(const NatTrans & transformation) -> ConcreteFunctor;

/// alpha^(n) : F^n A -> A.
auto polymer(const FAlgebra & algebra, int n) -> MorId;

/// P_n : Alg F -> Alg F^n, (A, alpha) |-> (A, alpha^(n)).
auto polymer_functor(const ConcretePtr & alg, int n, const ConcretePtr & alg_power) -> ConcreteFunctor;
auto polymer_functor(const ConcretePtr & alg, int n) -> ConcreteFunctor;

/// (phi, psi)_p with phi : G -> F^m and psi : G -> F^n.
struct PolymericIdentity
{
    Functor endofunctor;
    NatTrans lhs;
    NatTrans rhs;
    int m = 0;
    int n = 0;

    auto domain() const -> const Functor & { return lhs.source(); }
};

/// Throws PreconditionUnmet unless lhs : G -> F^m and rhs : G -> F^n.
auto make_polymeric_identity(const Functor & endofunctor, NatTrans lhs, NatTrans rhs, int m, int n) -> PolymericIdentity;

/// alpha^(m) . phi_A == alpha^(n) . psi_A
auto satisfies_identity(const FAlgebra & algebra, const PolymericIdentity & identity) -> bool;

/// Full concrete subcategory of Alg F on the algebras satisfying every identity.
auto polymeric_variety(const ConcretePtr & alg, const std::vector<PolymericIdentity> & identities) -> ConcretePtr;
auto polymeric_variety(const Functor & endofunctor, const std::vector<PolymericIdentity> & identities) -> ConcretePtr;

/// (eta, id_Id)_p of arity (1, 0) and (id_{M^2}, mu)_p of arity (2, 1).
auto em_identities(const Monad & monad) -> std::vector<PolymericIdentity>;

/// Eilenberg-Moore algebras, checked directly: alpha . eta_A = id and alpha . M alpha = alpha . mu_A.
auto em_category(const Monad & monad) -> ConcretePtr;

/// (M A, mu_A)
auto em_free(const Monad & monad, ObjId object) -> FAlgebra;

/// The free-algebra functor C -> EM(M) with the forgetful functor as right adjoint.
/// Throws LawViolation if a free algebra is missing or a triangle identity fails.
auto free_adjunction(const Monad & monad, const ConcretePtr & em) -> Adjunction;

/// Pointwise coproduct (F + G)(A) = F A + G A with the canonical coproduct choice; none when
/// some binary coproduct is missing.
auto sum_endofunctor(const Functor & first, const Functor & second) -> std::optional<Functor>;

}
