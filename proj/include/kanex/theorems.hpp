#pragma once

// Executable verifiers. Each recomputes both sides of a statement on a finite instance and
// returns every individual comparison it made.

#include <kanex/algebra.hpp>
#include <kanex/concrete.hpp>
#include <kanex/kan.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kanex {

struct TheoremCheck
{
    std::string claim;
    bool outcome = false;
    std::string witness;
};

/// A computed fact that is reported but is not itself pass/fail.
struct Finding
{
    std::string name;
    bool value = false;
    std::string detail;
};

struct TheoremReport
{
    std::string theorem;
    std::string instance;
    std::vector<TheoremCheck> checks;
    std::vector<Finding> findings;
    std::vector<std::string> notes;

    auto verdict() const -> bool;
    void check(std::string claim, bool outcome, std::string witness = {});
    void find(std::string name, bool value, std::string detail = {});
    auto finding(const std::string & name) const -> std::optional<bool>;
};

/// Short description of a concrete category for report headers.
auto describe(const ConcreteCategory & category) -> std::string;

struct MonadicVerdict
{
    bool monadic = false;
    std::optional<CodensityResult> codensity;
    ConcretePtr eilenberg_moore;
    std::optional<ConcreteFunctor> comparison;
    std::string witness;
};

/// Concretely isomorphic to EM(M) for the codensity monad M (which is the only candidate up
/// to isomorphism). Throws SearchSpaceExceeded.
auto is_monadic(const ConcretePtr & category, const Budget & budget = {}) -> MonadicVerdict;

struct AlgUniversalArrow
{
    Functor endofunctor;
    /// H : X -> Alg F.
    ConcreteFunctor arrow;
    /// iota_x : F U x -> U x, the structure of H x.
    std::vector<MorId> structures;
};

/// The first pair (F, H) in lexicographic order such that every concrete J : X -> Alg G
/// factors as Alg tau . H for exactly one tau : G -> F. Throws SearchSpaceExceeded.
auto alg_universal_arrow(const ConcretePtr & category, const Budget & budget = {}) -> std::optional<AlgUniversalArrow>;

auto verify_limiting_cones_create_kan(const ConcreteDiagram & diagram, const ConcreteCone & limit,
        const Functor & functor, const Functor & along, const Budget & budget = {}, std::string instance = {})
        -> TheoremReport;
auto verify_limiting_cones_create_kan(const ConcreteDiagram & diagram, const Functor & functor,
        const Functor & along, const Budget & budget = {}, std::string instance = {}) -> TheoremReport;

struct BeckTheoremOptions
{
    Budget budget;
    std::vector<Shape> shapes = default_shapes();
};

auto verify_beck_theorems(const ConcretePtr & category, const BeckTheoremOptions & options = {},
        std::string instance = {}) -> TheoremReport;

auto verify_em_polymeric(const Monad & monad, std::string instance = {}) -> TheoremReport;

auto verify_alg_universal_iff_codensity(const ConcretePtr & category, const Budget & budget = {},
        std::string instance = {}) -> TheoremReport;

}
