#include "fixtures.hpp"

#include <kanex/instances.hpp>
#include <kanex/theorems.hpp>

#include <doctest.h>

using namespace kanex;
using namespace fixtures;

namespace {

void check_all_conditions(const TheoremReport & report, bool expected)
{
    for (auto name : {"(1) monadic", "(2) Beck with free objects", "(3) Beck with a pointwise codensity monad",
            "(4) l-algebraic with a codensity monad", "(5) l-algebraic with an Alg-universal arrow"}) {
        CAPTURE(name);
        REQUIRE(report.finding(name));
        CHECK(*report.finding(name) == expected);
    }
}

auto failures(const TheoremReport & report) -> std::string
{
    std::string out;
    for (auto & c : report.checks)
        if (! c.outcome)
            out += c.claim + " (" + c.witness + "); ";
    return out;
}

}

TEST_SUITE("theorems") {

TEST_CASE("report verdict is the conjunction of its checks")
{
    TheoremReport report;
    CHECK(report.verdict());
    report.check("a", true);
    CHECK(report.verdict());
    report.check("b", false, "w");
    CHECK_FALSE(report.verdict());
    report.find("f", true);
    CHECK(report.finding("f") == true);
    CHECK_FALSE(report.finding("g"));
}

TEST_CASE("two plus two: Beck with a non-pointwise codensity monad and no adjoint")
{
    auto report = verify_beck_theorems(instances::two_plus_two_concrete());
    CAPTURE(failures(report));
    CHECK(report.verdict());
    CHECK(report.finding("beck") == true);
    CHECK(report.finding("codensity monad") == true);
    CHECK(report.finding("pointwise codensity monad") == false);
    CHECK(report.finding("free objects") == false);
    CHECK(report.finding("monadic") == false);
    CHECK(report.finding("base has copowers") == false);
    check_all_conditions(report, false);
}

TEST_CASE("Eilenberg-Moore category of the chain closure satisfies every condition")
{
    auto report = verify_beck_theorems(em_category(instances::chain_closure_monad()));
    CAPTURE(failures(report));
    CHECK(report.verdict());
    check_all_conditions(report, true);
}

TEST_CASE("the base over itself satisfies every condition")
{
    auto report = verify_beck_theorems(base_as_concrete(chain3()));
    CHECK(report.verdict());
    check_all_conditions(report, true);
}

TEST_CASE("monadicity")
{
    auto two_plus_two = is_monadic(instances::two_plus_two_concrete());
    CHECK_FALSE(two_plus_two.monadic);
    REQUIRE(two_plus_two.codensity);
    CHECK(two_plus_two.codensity->monad == identity_monad(corpus::two_plus_two()));

    auto upper = is_monadic(instances::upper_inclusion_concrete());
    CHECK(upper.monadic);
    REQUIRE(upper.comparison);
    CHECK(compose(upper.eilenberg_moore->forgetful, upper.comparison->functor) == upper_inclusion());
}

TEST_CASE("Alg-universal arrows and codensity monads")
{
    auto base = verify_alg_universal_iff_codensity(base_as_concrete(chain3()));
    CHECK(base.verdict());
    auto arrow = alg_universal_arrow(base_as_concrete(chain3()));
    REQUIRE(arrow);
    CHECK(arrow->endofunctor == identity_functor(chain3()));

    auto two_plus_two = alg_universal_arrow(instances::two_plus_two_concrete());
    REQUIRE(two_plus_two);
    CHECK(two_plus_two->endofunctor == identity_functor(corpus::two_plus_two()));
    CHECK(verify_alg_universal_iff_codensity(instances::two_plus_two_concrete()).verdict());

    auto upper = alg_universal_arrow(instances::upper_inclusion_concrete());
    REQUIRE(upper);
    CHECK(upper->endofunctor == closure());
    CHECK(verify_alg_universal_iff_codensity(instances::upper_inclusion_concrete()).verdict());
}

TEST_CASE("Alg-universal arrow fails where codensity fails")
{
    // {a, b} in the diamond: the codensity monad needs the meet a /\ b inside the image.
    auto diamond = corpus::diamond();
    auto pair = std::make_shared<const ConcreteCategory>(
            make_concrete(full_subcategory(diamond, {diamond->object("a"), diamond->object("b")})));
    auto report = verify_alg_universal_iff_codensity(pair);
    CHECK(report.verdict());
    CHECK(report.finding("codensity monad") == report.finding("Alg-universal arrow"));
}

TEST_CASE("Eilenberg-Moore equals polymeric variety")
{
    CHECK(verify_em_polymeric(identity_monad(chain3())).verdict());
    CHECK(verify_em_polymeric(instances::chain_closure_monad()).verdict());
    for (auto & [name, m] : instances::closure_monads(4)) {
        CAPTURE(name);
        CHECK(verify_em_polymeric(m).verdict());
    }
}

TEST_CASE("limiting cones create Kan extensions")
{
    auto all = instances::limit_of_alg_instances();
    CHECK(all.size() >= 5);
    for (auto & instance : all) {
        CAPTURE(instance.name);
        auto report = verify_limiting_cones_create_kan(instance.diagram, instance.limit, instance.functor, instance.along);
        CAPTURE(failures(report));
        CHECK(report.verdict());
    }
}

TEST_CASE("limiting cones with V the identity")
{
    auto instance = instances::limit_of_alg_instances().at(2);
    auto id = identity_functor(instance.limit.category->total_ptr());
    auto report = verify_limiting_cones_create_kan(instance.diagram, instance.limit, id, id);
    CHECK(report.verdict());
}

TEST_CASE("limiting cones need the componentwise extensions")
{
    // Along the empty category every Ran is a terminal object; Alg Id over 2 + 2 has none.
    auto u = corpus::two_plus_two();
    auto diagram = make_concrete_diagram(u, shape_category(Shape::terminal), {alg_category(identity_functor(u))}, {});
    auto limit = concrete_limit(diagram);
    auto s = Functor::unchecked(empty_category(), limit.category->total_ptr(), {}, {});
    auto v = Functor::unchecked(empty_category(), terminal_category(), {}, {});
    CHECK_THROWS_AS(verify_limiting_cones_create_kan(diagram, limit, s, v), PreconditionUnmet);
}

TEST_CASE("no equivalence is violated on the seed corpus")
{
    for (auto & [name, category] : instances::concrete_corpus(3, 2)) {
        CAPTURE(name);
        auto report = verify_beck_theorems(category);
        CAPTURE(failures(report));
        CHECK(report.verdict());
    }
}

TEST_CASE("reports are deterministic")
{
    auto x = instances::two_plus_two_concrete();
    auto a = verify_beck_theorems(x);
    auto b = verify_beck_theorems(x);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0 ; i < a.checks.size() ; ++i) {
        CHECK(a.checks[i].claim == b.checks[i].claim);
        CHECK(a.checks[i].outcome == b.checks[i].outcome);
        CHECK(a.checks[i].witness == b.checks[i].witness);
    }
    REQUIRE(a.findings.size() == b.findings.size());
    for (std::size_t i = 0 ; i < a.findings.size() ; ++i)
        CHECK(a.findings[i].value == b.findings[i].value);
}

}
