#include "fixtures.hpp"

#include <kanex/algebra.hpp>
#include <kanex/instances.hpp>

#include <doctest.h>

using namespace kanex;
using namespace fixtures;

namespace {

auto z2() -> CatPtr
{
    static const CatPtr m = corpus::monoid({"id_*", "a"}, {{0, 1}, {1, 0}});
    return m;
}

auto carriers(const ConcreteCategory & alg) -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (ObjId x = 0 ; x < alg.total().num_objects() ; ++x)
        out.push_back(alg.base().object_name(alg.forgetful.obj(x)));
    return out;
}

}

TEST_SUITE("algebra") {

TEST_CASE("algebras of the closure on the chain")
{
    // Oracle: in a poset an algebra on A exists iff c(A) <= A, and then it is unique.
    auto c = closure();
    std::vector<std::string> expected;
    for (ObjId a = 0 ; a < 3 ; ++a)
        if (c.obj(a) <= a)
            expected.push_back(chain3()->object_name(a));
    CHECK(expected == std::vector<std::string>{"1", "2"});

    auto alg = alg_category(c);
    CHECK(carriers(*alg) == expected);
    CHECK(alg->f_algebraic);
    CHECK(alg->l_algebraic);
    CHECK(alg->total().object_name(0) == "1{id_1}");
    CHECK(alg->total().num_morphisms() == 3);
    CHECK(check_faithful(alg->forgetful).faithful);
}

TEST_CASE("algebra morphisms commute with the structures")
{
    for (auto & instance : corpus::seed_categories(3, 2)) {
        CAPTURE(instance.name);
        for (auto & f : all_endofunctors(instance.category)) {
            auto alg = alg_category(f);
            auto & c = alg->base();
            for (MorId h = 0 ; h < alg->total().num_morphisms() ; ++h) {
                auto x = algebra_at(*alg, alg->total().source(h));
                auto y = algebra_at(*alg, alg->total().target(h));
                MorId u = alg->forgetful.mor(h);
                CHECK(c.compose(u, x.structure) == c.compose(y.structure, f.mor(u)));
            }
            // Oracle count: pairs (A, alpha) with alpha : F A -> A.
            int count = 0;
            for (ObjId a = 0 ; a < c.num_objects() ; ++a)
                count += static_cast<int>(c.hom(f.obj(a), a).size());
            CHECK(alg->total().num_objects() == count);
        }
    }
}

TEST_CASE("constant functor at the bottom has every object as algebra")
{
    auto bottom = instances::monotone_map(chain3(), {{"0", "0"}, {"1", "0"}, {"2", "0"}});
    auto alg = alg_category(bottom);
    CHECK(carriers(*alg) == std::vector<std::string>{"0", "1", "2"});
    CHECK(concrete_iso_search(alg, base_as_concrete(chain3())));
}

TEST_CASE("Alg of a transformation")
{
    auto c = closure();
    auto id = identity_functor(chain3());
    auto eta = all_nat_trans(id, c).at(0);
    auto image = alg_of_transformation(eta);
    // (A, alpha) |-> (A, alpha . eta_A)
    for (ObjId x = 0 ; x < image.source->total().num_objects() ; ++x) {
        auto a = algebra_at(*image.source, x);
        auto b = algebra_at(*image.target, image.functor.obj(x));
        CHECK(a.carrier == b.carrier);
        CHECK(b.structure == chain3()->compose(a.structure, eta.at(a.carrier)));
    }
    auto identity = alg_of_transformation(identity_transformation(c));
    CHECK(identity.functor == identity_functor(identity.source->total_ptr()));
}

TEST_CASE("Alg is contravariant on the monoid corpus")
{
    for (auto & instance : corpus::all_monoids(3)) {
        CAPTURE(instance.name);
        auto endos = all_endofunctors(instance.category);
        for (auto & f : endos)
            for (auto & g : endos)
                for (auto & h : endos)
                    for (auto & phi : all_nat_trans(g, f))
                        for (auto & psi : all_nat_trans(h, g)) {
                            auto composite = alg_of_transformation(vertical(phi, psi));
                            auto separate = compose(alg_of_transformation(psi), alg_of_transformation(phi));
                            CHECK(composite.functor == separate.functor);
                        }
    }
}

TEST_CASE("polymers")
{
    auto id = identity_functor(z2());
    FAlgebra a{id, 0, z2()->morphism("a")};
    CHECK(polymer(a, 0) == z2()->identity(0));
    CHECK(polymer(a, 1) == a.structure);
    CHECK(polymer(a, 2) == z2()->identity(0));
    CHECK(polymer(a, 3) == a.structure);

    // alpha^(n+1) = alpha . F alpha^(n) on every algebra of every chain endofunctor.
    for (auto & f : all_endofunctors(chain3()))
        for (auto & alg : all_algebras(f))
            for (int n = 0 ; n < 4 ; ++n)
                CHECK(polymer(alg, n + 1) == chain3()->compose(alg.structure, f.mor(polymer(alg, n))));
}

TEST_CASE("polymer functors are concrete")
{
    auto alg = alg_category(identity_functor(z2()));
    auto p0 = polymer_functor(alg, 0);
    auto p1 = polymer_functor(alg, 1);
    auto p2 = polymer_functor(alg, 2);
    CHECK(p1.functor == identity_functor(alg->total_ptr()));
    for (ObjId x = 0 ; x < alg->total().num_objects() ; ++x) {
        CHECK(algebra_at(*p0.target, p0.functor.obj(x)).structure == z2()->identity(0));
        CHECK(algebra_at(*p2.target, p2.functor.obj(x)).structure == z2()->identity(0));
    }
}

TEST_CASE("polymeric identities and their varieties")
{
    auto f = identity_functor(z2());
    auto id = identity_transformation(f);
    auto identity = make_polymeric_identity(f, id, id, 1, 0);
    auto alg = alg_category(f);
    REQUIRE(alg->total().num_objects() == 2);
    auto variety = polymeric_variety(alg, {identity});
    REQUIRE(variety->total().num_objects() == 1);
    CHECK(variety->total().object_name(0) == "*{id_*}");
    CHECK(variety->single_induced);
    CHECK(variety->l_algebraic);

    // The variety is the equalizer of Alg phi . P_m and Alg psi . P_n.
    auto lhs = compose(alg_of_transformation(identity.lhs), polymer_functor(alg, 1));
    auto rhs = compose(alg_of_transformation(identity.rhs), polymer_functor(alg, 0));
    auto equalizer = concrete_equalizer(lhs, rhs);
    CHECK(concretely_identical(*equalizer.category, *variety));

    auto c = closure();
    auto id_c = identity_transformation(c);
    CHECK_THROWS_AS(make_polymeric_identity(c, id_c, id_c, 1, 0), PreconditionUnmet);
    CHECK_THROWS_AS(make_polymeric_identity(f, id, id, -1, 0), PreconditionUnmet);
}

TEST_CASE("polymeric varieties are equalizers on the chain corpus")
{
    for (auto & f : all_endofunctors(chain3())) {
        FunctorPowers powers(f);
        auto alg = alg_category(f);
        for (int m = 0 ; m <= 2 ; ++m)
            for (int n = 0 ; n <= 2 ; ++n)
                for (auto & g : all_endofunctors(chain3()))
                    for (auto & phi : all_nat_trans(g, powers[m]))
                        for (auto & psi : all_nat_trans(g, powers[n])) {
                            auto identity = make_polymeric_identity(f, phi, psi, m, n);
                            auto variety = polymeric_variety(alg, {identity});
                            auto power_m = polymer_functor(alg, m);
                            auto power_n = polymer_functor(alg, n);
                            auto alg_g = alg_category(g);
                            auto lhs = compose(alg_of_transformation(phi, power_m.target, alg_g), power_m);
                            auto rhs = compose(alg_of_transformation(psi, power_n.target, alg_g), power_n);
                            CHECK(concretely_identical(*concrete_equalizer(lhs, rhs).category, *variety));
                        }
    }
}

TEST_CASE("Eilenberg-Moore category of the chain closure")
{
    auto m = instances::chain_closure_monad();
    auto em = em_category(m);
    CHECK(carriers(*em) == std::vector<std::string>{"1", "2"});
    CHECK(concretely_identical(*em, *polymeric_variety(m.endofunctor, em_identities(m))));
    for (ObjId a = 0 ; a < 3 ; ++a) {
        auto free = em_free(m, a);
        CHECK(free.carrier == closure().obj(a));
        CHECK(find_algebra(*em, free.carrier, free.structure));
    }
    auto adjunction = free_adjunction(m, em);
    CHECK(triangle_identities_hold(adjunction));
    CHECK(adjunction_monad(adjunction) == m);
}

TEST_CASE("Eilenberg-Moore categories equal polymeric varieties on the corpus")
{
    auto monads = instances::closure_monads(4);
    auto monoid = instances::monoid_monads(3);
    monads.insert(monads.end(), monoid.begin(), monoid.end());
    CHECK(monads.size() >= 10);
    for (auto & [name, m] : monads) {
        CAPTURE(name);
        auto em = em_category(m);
        auto variety = polymeric_variety(m.endofunctor, em_identities(m));
        CHECK(concretely_identical(*em, *variety));
        CHECK(adjunction_monad(free_adjunction(m, em)) == m);
    }
}

TEST_CASE("identity monad has the base as Eilenberg-Moore category")
{
    auto em = em_category(identity_monad(chain3()));
    CHECK(concrete_iso_search(em, base_as_concrete(chain3())));
    CHECK(em->forgetful.object_map().size() == 3);
}

TEST_CASE("Alg of a sum is the fibre product")
{
    for (auto & [name, f, g] : instances::sum_instances()) {
        CAPTURE(name);
        auto sum = sum_endofunctor(f, g);
        REQUIRE(sum);
        auto product = concrete_product({alg_category(f), alg_category(g)}, f.source_ptr());
        CHECK(concrete_iso_search(alg_category(*sum), product.category));
    }
}

TEST_CASE("sum endofunctor needs coproducts")
{
    auto u = corpus::two_plus_two();
    auto id = identity_functor(u);
    auto to_zero = constant_functor(u, u, u->object("0"));
    CHECK_FALSE(sum_endofunctor(id, to_zero));
    CHECK(sum_endofunctor(id, id));
}

}
