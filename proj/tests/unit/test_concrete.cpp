#include "fixtures.hpp"

#include <kanex/algebra.hpp>
#include <kanex/concrete.hpp>
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

auto concrete(Functor u) -> ConcretePtr
{
    return std::make_shared<const ConcreteCategory>(make_concrete(std::move(u)));
}

}

TEST_SUITE("concrete") {

TEST_CASE("forgetful functors must be faithful")
{
    auto collapse = constant_functor(z2(), terminal_category(), 0);
    try {
        make_concrete(collapse);
        FAIL("collapse should be rejected");
    }
    catch (const NotFaithful & e) {
        CHECK(e.witness().size() == 2);
    }
    CHECK_NOTHROW(make_concrete(upper_inclusion()));
}

TEST_CASE("fibres and lifts")
{
    auto alg = alg_category(identity_functor(z2()));
    REQUIRE(alg->fibre(0).size() == 2);
    auto x = alg->fibre(0)[0];
    auto y = alg->fibre(0)[1];
    // Over Z/2, h : (*, 1) -> (*, a) needs h = a h, impossible; h : (*, a) -> (*, a) needs h a = a h.
    CHECK_FALSE(alg->lift(x, y, z2()->morphism("a")));
    CHECK(alg->lift(y, y, z2()->morphism("a")));
    CHECK(alg->lift(x, x, z2()->identity(0)) == alg->total().identity(x));
}

TEST_CASE("concrete functors")
{
    auto a = alg_category(closure());
    auto b = alg_category(identity_functor(chain3()));
    int count = 0;
    for_each_concrete_functor(a, b, {}, [&] (const ConcreteFunctor & f) {
        CHECK(compose(b->forgetful, f.functor) == a->forgetful);
        ++count;
        return true;
    });
    CHECK(count == 1);

    auto wrong = constant_functor(a->total_ptr(), b->total_ptr(), 0);
    CHECK_THROWS_AS(make_concrete_functor(a, b, wrong), NotConcrete);
    CHECK_FALSE(concrete_functor_from_objects(b, a, {0, 0, 1}));
}

TEST_CASE("fibre-wise products")
{
    auto c = chain3();
    auto f = alg_category(closure());
    auto g = alg_category(instances::monotone_map(c, {{"0", "0"}, {"1", "0"}, {"2", "0"}}));
    auto product = concrete_product({f, g}, c);
    for (ObjId a = 0 ; a < 3 ; ++a)
        CHECK(product.category->fibre(a).size() == f->fibre(a).size() * g->fibre(a).size());
    CHECK(product.category->total().object_name(0) == "<1{id_1},1{0<=1}>");
    REQUIRE(product.legs.size() == 2);
    for (auto & leg : product.legs)
        CHECK(compose(leg.target->forgetful, leg.functor) == product.category->forgetful);

    auto single = concrete_product({f}, c);
    CHECK(single.category->total() == f->total());

    auto empty = concrete_product({}, c);
    CHECK(empty.category->total() == *c);
    CHECK(empty.category->l_algebraic);
}

TEST_CASE("products mediate uniquely")
{
    auto c = chain3();
    auto f = alg_category(closure());
    auto product = concrete_product({f, f}, c);
    auto id = identity_functor(f->total_ptr());
    auto diagonal = mediate(product, {id, id}, f->forgetful);
    for (std::size_t d = 0 ; d < 2 ; ++d)
        CHECK(compose(product.legs[d].functor, diagonal) == id);
    CHECK(compose(product.category->forgetful, diagonal) == f->forgetful);
    CHECK_THROWS_AS(mediate(product, {id, id}, constant_functor(f->total_ptr(), c, 0)), PreconditionUnmet);
}

TEST_CASE("fibre equation without coproducts")
{
    auto u = corpus::two_plus_two();
    auto f = alg_category(identity_functor(u));
    auto g = alg_category(constant_functor(u, u, u->object("0")));
    auto product = concrete_product({f, g}, u);
    for (ObjId a = 0 ; a < u->num_objects() ; ++a)
        CHECK(product.category->fibre(a).size() == f->fibre(a).size() * g->fibre(a).size());
    CHECK(product.category->total().num_objects() == 2);
}

TEST_CASE("equalizers keep names")
{
    auto chain = chain3();
    auto alg_id = alg_category(identity_functor(chain));
    auto by_objects = [&] (std::vector<ObjId> objects) {
        return *concrete_functor_from_objects(alg_id, alg_id, objects);
    };
    auto id = by_objects({0, 1, 2});
    auto equalizer = concrete_equalizer(id, id);
    CHECK(equalizer.category->total() == alg_id->total());
    CHECK(equalizer.legs.at(0).functor == identity_functor(alg_id->total_ptr()));
}

TEST_CASE("limits of concrete diagrams")
{
    for (auto & instance : instances::limit_of_alg_instances()) {
        CAPTURE(instance.name);
        auto & limit = instance.limit;
        auto & shape = *instance.diagram.shape;
        // Cone condition: D(phi) . L_d = L_e and every leg is concrete.
        for (MorId phi = 0 ; phi < shape.num_morphisms() ; ++phi) {
            auto lhs = compose(instance.diagram.morphisms[phi].functor, limit.legs[shape.source(phi)].functor);
            CHECK(lhs == limit.legs[shape.target(phi)].functor);
        }
        // Oracle for posets: an object of the limit over A is a compatible choice of objects over A.
        for (ObjId a = 0 ; a < instance.diagram.base->num_objects() ; ++a) {
            std::size_t count = 0;
            std::function<void (ObjId, std::vector<ObjId> &)> choose = [&] (ObjId d, std::vector<ObjId> & picked) {
                if (d == shape.num_objects()) {
                    bool compatible = true;
                    for (MorId phi = 0 ; phi < shape.num_morphisms() ; ++phi)
                        compatible = compatible
                                && instance.diagram.morphisms[phi].functor.obj(picked[shape.source(phi)]) == picked[shape.target(phi)];
                    count += compatible;
                    return;
                }
                for (ObjId x : instance.diagram.objects[d]->fibre(a)) {
                    picked.push_back(x);
                    choose(d + 1, picked);
                    picked.pop_back();
                }
            };
            std::vector<ObjId> picked;
            choose(0, picked);
            CHECK(limit.category->fibre(a).size() == count);
        }
        auto l_alg = build_l_algebraic(instance.diagram);
        CHECK(l_alg.category->l_algebraic);
        CHECK(concretely_identical(*l_alg.category, *limit.category));
    }
}

TEST_CASE("l-algebraic construction needs algebra categories")
{
    auto d = make_concrete_diagram(chain3(), shape_category(Shape::terminal), {instances::upper_inclusion_concrete()}, {});
    CHECK_THROWS_AS(build_l_algebraic(d), NotFAlgebraic);
    CHECK_NOTHROW(concrete_limit(d));
}

TEST_CASE("diagrams must be functorial")
{
    auto alg_c = alg_category(closure());
    auto alg_id = alg_category(identity_functor(chain3()));
    auto inclusion = alg_of_transformation(all_nat_trans(identity_functor(chain3()), closure()).at(0), alg_c, alg_id);
    auto shape = shape_category(Shape::cospan);
    CHECK_THROWS_AS(make_concrete_diagram(chain3(), shape, {alg_c, alg_c, alg_id}, {{"l", inclusion}}), FunctorialityViolation);
    CHECK_THROWS_AS(make_concrete_diagram(chain3(), shape, {alg_c, alg_c, alg_id}, {{"l", inclusion}, {"r", identity_concrete_functor(alg_c)}}),
            FunctorialityViolation);
}

TEST_CASE("Beck checks")
{
    auto two_plus_two = is_beck(*instances::two_plus_two_concrete());
    CHECK(two_plus_two.beck);
    CHECK_FALSE(two_plus_two.scope.empty());

    CHECK(is_beck(*base_as_concrete(chain3())).beck);

    // {a, b} in the diamond misses the meet 0.
    auto diamond = corpus::diamond();
    auto pair = concrete(full_subcategory(diamond, {diamond->object("a"), diamond->object("b")}));
    auto verdict = is_beck(*pair);
    CHECK_FALSE(verdict.beck);
    bool product_failed = false;
    for (auto & c : verdict.checks)
        product_failed = product_failed || (! c.holds && c.name.find("discrete2") != std::string::npos);
    CHECK(product_failed);
}

TEST_CASE("algebra categories are Beck")
{
    for (auto & instance : corpus::seed_categories(3, 2)) {
        CAPTURE(instance.name);
        for (auto & f : all_endofunctors(instance.category))
            CHECK(is_beck(*alg_category(f)).beck);
    }
}

TEST_CASE("concrete isomorphism search")
{
    auto relabelled = corpus::poset({"x", "y", "z"}, {{0, 1}, {1, 2}});
    auto relabel = build_functor(relabelled, chain3(), {{"x", "0"}, {"y", "1"}, {"z", "2"}}, {});
    auto found = concrete_iso_search(concrete(relabel), base_as_concrete(chain3()));
    REQUIRE(found);
    CHECK(found->functor == relabel);
    CHECK_FALSE(concrete_iso_search(alg_category(closure()), base_as_concrete(chain3())));
}

TEST_CASE("copowers")
{
    CHECK(has_copowers(chain3()).exists);
    CHECK(has_copowers(corpus::diamond()).exists);
    CHECK_FALSE(has_copowers(corpus::two_plus_two()).exists);
    CHECK_FALSE(has_copowers(z2()).exists);
}

}
