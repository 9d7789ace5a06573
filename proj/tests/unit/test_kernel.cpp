#include "fixtures.hpp"

#include <kanex/enumerate.hpp>

#include <doctest.h>

using namespace kanex;
using namespace fixtures;

namespace {

// Independent law check straight off the composition table.
auto laws_hold(const FinCategory & c) -> bool
{
    int n = c.num_morphisms();
    for (int f = 0 ; f < n ; ++f) {
        if (c.compose(c.identity(c.target(f)), f) != f || c.compose(f, c.identity(c.source(f))) != f)
            return false;
        for (int g = 0 ; g < n ; ++g) {
            bool composable = c.target(f) == c.source(g);
            int gf = c.compose(g, f);
            if (composable != (gf != none))
                return false;
            if (gf != none && (c.source(gf) != c.source(f) || c.target(gf) != c.target(g)))
                return false;
            if (gf == none)
                continue;
            for (int h = 0 ; h < n ; ++h)
                if (c.target(g) == c.source(h) && c.compose(h, gf) != c.compose(c.compose(h, g), f))
                    return false;
        }
    }
    return true;
}

}

TEST_SUITE("kernel") {

TEST_CASE("the arrow category has one non-identity morphism")
{
    auto two = make_category({{"0", "1"}, {{"i", "0", "1"}}, {}});
    CHECK(two->num_objects() == 2);
    CHECK(two->num_morphisms() == 3);
    auto i = two->morphism("i");
    CHECK(two->source(i) == two->object("0"));
    CHECK(two->target(i) == two->object("1"));
    CHECK(two->compose(i, two->identity(0)) == i);
    CHECK(two->morphism_name(two->identity(1)) == "id_1");
}

TEST_CASE("a single object gives the terminal category")
{
    auto one = make_category({{"x"}, {}, {}});
    CHECK(one->num_objects() == 1);
    CHECK(one->num_morphisms() == 1);
    CHECK(one->is_identity(0));
}

TEST_CASE("two plus two has four objects and two arrows")
{
    auto c = corpus::two_plus_two();
    CHECK(c->num_objects() == 4);
    CHECK(c->num_morphisms() == 6);
    CHECK(c->hom(c->object("1"), c->object("0")).empty());
    CHECK(c->hom(c->object("0"), c->object("1'")).empty());
    CHECK(laws_hold(*c));
}

TEST_CASE("forced composites are filled in")
{
    auto c = make_category({{"a", "b"}, {{"f", "a", "b"}, {"g", "b", "a"}}, {}});
    CHECK(c->compose(c->morphism("g"), c->morphism("f")) == c->identity(c->object("a")));
    CHECK(c->compose(c->morphism("f"), c->morphism("g")) == c->identity(c->object("b")));
}

TEST_CASE("ambiguous omissions are reported")
{
    Presentation p{{"a", "b"}, {{"f", "a", "b"}, {"g", "b", "a"}, {"h", "a", "a"}}, {}};
    CHECK_THROWS_AS(build_category(p), MissingComposite);
}

TEST_CASE("non-associative tables are rejected with a witness")
{
    // Search the two-element tables on {id, a, b} with an independent associativity check and
    // feed the first failing one to the validator.
    bool tried = false;
    for (int mask = 0 ; mask < 81 && ! tried ; ++mask) {
        int t[3][3] = {{0, 1, 2}, {1, 0, 0}, {2, 0, 0}};
        int m = mask;
        for (int x = 1 ; x < 3 ; ++x)
            for (int y = 1 ; y < 3 ; ++y) {
                t[x][y] = m % 3;
                m /= 3;
            }
        bool associative = true;
        for (int x = 0 ; x < 3 ; ++x)
            for (int y = 0 ; y < 3 ; ++y)
                for (int z = 0 ; z < 3 ; ++z)
                    associative = associative && t[t[x][y]][z] == t[x][t[y][z]];
        if (associative)
            continue;
        const char * names[] = {"id_*", "a", "b"};
        Presentation p{{"*"}, {{"a", "*", "*"}, {"b", "*", "*"}}, {}};
        for (int x = 1 ; x < 3 ; ++x)
            for (int y = 1 ; y < 3 ; ++y)
                p.compositions.push_back({names[x], names[y], names[t[x][y]]});
        try {
            build_category(p);
            FAIL("non-associative table accepted");
        }
        catch (const LawViolation & e) {
            CHECK(e.witness().size() == 3);
        }
        tried = true;
    }
    CHECK(tried);
}

TEST_CASE("conflicting and ill-typed facts are rejected")
{
    CHECK_THROWS_AS(build_category({{"a", "b"}, {{"f", "a", "b"}}, {{"f", "f", "f"}}}), LawViolation);
    CHECK_THROWS_AS(build_category({{"a", "a"}, {}, {}}), LawViolation);
    CHECK_THROWS_AS(build_category({{"a"}, {{"f", "a", "z"}}, {}}), UnknownName);
}

TEST_CASE("identity, inclusion and closure functors validate")
{
    auto two = make_category({{"0", "1"}, {{"i", "0", "1"}}, {}});
    auto id = identity_functor(two);
    CHECK_FALSE(functoriality_failure(id));

    auto u = corpus::two_plus_two_inclusion();
    CHECK(u.target().object_name(u.obj(0)) == "0");
    CHECK(u.target().object_name(u.obj(1)) == "0'");

    auto c = closure();
    CHECK(c.obj(0) == 1);
    CHECK(c.obj(1) == 1);
    CHECK(c.obj(2) == 2);
    // monotonicity over the six order pairs x <= y, checked directly
    for (int x = 0 ; x < 3 ; ++x)
        for (int y = x ; y < 3 ; ++y)
            CHECK(c.obj(x) <= c.obj(y));
}

TEST_CASE("a non-monotone map is not a functor")
{
    auto chain = chain3();
    CHECK_THROWS_AS(build_functor(chain, chain, {{"0", "2"}, {"1", "0"}, {"2", "2"}}, {}), FunctorialityViolation);
    auto raw = identity_functor(chain);
    std::vector<MorId> bad(raw.morphism_map().begin(), raw.morphism_map().end());
    bad[chain->identity(0)] = chain->identity(1);
    CHECK_THROWS_AS(build_functor(chain, chain, {raw.object_map().begin(), raw.object_map().end()}, bad), FunctorialityViolation);
}

TEST_CASE("natural transformations on the chain")
{
    auto chain = chain3();
    auto id = identity_functor(chain);
    auto idt = identity_transformation(id);
    CHECK_FALSE(naturality_failure(idt));

    auto c = closure();
    std::vector<MorId> eta;
    for (int x = 0 ; x < 3 ; ++x) {
        REQUIRE(chain->hom(x, c.obj(x)).size() == 1);
        eta.push_back(chain->hom(x, c.obj(x))[0]);
    }
    auto t = build_nat_trans(id, c, eta);
    CHECK(all_nat_trans(id, c).size() == 1);
    CHECK(all_nat_trans(id, c)[0] == t);

    // the reverse direction c -> Id has no component at 0
    std::vector<MorId> reversed;
    for (int x = 0 ; x < 3 ; ++x)
        reversed.push_back(chain->identity(x));
    CHECK_THROWS_AS(build_nat_trans(c, id, reversed), NaturalitySquareViolation);
    CHECK(all_nat_trans(c, id).empty());
}

TEST_CASE("faithfulness verdicts")
{
    auto chain = chain3();
    CHECK(check_faithful(identity_functor(chain)).faithful);
    CHECK(check_faithful(corpus::two_plus_two_inclusion()).faithful);

    auto two = corpus::chain(2);
    auto collapse = constant_functor(two, terminal_category(), 0);
    CHECK(check_faithful(collapse).faithful);

    // a monoid collapsed to the trivial monoid is not faithful
    auto m = corpus::monoid({"id_*", "a"}, {{0, 1}, {1, 0}});
    auto squash = constant_functor(m, terminal_category(), 0);
    auto verdict = check_faithful(squash);
    CHECK_FALSE(verdict.faithful);
    REQUIRE(verdict.witness);
    CHECK(verdict.witness->first != verdict.witness->second);
}

TEST_CASE("opposite swaps sources and targets")
{
    auto chain = chain3();
    auto op = opposite(*chain);
    auto f = op.morphism("0<=1");
    CHECK(op.source(f) == op.object("1"));
    CHECK(op.target(f) == op.object("0"));
    CHECK(laws_hold(op));
    CHECK(opposite(op) == *chain);
}

TEST_CASE("every corpus category satisfies the category laws")
{
    auto seeds = corpus::seed_categories();
    CHECK(seeds.size() > 20);
    for (auto & instance : seeds) {
        CAPTURE(instance.name);
        CHECK(laws_hold(*instance.category));
        // rebuilding from the full presentation gives the same category
        CHECK(build_category(instance.category->presentation()) == *instance.category);
    }
}

TEST_CASE("corpus sizes match the known counts")
{
    // posets up to isomorphism: 1, 2, 5, 16; monoids: 1, 2, 7
    CHECK(corpus::all_posets(1).size() == 1);
    CHECK(corpus::all_posets(2).size() == 2);
    CHECK(corpus::all_posets(3).size() == 5);
    CHECK(corpus::all_posets(4).size() == 16);
    CHECK(corpus::all_monoids(1).size() == 1);
    CHECK(corpus::all_monoids(2).size() == 2);
    CHECK(corpus::all_monoids(3).size() == 7);
}

TEST_CASE("composites of functors and transformations stay valid")
{
    Budget budget;
    for (auto & instance : corpus::seed_categories(3, 3)) {
        CAPTURE(instance.name);
        auto endos = all_endofunctors(instance.category, budget);
        for (std::size_t i = 0 ; i < endos.size() && i < 6 ; ++i)
            for (std::size_t j = 0 ; j < endos.size() && j < 6 ; ++j) {
                auto gf = compose(endos[i], endos[j]);
                CHECK_FALSE(functoriality_failure(gf));
                CHECK(compose(gf, endos[i]) == compose(endos[i], compose(endos[j], endos[i])));
            }
        for (std::size_t i = 0 ; i < endos.size() && i < 4 ; ++i)
            for (std::size_t j = 0 ; j < endos.size() && j < 4 ; ++j) {
                auto as = all_nat_trans(endos[i], endos[j]);
                auto bs = all_nat_trans(endos[j], endos[i]);
                for (auto & a : as) {
                    CHECK_FALSE(naturality_failure(a));
                    for (auto & b : bs) {
                        CHECK_FALSE(naturality_failure(vertical(b, a)));
                        CHECK_FALSE(naturality_failure(horizontal(b, a)));
                        CHECK_FALSE(naturality_failure(whisker_left(endos[i], a)));
                        CHECK_FALSE(naturality_failure(whisker_right(a, endos[j])));
                    }
                }
            }
    }
}

TEST_CASE("enumeration respects the budget")
{
    auto big = corpus::discrete(7);
    CHECK_THROWS_AS(all_endofunctors(big, Budget{1000}), SearchSpaceExceeded);
    CHECK(all_endofunctors(corpus::chain(3)).size() == 10);
}

TEST_CASE("functor powers")
{
    FunctorPowers powers(closure());
    CHECK(powers[0] == identity_functor(chain3()));
    CHECK(powers[1] == closure());
    CHECK(powers[3] == closure());
}

TEST_CASE("subcategories keep names")
{
    auto u = upper_inclusion();
    CHECK(u.source().num_objects() == 2);
    CHECK(u.source().object_name(0) == "1");
    CHECK(u.source().find_morphism("1<=2"));
    CHECK(check_faithful(u).faithful);
}

}
