#include "fixtures.hpp"

#include <kanex/cli.hpp>
#include <kanex/dsl.hpp>
#include <kanex/instances.hpp>

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace kanex;
using namespace fixtures;

namespace {

auto read_data(const std::string & name) -> std::string
{
    std::ifstream in(std::string(KANEX_DATA_DIR) + "/" + name);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

auto error_of(const std::string & text) -> DslError
{
    try {
        parse(text, "t.cat");
    }
    catch (const DslError & e) {
        return e;
    }
    FAIL("no error for: " << text);
    throw;
}

/// Every entity of a equals the entity of the same name in b.
void check_same(const Workspace & a, const Workspace & b)
{
    REQUIRE(a.order == b.order);
    for (auto & [name, c] : a.categories)
        CHECK(*c == *b.categories.at(name));
    for (auto & [name, f] : a.functors)
        CHECK(f.functor == b.functors.at(name).functor);
    for (auto & [name, t] : a.transformations)
        CHECK(t.transformation == b.transformations.at(name).transformation);
    for (auto & [name, m] : a.monads)
        CHECK(m.monad == b.monads.at(name).monad);
    for (auto & [name, x] : a.concretes)
        CHECK(x.category->forgetful == b.concretes.at(name).category->forgetful);
    for (auto & [name, i] : a.identities) {
        auto & j = b.identities.at(name).identity;
        CHECK(i.identity.lhs == j.lhs);
        CHECK(i.identity.rhs == j.rhs);
        CHECK(i.identity.m == j.m);
        CHECK(i.identity.n == j.n);
    }
}

}

TEST_SUITE("dsl") {

TEST_CASE("shipped example files")
{
    CHECK(read_data("two_plus_two.cat") == shipped_two_plus_two());
    CHECK(read_data("chain_closure.cat") == shipped_chain_closure());

    auto w = parse(shipped_two_plus_two());
    CHECK(*w.category("C") == *corpus::two_plus_two());
    CHECK(w.functor("U") == corpus::two_plus_two_inclusion());
    CHECK(w.concrete("X")->total().num_objects() == 2);

    auto v = parse(shipped_chain_closure());
    CHECK(*v.category("Chain") == *chain3());
    CHECK(v.functor("c") == closure());
    CHECK(v.monad("M") == instances::chain_closure_monad());
    CHECK(v.functor("Incl") == upper_inclusion());
    CHECK(v.identity("unit_law").m == 1);
}

TEST_CASE("empty input")
{
    CHECK(parse("").empty());
    CHECK(parse("\n  # nothing\n// here\n").empty());
    CHECK(render(parse("")).empty());
}

TEST_CASE("forced parts may be omitted")
{
    auto w = parse("category P { objects: a, b, c; morphisms: f: a -> b, g: b -> c, h: a -> c }\n"
                   "functor K : P -> P { obj a => c; obj b => c; obj c => c }\n"
                   "nat k : Id_P => K {}\n");
    auto & p = *w.category("P");
    CHECK(p.compose(p.morphism("g"), p.morphism("f")) == p.morphism("h"));
    CHECK(w.transformation("k").at(p.object("a")) == p.morphism("h"));
    CHECK(w.functor("Id_P") == identity_functor(w.category("P")));
}

TEST_CASE("composition facts are required when not forced")
{
    auto e = error_of("category M {\n  objects: x\n  morphisms: a: x -> x\n}\n");
    CHECK(e.kind() == "MissingComposite");
    CHECK(e.location().file == "t.cat");
}

TEST_CASE("unknown references carry a location")
{
    auto e = error_of("category C {\n  objects: a, b\n  morphisms: f: a -> b\n  compose: f . g = f\n}\n");
    CHECK(e.kind() == "UnknownReference");
    CHECK(e.location().line == 4);
    CHECK(e.location().column == 16);
    CHECK(e.witness() == std::vector<std::string>{"g"});
    CHECK(std::string(e.what()).starts_with("t.cat:4:16: UnknownReference:"));

    CHECK(error_of("functor F : C -> C {}").kind() == "UnknownReference");
    CHECK(error_of("category C { objects: a }\nconcrete X { total: C; forgetful: V }").kind() == "UnknownReference");
}

TEST_CASE("engine errors are located")
{
    auto law = error_of("category M {\n  objects: x\n  morphisms: a: x -> x, b: x -> x\n"
                        "  compose: a . a = b, a . b = a, b . a = a, b . b = a\n}\n");
    CHECK(law.kind() == "LawViolation");
    CHECK(error_of("category C { objects: a }\ncategory C { objects: b }").kind() == "Redefinition");
    CHECK(error_of("category C { objects: a, a }").kind() == "Redefinition");
    CHECK(error_of("category C { objects: a b }").kind() == "SyntaxError");
    CHECK(error_of("category P { objects: a, b; morphisms: f: a -> b }\n"
                   "functor F : P -> P { obj a => b; obj b => a }").kind() == "FunctorialityViolation");
    CHECK(error_of("category P { objects: a, b; morphisms: f: a -> b }\n"
                   "functor K : P -> P { obj a => a; obj b => a }\n"
                   "nat k : Id_P => K {}").kind() == "MissingComposite");
    CHECK(error_of("category P { objects: a, b; morphisms: f: a -> b, g: a -> b }\n"
                   "category Q { objects: a }\n"
                   "functor F : P -> Q { obj a => a; obj b => a }\n"
                   "concrete X { total: P; forgetful: F }").kind() == "NotFaithful");
}

TEST_CASE("quoted names")
{
    CHECK(quote_name("x") == "x");
    CHECK(quote_name("0<=1") == "\"0<=1\"");
    CHECK(quote_name("a\"b") == "\"a\\\"b\"");
    auto w = parse("category \"my cat\" { objects: \"a b\", \"\\\\\" }");
    CHECK(w.category("my cat")->object_name(0) == "\\");
    auto again = parse(render(w));
    check_same(w, again);
}

TEST_CASE("render round trip on the shipped files")
{
    for (auto text : {shipped_two_plus_two(), shipped_chain_closure()}) {
        auto w = parse(text);
        auto rendered = render(w);
        auto again = parse(rendered);
        check_same(w, again);
        CHECK(render(again) == rendered);
    }
}

TEST_CASE("render round trip on the seed corpus")
{
    Workspace w;
    int index = 0;
    for (auto & instance : corpus::seed_categories(3, 2)) {
        auto name = "C" + std::to_string(index++);
        w.categories[name] = instance.category;
        w.order.emplace_back(Workspace::Kind::category, name);
        int count = 0;
        for (auto & f : all_endofunctors(instance.category)) {
            auto fname = name + "_F" + std::to_string(count++);
            w.functors[fname] = {f, name, name};
            w.order.emplace_back(Workspace::Kind::functor, fname);
        }
    }
    auto rendered = render(w);
    auto again = parse(rendered);
    check_same(w, again);
    CHECK(render(again) == rendered);
}

TEST_CASE("several files share one workspace")
{
    Workspace w;
    parse_into(w, "category C { objects: a }", "one.cat");
    parse_into(w, "functor F = Id_C", "two.cat");
    CHECK(w.functor("F") == identity_functor(w.category("C")));
    CHECK_THROWS_AS(parse_file("/nonexistent/file.cat"), DslError);
}

}
