#include <kanex/instances.hpp>

#include <kanex/enumerate.hpp>

namespace kanex::instances {

using std::string;
using std::vector;

auto chain3() -> CatPtr
{
    static const CatPtr c = corpus::chain(3);
    return c;
}

auto monotone_map(const CatPtr & poset, const vector<std::pair<string, string>> & images) -> Functor
{
    return build_functor(poset, poset, images, {});
}

auto chain_closure() -> Functor
{
    return monotone_map(chain3(), {{"0", "1"}, {"1", "1"}, {"2", "2"}});
}

auto chain_closure_monad() -> Monad
{
    auto c = chain_closure();
    auto id = identity_functor(chain3());
    return build_monad(c, all_nat_trans(id, c).at(0), all_nat_trans(compose(c, c), c).at(0));
}

auto two_plus_two_concrete() -> ConcretePtr
{
    return std::make_shared<const ConcreteCategory>(make_concrete(corpus::two_plus_two_inclusion()));
}

auto upper_inclusion_concrete() -> ConcretePtr
{
    return std::make_shared<const ConcreteCategory>(make_concrete(full_subcategory(chain3(), {1, 2})));
}

namespace {

auto monads_on(const vector<corpus::Instance> & categories) -> vector<NamedMonad>
{
    vector<NamedMonad> result;
    for (auto & instance : categories) {
        int k = 0;
        for (auto & m : all_monads(instance.category))
            result.push_back({instance.name + "/monad" + std::to_string(k++), m});
    }
    return result;
}

auto shared(ConcreteCategory category) -> ConcretePtr
{
    return std::make_shared<const ConcreteCategory>(std::move(category));
}

}

auto closure_monads(int max_size) -> vector<NamedMonad>
{
    vector<corpus::Instance> posets;
    for (int n = 1 ; n <= max_size ; ++n)
        for (auto & p : corpus::all_posets(n))
            posets.push_back(p);
    return monads_on(posets);
}

auto monoid_monads(int max_order) -> vector<NamedMonad>
{
    vector<corpus::Instance> monoids;
    for (int n = 2 ; n <= max_order ; ++n)
        for (auto & m : corpus::all_monoids(n))
            monoids.push_back(m);
    return monads_on(monoids);
}

auto concrete_corpus(int max_size, int max_order) -> vector<NamedConcrete>
{
    vector<NamedConcrete> result;
    for (auto & instance : corpus::seed_categories(max_size, max_order)) {
        auto & c = instance.category;
        result.push_back({instance.name + "/id", base_as_concrete(c)});

        int n = c->num_objects();
        for (int mask = 1 ; mask + 1 < (1 << n) ; ++mask) {
            vector<ObjId> keep;
            for (ObjId x = 0 ; x < n ; ++x)
                if (mask & (1 << x))
                    keep.push_back(x);
            string name = instance.name + "/sub{";
            for (std::size_t i = 0 ; i < keep.size() ; ++i)
                name += (i ? "," : "") + c->object_name(keep[i]);
            result.push_back({name + "}", shared(make_concrete(full_subcategory(c, keep)))});
        }

        int k = 0;
        for (auto & f : all_endofunctors(c))
            result.push_back({instance.name + "/alg" + std::to_string(k++), alg_category(f)});
        k = 0;
        for (auto & m : all_monads(c))
            result.push_back({instance.name + "/em" + std::to_string(k++), em_category(m)});
    }
    result.push_back({"two_plus_two/inclusion", two_plus_two_concrete()});
    return result;
}

namespace {

auto eta(const Functor & inflationary) -> NatTrans
{
    return all_nat_trans(identity_functor(inflationary.source_ptr()), inflationary).at(0);
}

auto limit_instance(string name, const CatPtr & base, Shape shape, vector<ConcretePtr> objects,
        const vector<std::pair<string, ConcreteFunctor>> & morphisms) -> LimitInstance
{
    auto diagram = make_concrete_diagram(base, shape_category(shape), std::move(objects), morphisms);
    auto limit = concrete_limit(diagram);
    auto s = identity_functor(limit.category->total_ptr());
    return {std::move(name), std::move(diagram), limit, s, limit.category->forgetful};
}

}

auto limit_of_alg_instances() -> vector<LimitInstance>
{
    vector<LimitInstance> result;

    auto chain = chain3();
    auto closure = chain_closure();
    auto top = monotone_map(chain, {{"0", "2"}, {"1", "2"}, {"2", "2"}});
    auto bottom = monotone_map(chain, {{"0", "0"}, {"1", "0"}, {"2", "0"}});
    auto alg_closure = alg_category(closure);
    auto alg_top = alg_category(top);
    auto alg_bottom = alg_category(bottom);
    auto alg_id = alg_category(identity_functor(chain));
    auto closure_in = alg_of_transformation(eta(closure), alg_closure, alg_id);
    auto top_in = alg_of_transformation(eta(top), alg_top, alg_id);

    result.push_back(limit_instance("chain/single", chain, Shape::terminal, {alg_closure}, {}));
    result.push_back(limit_instance("chain/product", chain, Shape::discrete2, {alg_closure, alg_bottom}, {}));
    result.push_back(limit_instance("chain/pullback", chain, Shape::cospan, {alg_closure, alg_closure, alg_id},
            {{"l", closure_in}, {"r", closure_in}}));
    result.push_back(limit_instance("chain/pullback-top", chain, Shape::cospan, {alg_closure, alg_top, alg_id},
            {{"l", closure_in}, {"r", top_in}}));
    result.push_back(limit_instance("chain/equalizer", chain, Shape::parallel_pair, {alg_closure, alg_id},
            {{"p", closure_in}, {"q", closure_in}}));

    auto diamond = corpus::diamond();
    auto join_a = monotone_map(diamond, {{"0", "a"}, {"a", "a"}, {"b", "1"}, {"1", "1"}});
    auto join_b = monotone_map(diamond, {{"0", "b"}, {"a", "1"}, {"b", "b"}, {"1", "1"}});
    auto alg_a = alg_category(join_a);
    auto alg_b = alg_category(join_b);
    auto alg_diamond_id = alg_category(identity_functor(diamond));
    result.push_back(limit_instance("diamond/product", diamond, Shape::discrete2, {alg_a, alg_b}, {}));
    result.push_back(limit_instance("diamond/pullback", diamond, Shape::cospan, {alg_a, alg_b, alg_diamond_id},
            {{"l", alg_of_transformation(eta(join_a), alg_a, alg_diamond_id)},
             {"r", alg_of_transformation(eta(join_b), alg_b, alg_diamond_id)}}));
    return result;
}

auto sum_instances() -> vector<SumInstance>
{
    vector<SumInstance> result;
    for (auto & [name, base] : {std::pair{string("chain"), chain3()}, std::pair{string("join_semilattice"), corpus::join_semilattice()}}) {
        auto endofunctors = all_endofunctors(base);
        for (std::size_t i = 0 ; i < endofunctors.size() ; ++i)
            for (std::size_t j = 0 ; j < endofunctors.size() ; ++j)
                result.push_back({name + "/" + std::to_string(i) + "+" + std::to_string(j), endofunctors[i], endofunctors[j]});
    }
    return result;
}

}
