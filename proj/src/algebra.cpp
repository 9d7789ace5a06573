#include <kanex/algebra.hpp>

#include <map>
#include <tuple>

namespace kanex {

using std::optional;
using std::string;
using std::vector;

auto is_algebra(const FAlgebra & a) -> bool
{
    auto & c = a.endofunctor.target();
    return a.structure >= 0 && a.structure < c.num_morphisms()
        && c.source(a.structure) == a.endofunctor.obj(a.carrier) && c.target(a.structure) == a.carrier;
}

auto algebra_name(const FinCategory & base, ObjId carrier, MorId structure) -> string
{
    return base.object_name(carrier) + "{" + base.morphism_name(structure) + "}";
}

auto all_algebras(const Functor & endofunctor) -> vector<FAlgebra>
{
    if (! endofunctor.is_endofunctor())
        throw PreconditionUnmet("algebras are defined for endofunctors only");
    auto & c = endofunctor.source();
    vector<FAlgebra> result;
    for (ObjId a = 0 ; a < c.num_objects() ; ++a)
        for (MorId alpha : c.hom(endofunctor.obj(a), a))
            result.push_back({endofunctor, a, alpha});
    return result;
}

auto alg_category(const Functor & endofunctor) -> ConcretePtr
{
    auto algebras = all_algebras(endofunctor);
    auto & c = endofunctor.source();
    auto & f = endofunctor;

    CategoryBuilder builder;
    vector<string> names;
    for (auto & a : algebras) {
        names.push_back(algebra_name(c, a.carrier, a.structure));
        builder.add_object(names.back());
    }

    vector<MorId> underlying(builder.num_morphisms());
    std::map<std::tuple<int, int, MorId>, int> morphism_of;
    for (int x = 0 ; x < builder.num_objects() ; ++x) {
        underlying[builder.identity(x)] = c.identity(algebras[x].carrier);
        morphism_of[{x, x, c.identity(algebras[x].carrier)}] = builder.identity(x);
    }
    const int n = static_cast<int>(algebras.size());
    for (int x = 0 ; x < n ; ++x)
        for (int y = 0 ; y < n ; ++y)
            for (MorId h : c.hom(algebras[x].carrier, algebras[y].carrier)) {
                if (x == y && c.is_identity(h))
                    continue;
                if (c.compose(h, algebras[x].structure) != c.compose(algebras[y].structure, f.mor(h)))
                    continue;
                int id = builder.add_morphism(c.morphism_name(h) + ":" + names[x] + "->" + names[y], x, y);
                morphism_of[{x, y, h}] = id;
                underlying.push_back(h);
            }

    auto built = builder.build([&] (int g, int h) {
        return morphism_of.at({builder.morphism_source(h), builder.morphism_target(g), c.compose(underlying[g], underlying[h])});
    });

    auto & total = *built.category;
    vector<ObjId> objects(total.num_objects());
    vector<MorId> morphisms(total.num_morphisms());
    AlgebraData data{endofunctor, vector<MorId>(total.num_objects())};
    for (int x = 0 ; x < n ; ++x) {
        objects[built.object_ids[x]] = algebras[x].carrier;
        data.structures[built.object_ids[x]] = algebras[x].structure;
    }
    for (int m = 0 ; m < builder.num_morphisms() ; ++m)
        morphisms[built.morphism_ids[m]] = underlying[m];

    auto result = make_concrete(build_functor(built.category, endofunctor.source_ptr(), std::move(objects), std::move(morphisms)));
    result.f_algebraic = true;
    result.l_algebraic = true;
    result.homogeneous = true;
    result.algebra = std::move(data);
    return std::make_shared<const ConcreteCategory>(std::move(result));
}

auto algebra_at(const ConcreteCategory & category, ObjId object) -> FAlgebra
{
    if (! category.algebra)
        throw PreconditionUnmet("category carries no algebra structure");
    return {category.algebra->endofunctor, category.forgetful.obj(object), category.algebra->structures[object]};
}

auto find_algebra(const ConcreteCategory & category, ObjId carrier, MorId structure) -> optional<ObjId>
{
    if (! category.algebra)
        throw PreconditionUnmet("category carries no algebra structure");
    for (ObjId x : category.fibre(carrier))
        if (category.algebra->structures[x] == structure)
            return x;
    return std::nullopt;
}

namespace
{
    auto lift_objects(const ConcretePtr & source, const ConcretePtr & target, const vector<ObjId> & objects,
            const string & what) -> ConcreteFunctor
    {
        auto f = concrete_functor_from_objects(source, target, objects);
        if (! f)
            throw LawViolation(what + " does not preserve algebra morphisms");
        return make_concrete_functor(source, target, f->functor);
    }

    auto same_maps(const Functor & a, const Functor & b) -> bool
    {
        return std::ranges::equal(a.object_map(), b.object_map()) && std::ranges::equal(a.morphism_map(), b.morphism_map());
    }
}

auto alg_of_transformation(const NatTrans & phi, const ConcretePtr & alg_source, const ConcretePtr & alg_target) -> ConcreteFunctor
{
    if (! alg_source->algebra || ! alg_target->algebra)
        throw PreconditionUnmet("Alg of a transformation needs algebra categories");
    if (! same_maps(alg_source->algebra->endofunctor, phi.target()) || ! same_maps(alg_target->algebra->endofunctor, phi.source()))
        throw PreconditionUnmet("transformation G -> F must run into the source endofunctor F");
    auto & c = phi.source().target();
    vector<ObjId> objects(alg_source->total().num_objects());
    for (ObjId x = 0 ; x < alg_source->total().num_objects() ; ++x) {
        auto a = algebra_at(*alg_source, x);
        auto image = find_algebra(*alg_target, a.carrier, c.compose(a.structure, phi.at(a.carrier)));
        if (! image)
            throw LawViolation("Alg phi has no image for " + alg_source->total().object_name(x));
        objects[x] = *image;
    }
    return lift_objects(alg_source, alg_target, objects, "Alg phi");
}

auto alg_of_transformation(const NatTrans & phi) -> ConcreteFunctor
{
    return alg_of_transformation(phi, alg_category(phi.target()), alg_category(phi.source()));
}

auto polymer(const FAlgebra & a, int n) -> MorId
{
    auto & c = a.endofunctor.target();
    MorId p = c.identity(a.carrier);
    for (int i = 0 ; i < n ; ++i)
        p = c.compose(a.structure, a.endofunctor.mor(p));
    return p;
}

auto polymer_functor(const ConcretePtr & alg, int n, const ConcretePtr & alg_power) -> ConcreteFunctor
{
    if (! alg->algebra || ! alg_power->algebra)
        throw PreconditionUnmet("polymer functors need algebra categories");
    FunctorPowers powers(alg->algebra->endofunctor);
    if (! same_maps(powers[n], alg_power->algebra->endofunctor))
        throw PreconditionUnmet("target is not the algebra category of F^" + std::to_string(n));
    vector<ObjId> objects(alg->total().num_objects());
    for (ObjId x = 0 ; x < alg->total().num_objects() ; ++x) {
        auto a = algebra_at(*alg, x);
        auto image = find_algebra(*alg_power, a.carrier, polymer(a, n));
        if (! image)
            throw LawViolation("polymer of " + alg->total().object_name(x) + " is not an algebra of F^" + std::to_string(n));
        objects[x] = *image;
    }
    return lift_objects(alg, alg_power, objects, "P_" + std::to_string(n));
}

auto polymer_functor(const ConcretePtr & alg, int n) -> ConcreteFunctor
{
    if (! alg->algebra)
        throw PreconditionUnmet("polymer functors need algebra categories");
    FunctorPowers powers(alg->algebra->endofunctor);
    return polymer_functor(alg, n, alg_category(powers[n]));
}

auto make_polymeric_identity(const Functor & endofunctor, NatTrans lhs, NatTrans rhs, int m, int n) -> PolymericIdentity
{
    if (m < 0 || n < 0)
        throw PreconditionUnmet("arities must be natural numbers");
    FunctorPowers powers(endofunctor);
    if (! same_maps(lhs.target(), powers[m]))
        throw PreconditionUnmet("left term does not land in F^" + std::to_string(m));
    if (! same_maps(rhs.target(), powers[n]))
        throw PreconditionUnmet("right term does not land in F^" + std::to_string(n));
    if (! same_maps(lhs.source(), rhs.source()))
        throw PreconditionUnmet("terms of a polymeric identity must share their domain");
    if (auto failure = naturality_failure(lhs))
        throw NaturalitySquareViolation(*failure);
    if (auto failure = naturality_failure(rhs))
        throw NaturalitySquareViolation(*failure);
    return PolymericIdentity{endofunctor, std::move(lhs), std::move(rhs), m, n};
}

auto satisfies_identity(const FAlgebra & a, const PolymericIdentity & identity) -> bool
{
    if (! same_maps(a.endofunctor, identity.endofunctor))
        throw PreconditionUnmet("identity is over a different endofunctor");
    auto & c = a.endofunctor.target();
    return c.compose(polymer(a, identity.m), identity.lhs.at(a.carrier))
        == c.compose(polymer(a, identity.n), identity.rhs.at(a.carrier));
}

auto polymeric_variety(const ConcretePtr & alg, const vector<PolymericIdentity> & identities) -> ConcretePtr
{
    vector<ObjId> keep;
    for (ObjId x = 0 ; x < alg->total().num_objects() ; ++x) {
        auto a = algebra_at(*alg, x);
        bool satisfied = true;
        for (auto & identity : identities)
            satisfied = satisfied && satisfies_identity(a, identity);
        if (satisfied)
            keep.push_back(x);
    }
    auto result = full_concrete_subcategory(*alg, keep).first;
    result.l_algebraic = true;
    result.single_induced = identities.size() <= 1;
    return std::make_shared<const ConcreteCategory>(std::move(result));
}

auto polymeric_variety(const Functor & endofunctor, const vector<PolymericIdentity> & identities) -> ConcretePtr
{
    return polymeric_variety(alg_category(endofunctor), identities);
}

auto em_identities(const Monad & monad) -> vector<PolymericIdentity>
{
    auto & m = monad.endofunctor;
    auto id = identity_functor(m.source_ptr());
    auto mm = compose(m, m);
    return {
        make_polymeric_identity(m, monad.unit, identity_transformation(id), 1, 0),
        make_polymeric_identity(m, identity_transformation(mm), monad.multiplication, 2, 1),
    };
}

auto em_category(const Monad & monad) -> ConcretePtr
{
    auto alg = alg_category(monad.endofunctor);
    auto & c = monad.endofunctor.target();
    auto & m = monad.endofunctor;
    vector<ObjId> keep;
    for (ObjId x = 0 ; x < alg->total().num_objects() ; ++x) {
        auto a = algebra_at(*alg, x);
        bool unit_law = c.compose(a.structure, monad.unit.at(a.carrier)) == c.identity(a.carrier);
        bool action_law = c.compose(a.structure, m.mor(a.structure)) == c.compose(a.structure, monad.multiplication.at(a.carrier));
        if (unit_law && action_law)
            keep.push_back(x);
    }
    auto result = full_concrete_subcategory(*alg, keep).first;
    result.l_algebraic = true;
    return std::make_shared<const ConcreteCategory>(std::move(result));
}

auto em_free(const Monad & monad, ObjId object) -> FAlgebra
{
    return {monad.endofunctor, monad.endofunctor.obj(object), monad.multiplication.at(object)};
}

auto free_adjunction(const Monad & monad, const ConcretePtr & em) -> Adjunction
{
    auto & c = monad.endofunctor.source();
    auto & m = monad.endofunctor;
    vector<ObjId> objects(c.num_objects());
    for (ObjId a = 0 ; a < c.num_objects() ; ++a) {
        auto free = em_free(monad, a);
        auto found = find_algebra(*em, free.carrier, free.structure);
        if (! found)
            throw LawViolation("free algebra on " + c.object_name(a) + " is not an Eilenberg-Moore algebra", {c.object_name(a)});
        objects[a] = *found;
    }
    vector<MorId> morphisms(c.num_morphisms());
    for (MorId h = 0 ; h < c.num_morphisms() ; ++h) {
        auto lifted = em->lift(objects[c.source(h)], objects[c.target(h)], m.mor(h));
        if (! lifted)
            throw LawViolation("M " + c.morphism_name(h) + " is not an algebra morphism between free algebras");
        morphisms[h] = *lifted;
    }
    auto left = build_functor(m.source_ptr(), em->total_ptr(), std::move(objects), std::move(morphisms));
    auto & right = em->forgetful;

    vector<MorId> unit(monad.unit.components().begin(), monad.unit.components().end());
    vector<MorId> counit(em->total().num_objects());
    for (ObjId x = 0 ; x < em->total().num_objects() ; ++x) {
        auto a = algebra_at(*em, x);
        auto lifted = em->lift(left.obj(a.carrier), x, a.structure);
        if (! lifted)
            throw LawViolation("structure of " + em->total().object_name(x) + " is not an algebra morphism");
        counit[x] = *lifted;
    }
    Adjunction adj{left, right,
        build_nat_trans(identity_functor(m.source_ptr()), compose(right, left), std::move(unit)),
        build_nat_trans(compose(left, right), identity_functor(em->total_ptr()), std::move(counit))};
    if (! triangle_identities_hold(adj))
        throw LawViolation("free algebra adjunction violates a triangle identity");
    return adj;
}

auto sum_endofunctor(const Functor & first, const Functor & second) -> optional<Functor>
{
    auto & c = first.source();
    auto shape = shape_category(Shape::discrete2);
    vector<Cone> sums(c.num_objects());
    for (ObjId a = 0 ; a < c.num_objects() ; ++a) {
        auto pair = build_functor(shape, first.source_ptr(),
                {{"0", c.object_name(first.obj(a))}, {"1", c.object_name(second.obj(a))}}, {});
        auto sum = colimit(pair);
        if (! sum)
            return std::nullopt;
        sums[a] = *sum;
    }
    vector<ObjId> objects(c.num_objects());
    for (ObjId a = 0 ; a < c.num_objects() ; ++a)
        objects[a] = sums[a].apex;
    vector<MorId> morphisms(c.num_morphisms());
    for (MorId h = 0 ; h < c.num_morphisms() ; ++h) {
        auto & from = sums[c.source(h)];
        auto & to = sums[c.target(h)];
        MorId left = c.compose(to.legs[0], first.mor(h));
        MorId right = c.compose(to.legs[1], second.mor(h));
        vector<MorId> mediating;
        for (MorId k : c.hom(from.apex, to.apex))
            if (c.compose(k, from.legs[0]) == left && c.compose(k, from.legs[1]) == right)
                mediating.push_back(k);
        if (mediating.size() != 1)
            throw LawViolation("coproduct does not induce a unique morphism for " + c.morphism_name(h));
        morphisms[h] = mediating[0];
    }
    return build_functor(first.source_ptr(), first.source_ptr(), std::move(objects), std::move(morphisms));
}

}
