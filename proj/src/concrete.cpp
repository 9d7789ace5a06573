#include <kanex/concrete.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace kanex {

using std::optional;
using std::string;
using std::vector;

auto ConcreteCategory::fibre(ObjId base_object) const -> vector<ObjId>
{
    vector<ObjId> result;
    for (ObjId x = 0 ; x < total().num_objects() ; ++x)
        if (forgetful.obj(x) == base_object)
            result.push_back(x);
    return result;
}

auto ConcreteCategory::lift(ObjId x, ObjId y, MorId h) const -> optional<MorId>
{
    for (MorId m : total().hom(x, y))
        if (forgetful.mor(m) == h)
            return m;
    return std::nullopt;
}

auto make_concrete(Functor forgetful) -> ConcreteCategory
{
    auto verdict = check_faithful(forgetful);
    if (! verdict.faithful) {
        auto & c = forgetful.source();
        auto [f, g] = *verdict.witness;
        throw NotFaithful("forgetful functor identifies " + c.morphism_name(f) + " and " + c.morphism_name(g),
                {c.morphism_name(f), c.morphism_name(g)});
    }
    ConcreteCategory result;
    result.forgetful = std::move(forgetful);
    return result;
}

auto base_as_concrete(const CatPtr & base) -> ConcretePtr
{
    auto result = make_concrete(identity_functor(base));
    result.l_algebraic = true;
    return std::make_shared<const ConcreteCategory>(std::move(result));
}

auto concretely_identical(const ConcreteCategory & a, const ConcreteCategory & b) -> bool
{
    return a.total() == b.total() && a.base() == b.base()
        && std::ranges::equal(a.forgetful.object_map(), b.forgetful.object_map())
        && std::ranges::equal(a.forgetful.morphism_map(), b.forgetful.morphism_map());
}

auto make_concrete_functor(ConcretePtr source, ConcretePtr target, Functor functor) -> ConcreteFunctor
{
    if (! (functor.source() == source->total()) || ! (functor.target() == target->total()))
        throw NotConcrete("functor does not run between the given total categories");
    if (! (source->base() == target->base()))
        throw NotConcrete("concrete categories have different bases");
    if (auto failure = functoriality_failure(functor))
        throw FunctorialityViolation(*failure);
    auto & s = source->total();
    for (ObjId x = 0 ; x < s.num_objects() ; ++x)
        if (target->forgetful.obj(functor.obj(x)) != source->forgetful.obj(x))
            throw NotConcrete("object " + s.object_name(x) + " changes its underlying object", {s.object_name(x)});
    for (MorId f = 0 ; f < s.num_morphisms() ; ++f)
        if (target->forgetful.mor(functor.mor(f)) != source->forgetful.mor(f))
            throw NotConcrete("morphism " + s.morphism_name(f) + " changes its underlying morphism", {s.morphism_name(f)});
    return ConcreteFunctor{std::move(source), std::move(target), std::move(functor)};
}

auto identity_concrete_functor(const ConcretePtr & category) -> ConcreteFunctor
{
    return ConcreteFunctor{category, category, identity_functor(category->total_ptr())};
}

auto compose(const ConcreteFunctor & after, const ConcreteFunctor & before) -> ConcreteFunctor
{
    return ConcreteFunctor{before.source, after.target, compose(after.functor, before.functor)};
}

auto concrete_functor_from_objects(const ConcretePtr & source, const ConcretePtr & target,
        const vector<ObjId> & objects) -> optional<ConcreteFunctor>
{
    auto & s = source->total();
    for (ObjId x = 0 ; x < s.num_objects() ; ++x)
        if (target->forgetful.obj(objects[x]) != source->forgetful.obj(x))
            return std::nullopt;
    vector<MorId> morphisms(s.num_morphisms());
    for (MorId f = 0 ; f < s.num_morphisms() ; ++f) {
        auto lifted = target->lift(objects[s.source(f)], objects[s.target(f)], source->forgetful.mor(f));
        if (! lifted)
            return std::nullopt;
        morphisms[f] = *lifted;
    }
    // Lifts along a faithful functor compose and preserve identities automatically.
    return ConcreteFunctor{source, target,
        Functor::unchecked(source->total_ptr(), target->total_ptr(), objects, std::move(morphisms))};
}

void for_each_concrete_functor(const ConcretePtr & source, const ConcretePtr & target, const Budget & budget,
        const std::function<bool (const ConcreteFunctor &)> & visit)
{
    auto & s = source->total();
    const int n = s.num_objects();
    vector<vector<ObjId>> candidates(n);
    for (ObjId x = 0 ; x < n ; ++x)
        candidates[x] = target->fibre(source->forgetful.obj(x));

    vector<ObjId> objects(n, none);
    std::uint64_t nodes = 0;
    bool stop = false;
    std::function<void (ObjId)> assign = [&] (ObjId x) {
        if (x == n) {
            if (auto f = concrete_functor_from_objects(source, target, objects))
                stop = ! visit(*f);
            return;
        }
        for (ObjId y : candidates[x]) {
            if (++nodes > budget.max_candidates)
                throw SearchSpaceExceeded("concrete functor search exceeded " + std::to_string(budget.max_candidates) + " steps");
            objects[x] = y;
            bool ok = true;
            for (ObjId p = 0 ; p <= x && ok ; ++p) {
                for (MorId f : s.hom(p, x))
                    ok = ok && target->lift(objects[p], y, source->forgetful.mor(f)).has_value();
                for (MorId f : s.hom(x, p))
                    ok = ok && target->lift(y, objects[p], source->forgetful.mor(f)).has_value();
            }
            if (ok)
                assign(x + 1);
            if (stop)
                return;
        }
        objects[x] = none;
    };
    assign(0);
}

namespace
{
    auto tuple_name(const vector<string> & parts) -> string
    {
        if (parts.size() == 1)
            return parts[0];
        string out = "<";
        for (std::size_t i = 0 ; i < parts.size() ; ++i)
            out += (i ? "," : "") + parts[i];
        return out + ">";
    }

    auto carries_limit_tag(const ConcreteCategory & c) -> bool
    {
        return c.f_algebraic || c.l_algebraic;
    }
}

auto restrict_concrete(const ConcreteCategory & category, const vector<bool> & keep_objects, const vector<bool> & keep_morphisms)
        -> std::pair<ConcreteCategory, Functor>
{
    auto inclusion = subcategory(category.total_ptr(), keep_objects, keep_morphisms);
    auto result = make_concrete(compose(category.forgetful, inclusion));
    if (category.algebra) {
        AlgebraData data{category.algebra->endofunctor, {}};
        for (ObjId x = 0 ; x < inclusion.source().num_objects() ; ++x)
            data.structures.push_back(category.algebra->structures[inclusion.obj(x)]);
        result.algebra = std::move(data);
    }
    return {std::move(result), std::move(inclusion)};
}

auto full_concrete_subcategory(const ConcreteCategory & category, const vector<ObjId> & objects)
        -> std::pair<ConcreteCategory, Functor>
{
    auto & total = category.total();
    vector<bool> keep_objects(total.num_objects(), false), keep_morphisms(total.num_morphisms(), false);
    for (ObjId x : objects)
        keep_objects[x] = true;
    for (MorId f = 0 ; f < total.num_morphisms() ; ++f)
        keep_morphisms[f] = keep_objects[total.source(f)] && keep_objects[total.target(f)];
    return restrict_concrete(category, keep_objects, keep_morphisms);
}

auto concrete_product(const vector<ConcretePtr> & factors, const CatPtr & base) -> ConcreteCone
{
    if (factors.empty())
        return ConcreteCone{base_as_concrete(base), {}};
    for (auto & f : factors)
        if (! (f->base() == *base))
            throw NotConcrete("product factors have different bases");

    auto & c = *base;
    const std::size_t k = factors.size();
    CategoryBuilder builder;
    vector<vector<ObjId>> tuples;
    vector<ObjId> over;
    for (ObjId a = 0 ; a < c.num_objects() ; ++a) {
        vector<vector<ObjId>> fibres;
        for (auto & f : factors)
            fibres.push_back(f->fibre(a));
        vector<ObjId> current(k);
        std::function<void (std::size_t)> expand = [&] (std::size_t i) {
            if (i == k) {
                vector<string> parts;
                for (std::size_t j = 0 ; j < k ; ++j)
                    parts.push_back(factors[j]->total().object_name(current[j]));
                builder.add_object(tuple_name(parts));
                tuples.push_back(current);
                over.push_back(a);
                return;
            }
            for (ObjId x : fibres[i]) {
                current[i] = x;
                expand(i + 1);
            }
        };
        expand(0);
    }

    // builder morphism id -> components in the factors and the underlying base morphism
    vector<vector<MorId>> by_id(builder.num_morphisms());
    vector<MorId> underlying_by_id(builder.num_morphisms());
    std::map<std::tuple<int, int, MorId>, int> morphism_of;
    for (int x = 0 ; x < builder.num_objects() ; ++x) {
        int id = builder.identity(x);
        for (std::size_t j = 0 ; j < k ; ++j)
            by_id[id].push_back(factors[j]->total().identity(tuples[x][j]));
        underlying_by_id[id] = c.identity(over[x]);
        morphism_of[{x, x, c.identity(over[x])}] = id;
    }

    for (int x = 0 ; x < static_cast<int>(tuples.size()) ; ++x)
        for (int y = 0 ; y < static_cast<int>(tuples.size()) ; ++y)
            for (MorId h : c.hom(over[x], over[y])) {
                if (x == y && c.is_identity(h))
                    continue;
                vector<MorId> parts;
                vector<string> names;
                for (std::size_t j = 0 ; j < k ; ++j) {
                    auto lifted = factors[j]->lift(tuples[x][j], tuples[y][j], h);
                    if (! lifted)
                        break;
                    parts.push_back(*lifted);
                    names.push_back(factors[j]->total().morphism_name(*lifted));
                }
                if (parts.size() != k)
                    continue;
                int id = builder.add_morphism(tuple_name(names), x, y);
                morphism_of[{x, y, h}] = id;
                by_id.push_back(parts);
                underlying_by_id.push_back(h);
            }

    auto built = builder.build([&] (int g, int f) {
        return morphism_of.at({builder.morphism_source(f), builder.morphism_target(g),
                c.compose(underlying_by_id[g], underlying_by_id[f])});
    });

    auto & total = *built.category;
    vector<ObjId> forget_objects(total.num_objects());
    vector<MorId> forget_morphisms(total.num_morphisms());
    vector<vector<ObjId>> leg_objects(k, vector<ObjId>(total.num_objects()));
    vector<vector<MorId>> leg_morphisms(k, vector<MorId>(total.num_morphisms()));
    for (int x = 0 ; x < builder.num_objects() ; ++x) {
        ObjId id = built.object_ids[x];
        forget_objects[id] = over[x];
        for (std::size_t j = 0 ; j < k ; ++j)
            leg_objects[j][id] = tuples[x][j];
    }
    for (int m = 0 ; m < builder.num_morphisms() ; ++m) {
        MorId id = built.morphism_ids[m];
        forget_morphisms[id] = underlying_by_id[m];
        for (std::size_t j = 0 ; j < k ; ++j)
            leg_morphisms[j][id] = by_id[m][j];
    }

    auto product = make_concrete(build_functor(built.category, base, std::move(forget_objects), std::move(forget_morphisms)));
    product.l_algebraic = std::ranges::all_of(factors, [] (auto & f) { return carries_limit_tag(*f); });
    auto category = std::make_shared<const ConcreteCategory>(std::move(product));

    ConcreteCone cone{category, {}};
    for (std::size_t j = 0 ; j < k ; ++j)
        cone.legs.push_back(make_concrete_functor(category, factors[j],
                    build_functor(built.category, factors[j]->total_ptr(), std::move(leg_objects[j]), std::move(leg_morphisms[j]))));
    return cone;
}

auto concrete_equalizer(const ConcreteFunctor & first, const ConcreteFunctor & second) -> ConcreteCone
{
    if (! (first.functor.source() == second.functor.source()) || ! (first.functor.target() == second.functor.target()))
        throw NotConcrete("equalizer of non-parallel concrete functors");
    auto & x = *first.source;
    auto & total = x.total();
    vector<bool> keep_objects(total.num_objects()), keep_morphisms(total.num_morphisms());
    for (ObjId a = 0 ; a < total.num_objects() ; ++a)
        keep_objects[a] = first.functor.obj(a) == second.functor.obj(a);
    for (MorId f = 0 ; f < total.num_morphisms() ; ++f)
        keep_morphisms[f] = keep_objects[total.source(f)] && keep_objects[total.target(f)]
            && first.functor.mor(f) == second.functor.mor(f);
    auto [restricted, inclusion] = restrict_concrete(x, keep_objects, keep_morphisms);
    restricted.l_algebraic = carries_limit_tag(x) && carries_limit_tag(*first.target);
    auto category = std::make_shared<const ConcreteCategory>(std::move(restricted));
    return ConcreteCone{category, {make_concrete_functor(category, first.source, std::move(inclusion))}};
}

auto make_concrete_diagram(const CatPtr & base, const CatPtr & shape, vector<ConcretePtr> objects,
        const vector<std::pair<string, ConcreteFunctor>> & morphisms) -> ConcreteDiagram
{
    auto & s = *shape;
    if (static_cast<int>(objects.size()) != s.num_objects())
        throw FunctorialityViolation("diagram does not assign every shape object");
    ConcreteDiagram d{base, shape, std::move(objects), vector<ConcreteFunctor>(s.num_morphisms())};
    vector<bool> assigned(s.num_morphisms(), false);
    for (ObjId a = 0 ; a < s.num_objects() ; ++a) {
        d.morphisms[s.identity(a)] = identity_concrete_functor(d.objects[a]);
        assigned[s.identity(a)] = true;
    }
    for (auto & [name, functor] : morphisms) {
        MorId phi = s.morphism(name);
        d.morphisms[phi] = functor;
        assigned[phi] = true;
    }
    for (MorId phi = 0 ; phi < s.num_morphisms() ; ++phi) {
        if (! assigned[phi])
            throw FunctorialityViolation("shape morphism " + s.morphism_name(phi) + " is not assigned", {s.morphism_name(phi)});
        auto & f = d.morphisms[phi];
        if (! (f.source->total() == d.objects[s.source(phi)]->total()) || ! (f.target->total() == d.objects[s.target(phi)]->total()))
            throw FunctorialityViolation("shape morphism " + s.morphism_name(phi) + " has the wrong type", {s.morphism_name(phi)});
    }
    for (MorId g = 0 ; g < s.num_morphisms() ; ++g)
        for (MorId f = 0 ; f < s.num_morphisms() ; ++f) {
            MorId gf = s.compose(g, f);
            if (gf == none)
                continue;
            auto composite = compose(d.morphisms[g].functor, d.morphisms[f].functor);
            if (! std::ranges::equal(composite.object_map(), d.morphisms[gf].functor.object_map())
                    || ! std::ranges::equal(composite.morphism_map(), d.morphisms[gf].functor.morphism_map()))
                throw FunctorialityViolation("diagram does not preserve " + s.morphism_name(g) + " . " + s.morphism_name(f),
                        {s.morphism_name(g), s.morphism_name(f)});
        }
    return d;
}

auto concrete_limit(const ConcreteDiagram & diagram) -> ConcreteCone
{
    auto product = concrete_product(diagram.objects, diagram.base);
    auto & s = *diagram.shape;
    bool discrete = true;
    for (MorId phi = 0 ; phi < s.num_morphisms() ; ++phi)
        discrete = discrete && s.is_identity(phi);
    if (discrete)
        return product;

    auto & p = *product.category;
    auto & total = p.total();
    vector<bool> keep_objects(total.num_objects(), true), keep_morphisms(total.num_morphisms(), true);
    for (MorId phi = 0 ; phi < s.num_morphisms() ; ++phi) {
        if (s.is_identity(phi))
            continue;
        auto & d_phi = diagram.morphisms[phi].functor;
        auto & from = product.legs[s.source(phi)].functor;
        auto & to = product.legs[s.target(phi)].functor;
        for (ObjId x = 0 ; x < total.num_objects() ; ++x)
            keep_objects[x] = keep_objects[x] && d_phi.obj(from.obj(x)) == to.obj(x);
        for (MorId f = 0 ; f < total.num_morphisms() ; ++f)
            keep_morphisms[f] = keep_morphisms[f] && d_phi.mor(from.mor(f)) == to.mor(f);
    }
    for (MorId f = 0 ; f < total.num_morphisms() ; ++f)
        keep_morphisms[f] = keep_morphisms[f] && keep_objects[total.source(f)] && keep_objects[total.target(f)];

    auto [restricted, inclusion] = restrict_concrete(p, keep_objects, keep_morphisms);
    restricted.l_algebraic = p.l_algebraic;
    auto category = std::make_shared<const ConcreteCategory>(std::move(restricted));
    auto leg_in = make_concrete_functor(category, product.category, std::move(inclusion));
    ConcreteCone cone{category, {}};
    for (auto & leg : product.legs)
        cone.legs.push_back(compose(leg, leg_in));
    return cone;
}

auto mediate(const ConcreteCone & cone, const vector<Functor> & components, const Functor & base_component) -> Functor
{
    auto & limit = *cone.category;
    auto & l = limit.total();
    auto & b = base_component.source();
    vector<ObjId> objects(b.num_objects(), none);
    for (ObjId x = 0 ; x < b.num_objects() ; ++x)
        for (ObjId y : limit.fibre(base_component.obj(x))) {
            bool matches = true;
            for (std::size_t d = 0 ; d < cone.legs.size() && matches ; ++d)
                matches = cone.legs[d].functor.obj(y) == components[d].obj(x);
            if (matches) {
                objects[x] = y;
                break;
            }
        }
    for (ObjId x = 0 ; x < b.num_objects() ; ++x)
        if (objects[x] == none)
            throw PreconditionUnmet("components at " + b.object_name(x) + " are not a compatible family", {b.object_name(x)});
    vector<MorId> morphisms(b.num_morphisms());
    for (MorId f = 0 ; f < b.num_morphisms() ; ++f) {
        auto lifted = limit.lift(objects[b.source(f)], objects[b.target(f)], base_component.mor(f));
        bool matches = lifted.has_value();
        for (std::size_t d = 0 ; d < cone.legs.size() && matches ; ++d)
            matches = cone.legs[d].functor.mor(*lifted) == components[d].mor(f);
        if (! matches)
            throw PreconditionUnmet("components at " + b.morphism_name(f) + " are not a compatible family", {b.morphism_name(f)});
        morphisms[f] = *lifted;
    }
    (void) l;
    return build_functor(base_component.source_ptr(), limit.total_ptr(), std::move(objects), std::move(morphisms));
}

auto has_weakly_initial_object(const FinCategory & shape) -> bool
{
    for (ObjId d = 0 ; d < shape.num_objects() ; ++d) {
        bool reaches = true;
        for (ObjId e = 0 ; e < shape.num_objects() && reaches ; ++e)
            reaches = ! shape.hom(d, e).empty();
        if (reaches)
            return true;
    }
    return false;
}

auto build_l_algebraic(const ConcreteDiagram & diagram) -> ConcreteCone
{
    auto & s = *diagram.shape;
    for (ObjId d = 0 ; d < s.num_objects() ; ++d)
        if (! diagram.objects[d]->f_algebraic || ! diagram.objects[d]->algebra)
            throw NotFAlgebraic("diagram object " + s.object_name(d) + " is not an algebra category", {s.object_name(d)});

    auto cone = concrete_limit(diagram);
    auto & limit = *cone.category;
    auto & c = *diagram.base;

    // Re-derive the objects as compatible families of structures, fibre by fibre.
    for (ObjId a = 0 ; a < c.num_objects() ; ++a) {
        std::set<vector<ObjId>> families;
        vector<ObjId> current(s.num_objects());
        std::function<void (ObjId)> expand = [&] (ObjId d) {
            if (d == s.num_objects()) {
                for (MorId phi = 0 ; phi < s.num_morphisms() ; ++phi)
                    if (diagram.morphisms[phi].functor.obj(current[s.source(phi)]) != current[s.target(phi)])
                        return;
                families.insert(current);
                return;
            }
            for (ObjId x : diagram.objects[d]->fibre(a)) {
                current[d] = x;
                expand(d + 1);
            }
        };
        expand(0);
        std::set<vector<ObjId>> found;
        for (ObjId y : limit.fibre(a)) {
            vector<ObjId> family;
            for (auto & leg : cone.legs)
                family.push_back(leg.functor.obj(y));
            found.insert(family);
        }
        if (found != families)
            throw LawViolation("limit objects over " + c.object_name(a) + " are not the compatible structure families",
                    {c.object_name(a)});
    }

    auto tagged = limit;
    tagged.l_algebraic = true;
    tagged.homogeneous = has_weakly_initial_object(s);
    auto category = std::make_shared<const ConcreteCategory>(std::move(tagged));
    for (auto & leg : cone.legs)
        leg.source = category;
    cone.category = category;
    return cone;
}

namespace
{
    auto describe_functor(const Functor & d) -> string
    {
        string out = "[";
        for (ObjId a = 0 ; a < d.source().num_objects() ; ++a)
            out += (a ? ", " : "") + d.target().object_name(d.obj(a));
        return out + "]";
    }
}

auto is_beck(const ConcreteCategory & category, const vector<Shape> & shapes) -> BeckVerdict
{
    BeckVerdict verdict;
    auto & u = category.forgetful;
    auto & total = category.total();
    auto & base = category.base();

    verdict.scope = "strict creation of limits of shapes";
    for (auto shape : shapes)
        verdict.scope += " " + shape_name(shape);
    verdict.scope += "; U-absolute pairs restricted to pairs split in the base";

    for (auto shape : shapes) {
        BeckCheck check{"limits of shape " + shape_name(shape), true, true, ""};
        for_each_functor(shape_category(shape), category.total_ptr(), Budget{}, [&] (const Functor & d) {
            auto created = creates_limit(u, d);
            check.vacuous = check.vacuous && created.vacuous;
            if (! created.holds) {
                check.holds = false;
                check.witness = "diagram " + describe_functor(d) + ": " + created.witness;
                return false;
            }
            return true;
        });
        verdict.beck = verdict.beck && check.holds;
        verdict.checks.push_back(std::move(check));
    }

    BeckCheck forks{"coequalizers of split pairs", true, true, ""};
    for (MorId f = 0 ; f < total.num_morphisms() && forks.holds ; ++f)
        for (MorId g : total.hom(total.source(f), total.target(f))) {
            auto split = split_forks(base, u.mor(f), u.mor(g));
            if (split.empty())
                continue;
            vector<Cone> cocones;
            std::set<MorId> seen;
            for (auto & fork : split)
                if (seen.insert(fork.coequalizer).second)
                    cocones.push_back(Cone{base.target(fork.coequalizer),
                            {base.compose(fork.coequalizer, u.mor(f)), fork.coequalizer}});
            auto created = creates_colimit(u, parallel_pair_diagram(category.total_ptr(), f, g), cocones);
            forks.vacuous = false;
            if (! created.holds) {
                forks.holds = false;
                forks.witness = "pair (" + total.morphism_name(f) + ", " + total.morphism_name(g) + "): " + created.witness;
                break;
            }
        }
    verdict.beck = verdict.beck && forks.holds;
    verdict.checks.push_back(std::move(forks));
    return verdict;
}

auto concrete_iso_search(const ConcretePtr & first, const ConcretePtr & second, const Budget & budget)
        -> optional<ConcreteFunctor>
{
    if (! (first->base() == second->base()))
        return std::nullopt;
    auto & x = first->total();
    auto & y = second->total();
    if (x.num_objects() != y.num_objects() || x.num_morphisms() != y.num_morphisms())
        return std::nullopt;
    for (ObjId a = 0 ; a < first->base().num_objects() ; ++a)
        if (first->fibre(a).size() != second->fibre(a).size())
            return std::nullopt;

    const int n = x.num_objects();
    vector<ObjId> objects(n, none);
    vector<bool> used(n, false);
    std::uint64_t nodes = 0;
    auto compatible = [&] (ObjId p, ObjId q) {
        auto from = x.hom(p, q);
        auto to = y.hom(objects[p], objects[q]);
        if (from.size() != to.size())
            return false;
        for (MorId f : from)
            if (! second->lift(objects[p], objects[q], first->forgetful.mor(f)))
                return false;
        return true;
    };
    std::function<bool (ObjId)> assign = [&] (ObjId p) {
        if (p == n)
            return true;
        for (ObjId q : second->fibre(first->forgetful.obj(p))) {
            if (used[q])
                continue;
            if (++nodes > budget.max_candidates)
                throw SearchSpaceExceeded("isomorphism search exceeded " + std::to_string(budget.max_candidates) + " steps");
            objects[p] = q;
            bool ok = true;
            for (ObjId r = 0 ; r <= p && ok ; ++r)
                ok = compatible(r, p) && compatible(p, r);
            if (ok) {
                used[q] = true;
                if (assign(p + 1))
                    return true;
                used[q] = false;
            }
        }
        objects[p] = none;
        return false;
    };
    if (! assign(0))
        return std::nullopt;
    auto functor = concrete_functor_from_objects(first, second, objects);
    return make_concrete_functor(first, second, functor->functor);
}

auto has_copowers(const CatPtr & category) -> CopowerVerdict
{
    auto & c = *category;
    std::size_t largest = 0;
    for (ObjId a = 0 ; a < c.num_objects() ; ++a)
        for (ObjId b = 0 ; b < c.num_objects() ; ++b)
            largest = std::max(largest, c.hom(a, b).size());
    CopowerVerdict verdict;
    verdict.max_multiplicity = static_cast<int>(std::max<std::size_t>(2, largest));
    for (int k = 0 ; k <= verdict.max_multiplicity ; ++k) {
        Presentation p;
        for (int i = 0 ; i < k ; ++i)
            p.objects.push_back(std::to_string(i));
        auto shape = make_category(p);
        for (ObjId a = 0 ; a < c.num_objects() ; ++a) {
            if (! colimit(constant_functor(shape, category, a))) {
                verdict.exists = false;
                verdict.witness = "no copower " + std::to_string(k) + " . " + c.object_name(a);
                return verdict;
            }
        }
    }
    return verdict;
}

}
