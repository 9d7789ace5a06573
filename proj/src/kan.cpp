#include <kanex/kan.hpp>

#include <algorithm>
#include <set>

namespace kanex {

using std::optional;
using std::string;
using std::vector;

namespace
{
    /// Components of e . tU.
    auto precompose_counit(const NatTrans & counit, const Functor & along, std::span<const MorId> t) -> vector<MorId>
    {
        auto & b = counit.target().target();
        vector<MorId> result(along.source().num_objects());
        for (ObjId a = 0 ; a < along.source().num_objects() ; ++a)
            result[a] = b.compose(counit.at(a), t[along.obj(a)]);
        return result;
    }

    auto comma_object(const CommaCategory & comma, const Functor & along, ObjId x, MorId f) -> ObjId
    {
        return comma.category->object("(" + along.source().object_name(x) + "," + along.target().morphism_name(f) + ")");
    }

    /// Cone over S . Q_A with apex T(A) and legs e_X . T(f).
    auto induced_cone(const RanResult & ran, const CommaCategory & comma) -> Cone
    {
        auto & b = ran.extension.target();
        Cone cone{ran.extension.obj(comma.base_object), {}};
        for (ObjId o = 0 ; o < comma.category->num_objects() ; ++o)
            cone.legs.push_back(b.compose(ran.counit.at(comma.projection.obj(o)), ran.extension.mor(comma.arrows[o])));
        return cone;
    }

    auto competitor_cone(const Functor & competitor, const NatTrans & competitor_counit, const CommaCategory & comma) -> Cone
    {
        auto & b = competitor.target();
        Cone cone{competitor.obj(comma.base_object), {}};
        for (ObjId o = 0 ; o < comma.category->num_objects() ; ++o)
            cone.legs.push_back(b.compose(competitor_counit.at(comma.projection.obj(o)), competitor.mor(comma.arrows[o])));
        return cone;
    }

    auto lexicographically_less(const RanResult & a, const RanResult & b) -> bool
    {
        auto ao = a.extension.object_map(), bo = b.extension.object_map();
        if (! std::equal(ao.begin(), ao.end(), bo.begin(), bo.end()))
            return std::lexicographical_compare(ao.begin(), ao.end(), bo.begin(), bo.end());
        auto am = a.extension.morphism_map(), bm = b.extension.morphism_map();
        if (! std::equal(am.begin(), am.end(), bm.begin(), bm.end()))
            return std::lexicographical_compare(am.begin(), am.end(), bm.begin(), bm.end());
        auto ac = a.counit.components(), bc = b.counit.components();
        return std::lexicographical_compare(ac.begin(), ac.end(), bc.begin(), bc.end());
    }
}

auto same_extension(const RanResult & a, const RanResult & b) -> bool
{
    return a.extension == b.extension && a.counit == b.counit;
}

auto verify_right_kan(const Functor & extension, const NatTrans & counit, const Functor & along, const Budget & budget) -> KanVerdict
{
    KanVerdict verdict;
    verdict.universal = true;
    auto & s = counit.target();
    for_each_functor(along.target_ptr(), extension.target_ptr(), budget, [&] (const Functor & competitor) {
        ++verdict.competitors;
        auto expected = count_nat_trans(compose(competitor, along), s);
        std::set<vector<MorId>> images;
        bool injective = true;
        for_each_nat_trans(competitor, extension, [&] (const NatTrans & t) {
            injective = images.insert(precompose_counit(counit, along, t.components())).second;
            return injective;
        });
        if (! injective || images.size() != expected) {
            verdict.universal = false;
            verdict.witness = "competitor with object map [";
            for (ObjId a = 0 ; a < competitor.source().num_objects() ; ++a)
                verdict.witness += (a ? ", " : "") + competitor.target().object_name(competitor.obj(a));
            verdict.witness += injective ? "] has a transformation that does not factor" : "] factors more than once";
            return false;
        }
        return true;
    });
    return verdict;
}

auto right_kan_search(const Functor & functor, const Functor & along, const Budget & budget) -> optional<RanResult>
{
    auto functors = all_functors(along.target_ptr(), functor.target_ptr(), budget);
    vector<std::uint64_t> expected(functors.size());
    for (std::size_t j = 0 ; j < functors.size() ; ++j)
        expected[j] = count_nat_trans(compose(functors[j], along), functor);

    for (auto & candidate : functors) {
        bool sizes_match = true;
        for (std::size_t j = 0 ; j < functors.size() && sizes_match ; ++j)
            sizes_match = count_nat_trans(functors[j], candidate) == expected[j];
        if (! sizes_match)
            continue;

        vector<vector<vector<MorId>>> into(functors.size());
        for (std::size_t j = 0 ; j < functors.size() ; ++j)
            for_each_nat_trans(functors[j], candidate, [&] (const NatTrans & t) {
                into[j].emplace_back(t.components().begin(), t.components().end());
                return true;
            });

        optional<RanResult> found;
        for_each_nat_trans(compose(candidate, along), functor, [&] (const NatTrans & counit) {
            for (std::size_t j = 0 ; j < functors.size() ; ++j) {
                std::set<vector<MorId>> images;
                for (auto & t : into[j])
                    if (! images.insert(precompose_counit(counit, along, t)).second)
                        return true;
            }
            found = RanResult{candidate, counit, false, functors.size()};
            return false;
        });
        if (found) {
            found->pointwise = is_pointwise(*found, functor, along);
            return found;
        }
    }
    return std::nullopt;
}

auto right_kan_pointwise(const Functor & functor, const Functor & along) -> RanResult
{
    auto & c = along.target();
    auto & b = functor.target();

    vector<CommaCategory> commas;
    vector<Diagram> diagrams;
    vector<Cone> limits;
    for (ObjId a = 0 ; a < c.num_objects() ; ++a) {
        commas.push_back(comma_category(a, along));
        diagrams.push_back(compose(functor, commas.back().projection));
        auto cone = limit(diagrams.back());
        if (! cone)
            throw MissingCommaLimit("no limit over the comma category at " + c.object_name(a), {c.object_name(a)});
        limits.push_back(*cone);
    }

    vector<ObjId> objects(c.num_objects());
    for (ObjId a = 0 ; a < c.num_objects() ; ++a)
        objects[a] = limits[a].apex;

    vector<MorId> morphisms(c.num_morphisms());
    for (MorId h = 0 ; h < c.num_morphisms() ; ++h) {
        ObjId from = c.source(h), to = c.target(h);
        auto & target_comma = commas[to];
        Cone cone{objects[from], {}};
        for (ObjId o = 0 ; o < target_comma.category->num_objects() ; ++o) {
            ObjId x = target_comma.projection.obj(o);
            MorId f = c.compose(target_comma.arrows[o], h);
            cone.legs.push_back(limits[from].legs[comma_object(commas[from], along, x, f)]);
        }
        auto mediating = factorizations(diagrams[to], limits[to], cone);
        if (mediating.size() != 1)
            throw LawViolation("comma limits do not induce a unique image for " + c.morphism_name(h));
        morphisms[h] = mediating[0];
    }
    auto extension = build_functor(along.target_ptr(), functor.target_ptr(), std::move(objects), std::move(morphisms));

    vector<MorId> components(along.source().num_objects());
    for (ObjId x = 0 ; x < along.source().num_objects() ; ++x) {
        ObjId ux = along.obj(x);
        components[x] = limits[ux].legs[comma_object(commas[ux], along, x, c.identity(ux))];
    }
    (void) b;
    auto counit = build_nat_trans(compose(extension, along), functor, std::move(components));
    return RanResult{std::move(extension), std::move(counit), true, 0};
}

auto try_right_kan_pointwise(const Functor & functor, const Functor & along) -> optional<RanResult>
{
    try {
        return right_kan_pointwise(functor, along);
    }
    catch (const MissingCommaLimit &) {
        return std::nullopt;
    }
}

auto is_pointwise(const RanResult & ran, const Functor & functor, const Functor & along) -> bool
{
    for (ObjId a = 0 ; a < along.target().num_objects() ; ++a) {
        auto comma = comma_category(a, along);
        if (! is_limit(compose(functor, comma.projection), induced_cone(ran, comma)))
            return false;
    }
    return true;
}

auto is_pointwise_via_homs(const RanResult & ran, const Functor & functor, const Functor & along) -> bool
{
    auto & b = functor.target();
    for (ObjId a = 0 ; a < along.target().num_objects() ; ++a) {
        auto comma = comma_category(a, along);
        auto diagram = compose(functor, comma.projection);
        auto cone = induced_cone(ran, comma);
        auto & k = *comma.category;
        for (ObjId probe = 0 ; probe < b.num_objects() ; ++probe) {
            // Compatible families x_(X,f) in hom(probe, S X).
            vector<vector<MorId>> families{{}};
            for (ObjId o = 0 ; o < k.num_objects() ; ++o) {
                vector<vector<MorId>> next;
                for (auto & family : families)
                    for (MorId m : b.hom(probe, diagram.obj(o))) {
                        auto extended = family;
                        extended.push_back(m);
                        bool compatible = true;
                        for (MorId phi = 0 ; phi < k.num_morphisms() && compatible ; ++phi)
                            if (k.source(phi) <= o && k.target(phi) <= o)
                                compatible = b.compose(diagram.mor(phi), extended[k.source(phi)]) == extended[k.target(phi)];
                        if (compatible)
                            next.push_back(std::move(extended));
                    }
                families = std::move(next);
            }
            std::set<vector<MorId>> images;
            for (MorId g : b.hom(probe, cone.apex)) {
                vector<MorId> family;
                for (MorId leg : cone.legs)
                    family.push_back(b.compose(leg, g));
                images.insert(std::move(family));
            }
            if (images.size() != b.hom(probe, cone.apex).size() || images.size() != families.size())
                return false;
        }
    }
    return true;
}

auto factorize_by_search(const RanResult & ran, const Functor & along, const Functor & competitor, const NatTrans & competitor_counit) -> NatTrans
{
    vector<NatTrans> found;
    auto target = competitor_counit.components();
    for_each_nat_trans(competitor, ran.extension, [&] (const NatTrans & t) {
        auto image = precompose_counit(ran.counit, along, t.components());
        if (std::equal(image.begin(), image.end(), target.begin(), target.end()))
            found.push_back(t);
        return found.size() < 2;
    });
    if (found.size() != 1)
        throw NoKanExtension("competitor factors " + std::to_string(found.size()) + " times through the extension");
    return found[0];
}

auto factorize(const RanResult & ran, const Functor & along, const Functor & competitor, const NatTrans & competitor_counit) -> NatTrans
{
    if (! ran.pointwise)
        return factorize_by_search(ran, along, competitor, competitor_counit);

    auto & c = along.target();
    vector<MorId> components(c.num_objects());
    for (ObjId a = 0 ; a < c.num_objects() ; ++a) {
        auto comma = comma_category(a, along);
        auto diagram = compose(ran.counit.target(), comma.projection);
        auto mediating = factorizations(diagram, induced_cone(ran, comma), competitor_cone(competitor, competitor_counit, comma));
        if (mediating.size() != 1)
            throw NoKanExtension("competitor cone at " + c.object_name(a) + " does not factor uniquely");
        components[a] = mediating[0];
    }
    auto t = build_nat_trans(competitor, ran.extension, std::move(components));
    auto image = precompose_counit(ran.counit, along, t.components());
    auto target = competitor_counit.components();
    if (! std::equal(image.begin(), image.end(), target.begin(), target.end()))
        throw NoKanExtension("pointwise factorization does not reproduce the competitor counit");
    return t;
}

auto iso_class(const RanResult & ran, const Functor & along, const Budget & budget) -> vector<RanResult>
{
    auto & b = ran.extension.target();
    ObjectRestriction restriction(along.target().num_objects());
    for (ObjId a = 0 ; a < along.target().num_objects() ; ++a) {
        ObjId value = ran.extension.obj(a);
        for (ObjId y = 0 ; y < b.num_objects() ; ++y) {
            bool isomorphic = false;
            for (MorId m : b.hom(y, value))
                isomorphic = isomorphic || is_iso(b, m);
            if (isomorphic)
                restriction[a].push_back(y);
        }
    }

    vector<RanResult> result;
    for_each_functor(along.target_ptr(), ran.extension.target_ptr(), budget, [&] (const Functor & candidate) {
        for_each_nat_trans(candidate, ran.extension, [&] (const NatTrans & theta) {
            if (is_natural_iso(theta))
                result.push_back(RanResult{candidate, NatTrans::unchecked(compose(candidate, along), ran.counit.target(),
                        precompose_counit(ran.counit, along, theta.components())), ran.pointwise, ran.competitors_checked});
            return true;
        });
        return true;
    }, restriction);
    std::sort(result.begin(), result.end(), lexicographically_less);
    return result;
}

auto canonicalize(const RanResult & ran, const Functor & along, const Budget & budget) -> RanResult
{
    auto all = iso_class(ran, along, budget);
    if (all.empty())
        throw LawViolation("extension is not isomorphic to itself");
    return all.front();
}

auto universal_arrow(ObjId object, const Functor & functor) -> optional<UniversalArrow>
{
    auto & src = functor.source();
    auto & tgt = functor.target();
    for (ObjId b = 0 ; b < src.num_objects() ; ++b)
        for (MorId u : tgt.hom(object, functor.obj(b))) {
            bool universal = true;
            for (ObjId x = 0 ; x < src.num_objects() && universal ; ++x) {
                std::set<MorId> images;
                for (MorId g : src.hom(b, x))
                    if (! images.insert(tgt.compose(functor.mor(g), u)).second)
                        universal = false;
                universal = universal && images.size() == tgt.hom(object, functor.obj(x)).size();
            }
            if (universal)
                return UniversalArrow{b, u};
        }
    return std::nullopt;
}

auto triangle_identities_hold(const Adjunction & adj) -> bool
{
    auto & a = adj.left.target();
    auto & c = adj.right.target();
    for (ObjId x = 0 ; x < c.num_objects() ; ++x)
        if (a.compose(adj.counit.at(adj.left.obj(x)), adj.left.mor(adj.unit.at(x))) != a.identity(adj.left.obj(x)))
            return false;
    for (ObjId y = 0 ; y < a.num_objects() ; ++y)
        if (c.compose(adj.right.mor(adj.counit.at(y)), adj.unit.at(adj.right.obj(y))) != c.identity(adj.right.obj(y)))
            return false;
    return true;
}

auto left_adjoint(const Functor & functor) -> optional<Adjunction>
{
    auto & a = functor.source();
    auto & c = functor.target();

    vector<UniversalArrow> arrows;
    for (ObjId x = 0 ; x < c.num_objects() ; ++x) {
        auto arrow = universal_arrow(x, functor);
        if (! arrow)
            return std::nullopt;
        arrows.push_back(*arrow);
    }

    // unique g : from -> to with U g . u = target
    auto lift = [&] (ObjId from, MorId u, ObjId to, MorId target) {
        for (MorId g : a.hom(from, to))
            if (c.compose(functor.mor(g), u) == target)
                return g;
        throw LawViolation("universal arrow does not factor");
    };

    vector<ObjId> objects(c.num_objects());
    for (ObjId x = 0 ; x < c.num_objects() ; ++x)
        objects[x] = arrows[x].object;
    vector<MorId> morphisms(c.num_morphisms());
    for (MorId h = 0 ; h < c.num_morphisms() ; ++h) {
        ObjId x = c.source(h), y = c.target(h);
        morphisms[h] = lift(arrows[x].object, arrows[x].arrow, arrows[y].object, c.compose(arrows[y].arrow, h));
    }
    auto left = build_functor(functor.target_ptr(), functor.source_ptr(), std::move(objects), std::move(morphisms));

    vector<MorId> unit(c.num_objects());
    for (ObjId x = 0 ; x < c.num_objects() ; ++x)
        unit[x] = arrows[x].arrow;
    vector<MorId> counit(a.num_objects());
    for (ObjId y = 0 ; y < a.num_objects() ; ++y) {
        ObjId uy = functor.obj(y);
        counit[y] = lift(arrows[uy].object, arrows[uy].arrow, y, c.identity(uy));
    }

    Adjunction adj{left, functor,
        build_nat_trans(identity_functor(functor.target_ptr()), compose(functor, left), std::move(unit)),
        build_nat_trans(compose(left, functor), identity_functor(functor.source_ptr()), std::move(counit))};
    if (! triangle_identities_hold(adj))
        throw LawViolation("assembled adjunction violates a triangle identity");
    return adj;
}

auto monad_law_failure(const Monad & monad) -> optional<string>
{
    auto & m = monad.endofunctor;
    if (! m.is_endofunctor())
        return string("monad functor is not an endofunctor");
    auto id = identity_functor(m.source_ptr());
    auto mm = compose(m, m);
    if (! (monad.unit.source() == id) || ! (monad.unit.target() == m))
        return string("unit is not a transformation Id -> M");
    if (! (monad.multiplication.source() == mm) || ! (monad.multiplication.target() == m))
        return string("multiplication is not a transformation M M -> M");
    if (auto failure = naturality_failure(monad.unit))
        return "unit: " + *failure;
    if (auto failure = naturality_failure(monad.multiplication))
        return "multiplication: " + *failure;

    auto identity_nat = identity_transformation(m);
    auto identity = identity_nat.components();
    auto same = [] (std::span<const MorId> x, std::span<const MorId> y) {
        return std::equal(x.begin(), x.end(), y.begin(), y.end());
    };
    auto & mu = monad.multiplication;
    if (! same(vertical(mu, whisker_right(monad.unit, m)).components(), identity))
        return string("left unit law fails");
    if (! same(vertical(mu, whisker_left(m, monad.unit)).components(), identity))
        return string("right unit law fails");
    if (! same(vertical(mu, whisker_right(mu, m)).components(), vertical(mu, whisker_left(m, mu)).components()))
        return string("associativity law fails");
    return std::nullopt;
}

auto build_monad(Functor endofunctor, NatTrans unit, NatTrans multiplication) -> Monad
{
    Monad monad{std::move(endofunctor), std::move(unit), std::move(multiplication)};
    if (auto failure = monad_law_failure(monad))
        throw LawViolation(*failure);
    return monad;
}

auto identity_monad(const CatPtr & category) -> Monad
{
    auto id = identity_functor(category);
    return Monad{id, identity_transformation(id), identity_transformation(id)};
}

auto adjunction_monad(const Adjunction & adj) -> Monad
{
    auto m = compose(adj.right, adj.left);
    auto mu = whisker_left(adj.right, whisker_right(adj.counit, adj.left));
    return build_monad(m, NatTrans::unchecked(identity_functor(m.source_ptr()), m,
                {adj.unit.components().begin(), adj.unit.components().end()}),
            NatTrans::unchecked(compose(m, m), m, {mu.components().begin(), mu.components().end()}));
}

auto transport_monad(const Monad & monad, const NatTrans & iso) -> Monad
{
    auto & c = iso.source().target();
    auto & primed = iso.source();
    vector<MorId> inverse_components;
    for (MorId m : iso.components())
        inverse_components.push_back(*inverse(c, m));
    auto back = NatTrans::unchecked(monad.endofunctor, primed, std::move(inverse_components));
    auto unit = vertical(back, monad.unit);
    auto mult = vertical(back, vertical(monad.multiplication, horizontal(iso, iso)));
    return build_monad(primed, NatTrans::unchecked(identity_functor(primed.source_ptr()), primed,
                {unit.components().begin(), unit.components().end()}),
            NatTrans::unchecked(compose(primed, primed), primed, {mult.components().begin(), mult.components().end()}));
}

auto all_monads(const CatPtr & category, const Budget & budget) -> vector<Monad>
{
    vector<Monad> result;
    auto id = identity_functor(category);
    for (auto & m : all_endofunctors(category, budget)) {
        auto mm = compose(m, m);
        auto units = all_nat_trans(id, m);
        if (units.empty())
            continue;
        auto mults = all_nat_trans(mm, m);
        for (auto & unit : units)
            for (auto & mult : mults) {
                Monad monad{m, unit, mult};
                if (! monad_law_failure(monad))
                    result.push_back(std::move(monad));
            }
    }
    return result;
}

namespace
{
    auto finish_codensity(RanResult ran, const Functor & functor, const Budget & budget) -> CodensityResult
    {
        ran = canonicalize(ran, functor, budget);
        auto & m = ran.extension;
        auto & e = ran.counit;
        auto unit = factorize(ran, functor, identity_functor(functor.target_ptr()), identity_transformation(functor));
        auto mult = factorize(ran, functor, compose(m, m), vertical(e, whisker_left(m, e)));
        auto monad = build_monad(m,
                NatTrans::unchecked(identity_functor(m.source_ptr()), m, {unit.components().begin(), unit.components().end()}),
                NatTrans::unchecked(compose(m, m), m, {mult.components().begin(), mult.components().end()}));
        bool pointwise = ran.pointwise || is_pointwise(ran, functor, functor);
        ran.pointwise = pointwise;
        return CodensityResult{std::move(monad), e, pointwise, ran};
    }
}

auto codensity_monad(const Functor & functor, const Budget & budget) -> optional<CodensityResult>
{
    auto ran = try_right_kan_pointwise(functor, functor);
    if (! ran)
        ran = right_kan_search(functor, functor, budget);
    if (! ran)
        return std::nullopt;
    return finish_codensity(std::move(*ran), functor, budget);
}

auto codensity_from_adjunction(const Adjunction & adj, const Budget & budget) -> CodensityResult
{
    auto & u = adj.right;
    auto m = compose(u, adj.left);
    auto e = whisker_left(u, adj.counit);
    auto counit = build_nat_trans(compose(m, u), u, {e.components().begin(), e.components().end()});
    auto verdict = verify_right_kan(m, counit, u, budget);
    if (! verdict.universal)
        throw NoKanExtension("(U L, U counit) is not a right Kan extension: " + verdict.witness);
    RanResult ran{m, counit, false, verdict.competitors};
    ran.pointwise = is_pointwise(ran, u, u);
    return finish_codensity(std::move(ran), u, budget);
}

auto monads_isomorphic(const Monad & a, const Monad & b) -> bool
{
    bool found = false;
    for_each_nat_trans(a.endofunctor, b.endofunctor, [&] (const NatTrans & theta) {
        if (is_natural_iso(theta))
            found = transport_monad(b, theta) == a;
        return ! found;
    });
    return found;
}

auto codensity_monad_by_search(const Functor & functor, const Budget & budget) -> optional<CodensityResult>
{
    auto ran = right_kan_search(functor, functor, budget);
    if (! ran)
        return std::nullopt;
    return finish_codensity(std::move(*ran), functor, budget);
}

}
