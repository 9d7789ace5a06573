#include <kanex/theorems.hpp>

#include <kanex/errors.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace kanex {

using std::string;
using std::vector;

auto TheoremReport::verdict() const -> bool
{
    return std::all_of(checks.begin(), checks.end(), [] (const TheoremCheck & c) { return c.outcome; });
}

void TheoremReport::check(string claim, bool outcome, string witness)
{
    checks.push_back({std::move(claim), outcome, std::move(witness)});
}

void TheoremReport::find(string name, bool value, string detail)
{
    findings.push_back({std::move(name), value, std::move(detail)});
}

auto TheoremReport::finding(const string & name) const -> std::optional<bool>
{
    for (auto & f : findings)
        if (f.name == name)
            return f.value;
    return std::nullopt;
}

auto describe(const ConcreteCategory & category) -> string
{
    std::ostringstream out;
    out << category.total().num_objects() << " objects and " << category.total().num_morphisms()
        << " morphisms over a base with " << category.base().num_objects() << " objects and "
        << category.base().num_morphisms() << " morphisms";
    return out.str();
}

namespace {

auto names_of(const FinCategory & category, std::span<const MorId> morphisms) -> string
{
    string out;
    for (MorId m : morphisms) {
        if (! out.empty())
            out += ", ";
        out += category.morphism_name(m);
    }
    return out;
}

auto functor_summary(const Functor & functor) -> string
{
    string out;
    for (ObjId a = 0 ; a < functor.source().num_objects() ; ++a) {
        if (! out.empty())
            out += ", ";
        out += functor.source().object_name(a) + " => " + functor.target().object_name(functor.obj(a));
    }
    return out;
}

auto kan_extension(const Functor & functor, const Functor & along, const Budget & budget) -> std::optional<RanResult>
{
    if (auto pointwise = try_right_kan_pointwise(functor, along))
        return pointwise;
    return right_kan_search(functor, along, budget);
}

auto whiskered(const Functor & outer, const RanResult & ran, const Functor & along) -> RanResult
{
    auto extension = compose(outer, ran.extension);
    auto counit = whisker_left(outer, ran.counit);
    return RanResult{extension, build_nat_trans(compose(extension, along), compose(outer, ran.counit.target()),
            {counit.components().begin(), counit.components().end()}), false, 0};
}

auto same_components(const NatTrans & a, const NatTrans & b) -> bool
{
    return std::equal(a.components().begin(), a.components().end(), b.components().begin(), b.components().end());
}

auto structure_family(const ConcreteCategory & alg, const ConcreteFunctor & functor) -> vector<MorId>
{
    vector<MorId> family(functor.functor.source().num_objects());
    for (ObjId x = 0 ; x < functor.functor.source().num_objects() ; ++x)
        family[x] = alg.algebra->structures[functor.functor.obj(x)];
    return family;
}

}

auto is_monadic(const ConcretePtr & category, const Budget & budget) -> MonadicVerdict
{
    MonadicVerdict verdict;
    verdict.codensity = codensity_monad(category->forgetful, budget);
    if (! verdict.codensity) {
        verdict.witness = "no codensity monad";
        return verdict;
    }
    verdict.eilenberg_moore = em_category(verdict.codensity->monad);
    verdict.comparison = concrete_iso_search(category, verdict.eilenberg_moore, budget);
    verdict.monadic = verdict.comparison.has_value();
    if (! verdict.monadic)
        verdict.witness = "not concretely isomorphic to the Eilenberg-Moore category of its codensity monad ("
                + describe(*verdict.eilenberg_moore) + ")";
    return verdict;
}

auto alg_universal_arrow(const ConcretePtr & category, const Budget & budget) -> std::optional<AlgUniversalArrow>
{
    auto base = category->base_ptr();
    auto endofunctors = all_endofunctors(base, budget);
    auto & forgetful = category->forgetful;
    int n = category->total().num_objects();

    struct Candidates
    {
        ConcretePtr alg;
        vector<ConcreteFunctor> functors;
        std::set<vector<MorId>> families;
    };
    vector<Candidates> table(endofunctors.size());
    for (std::size_t g = 0 ; g < endofunctors.size() ; ++g) {
        table[g].alg = alg_category(endofunctors[g]);
        for_each_concrete_functor(category, table[g].alg, budget, [&] (const ConcreteFunctor & j) {
            table[g].functors.push_back(j);
            table[g].families.insert(structure_family(*table[g].alg, j));
            return true;
        });
    }

    for (std::size_t f = 0 ; f < endofunctors.size() ; ++f) {
        for (auto & h : table[f].functors) {
            auto iota = structure_family(*table[f].alg, h);
            bool universal = true;
            for (std::size_t g = 0 ; g < endofunctors.size() && universal ; ++g) {
                // (Alg tau . H)(x) = (U x, iota_x . tau_{U x}); universality asks for a bijection
                // between Nat(G, F) and the concrete functors X -> Alg G.
                std::set<vector<MorId>> reached;
                std::uint64_t count = 0;
                for_each_nat_trans(endofunctors[g], endofunctors[f], [&] (const NatTrans & tau) {
                    vector<MorId> family(n);
                    for (ObjId x = 0 ; x < n ; ++x)
                        family[x] = base->compose(iota[x], tau.at(forgetful.obj(x)));
                    ++count;
                    if (! table[g].families.contains(family) || ! reached.insert(family).second) {
                        universal = false;
                        return false;
                    }
                    return true;
                });
                universal = universal && count == table[g].families.size();
            }
            if (universal)
                return AlgUniversalArrow{endofunctors[f], h, iota};
        }
    }
    return std::nullopt;
}

auto verify_limiting_cones_create_kan(const ConcreteDiagram & diagram, const ConcreteCone & limit,
        const Functor & functor, const Functor & along, const Budget & budget, string instance) -> TheoremReport
{
    TheoremReport report{"limiting-cones-create-kan", std::move(instance), {}, {}, {}};
    if (report.instance.empty())
        report.instance = "limit " + describe(*limit.category);
    auto & shape = *diagram.shape;
    int n = shape.num_objects();
    auto & limit_forgetful = limit.category->forgetful;

    // Component k < n is the leg at shape object k; component n is the forgetful functor.
    vector<Functor> outer;
    for (auto & leg : limit.legs)
        outer.push_back(leg.functor);
    outer.push_back(limit_forgetful);
    auto component_name = [&] (int k) { return k < n ? "leg " + shape.object_name(k) : string("base"); };

    vector<vector<RanResult>> representatives(n + 1);
    for (int k = 0 ; k <= n ; ++k) {
        auto ran = kan_extension(compose(outer[k], functor), along, budget);
        if (! ran)
            throw PreconditionUnmet("componentwise right Kan extension is missing", {component_name(k)});
        report.find("componentwise extension at " + component_name(k) + " is pointwise", ran->pointwise);
        representatives[k] = iso_class(*ran, along, budget);
    }
    report.check("componentwise extensions exist", true);

    // Pick one representative per component so that the family is a strict cone: preserved by
    // every D(phi) and lying over the base component.
    vector<int> choice(n + 1, -1);
    auto consistent = [&] (int k) {
        if (k == n)
            return true;
        auto & t = representatives[k][choice[k]];
        auto & base = representatives[n][choice[n]];
        auto & u = diagram.objects[k]->forgetful;
        if (! (compose(u, t.extension) == base.extension && same_components(whisker_left(u, t.counit), base.counit)))
            return false;
        for (MorId phi = 0 ; phi < shape.num_morphisms() ; ++phi) {
            if (shape.is_identity(phi))
                continue;
            ObjId d = shape.source(phi), e = shape.target(phi);
            if (d > k || e > k || (d != k && e != k))
                continue;
            auto & image = diagram.morphisms[phi].functor;
            auto & td = representatives[d][choice[d]];
            auto & te = representatives[e][choice[e]];
            if (! (compose(image, td.extension) == te.extension && same_components(whisker_left(image, td.counit), te.counit)))
                return false;
        }
        return true;
    };
    vector<int> order;
    order.push_back(n);
    for (int k = 0 ; k < n ; ++k)
        order.push_back(k);
    std::function<bool (std::size_t)> search = [&] (std::size_t position) {
        if (position == order.size())
            return true;
        int k = order[position];
        for (int r = 0 ; r < static_cast<int>(representatives[k].size()) ; ++r) {
            choice[k] = r;
            if (consistent(k) && search(position + 1))
                return true;
        }
        choice[k] = -1;
        return false;
    };
    if (! search(0))
        throw PreconditionUnmet("componentwise extensions are not preserved by the diagram");
    report.check("componentwise extensions form a cone", true);

    vector<Functor> components;
    for (int d = 0 ; d < n ; ++d)
        components.push_back(representatives[d][choice[d]].extension);
    auto & base_ran = representatives[n][choice[n]];
    auto mediated = mediate(limit, components, base_ran.extension);

    vector<MorId> counit_components;
    string lift_failure;
    for (ObjId a = 0 ; a < along.source().num_objects() ; ++a) {
        auto lifted = limit.category->lift(mediated.obj(along.obj(a)), functor.obj(a), base_ran.counit.at(a));
        if (! lifted) {
            lift_failure = along.source().object_name(a);
            break;
        }
        for (int d = 0 ; d < n ; ++d)
            if (outer[d].mor(*lifted) != representatives[d][choice[d]].counit.at(a))
                lift_failure = along.source().object_name(a) + " at " + component_name(d);
        counit_components.push_back(*lifted);
    }
    report.check("componentwise counits lift to the limit", lift_failure.empty(), lift_failure);
    if (! lift_failure.empty())
        return report;
    auto mediated_counit = build_nat_trans(compose(mediated, along), functor, counit_components);

    auto verdict = verify_right_kan(mediated, mediated_counit, along, budget);
    report.check("factorized pair is a right Kan extension", verdict.universal, verdict.witness);

    auto direct = right_kan_search(functor, along, budget);
    report.check("right Kan extension computed directly exists", direct.has_value());
    if (! direct)
        return report;
    RanResult factorized{mediated, mediated_counit, false, verdict.competitors};
    auto canonical = canonicalize(*direct, along, budget);
    report.check("factorized extension equals the direct one after canonicalization",
            same_extension(canonicalize(factorized, along, budget), canonical), functor_summary(mediated));

    for (int k = 0 ; k <= n ; ++k) {
        auto image = canonicalize(whiskered(outer[k], *direct, along), along, budget);
        auto expected = canonicalize(representatives[k][choice[k]], along, budget);
        report.check(component_name(k) + " carries the extension to the componentwise one", same_extension(image, expected));
    }
    return report;
}

auto verify_limiting_cones_create_kan(const ConcreteDiagram & diagram, const Functor & functor,
        const Functor & along, const Budget & budget, string instance) -> TheoremReport
{
    return verify_limiting_cones_create_kan(diagram, concrete_limit(diagram), functor, along, budget, std::move(instance));
}

auto verify_beck_theorems(const ConcretePtr & category, const BeckTheoremOptions & options, string instance) -> TheoremReport
{
    TheoremReport report{"beck-equivalence", std::move(instance), {}, {}, {}};
    if (report.instance.empty())
        report.instance = describe(*category);
    auto & budget = options.budget;
    auto & forgetful = category->forgetful;

    auto beck = is_beck(*category, options.shapes);
    report.notes.push_back("Beck check scope: " + beck.scope);
    string beck_failure;
    for (auto & c : beck.checks)
        if (! c.holds && beck_failure.empty())
            beck_failure = c.name + ": " + c.witness;
    report.find("beck", beck.beck, beck_failure);

    auto adjoint = left_adjoint(forgetful);
    report.find("free objects", adjoint.has_value());

    auto monadic = is_monadic(category, budget);
    auto & codensity = monadic.codensity;
    report.find("codensity monad", codensity.has_value(), codensity ? functor_summary(codensity->monad.endofunctor) : "");
    report.find("pointwise codensity monad", codensity && codensity->pointwise);
    report.find("monadic", monadic.monadic, monadic.witness);

    bool l_algebraic = category->l_algebraic || category->f_algebraic || monadic.monadic;
    report.find("l-algebraic", l_algebraic);
    if (category->l_algebraic || category->f_algebraic)
        report.notes.push_back("l-algebraic by construction");
    else if (monadic.monadic)
        report.notes.push_back("l-algebraic through the concrete isomorphism with an Eilenberg-Moore category");
    else
        report.notes.push_back("no l-algebraic presentation known; conditions needing one are evaluated as false");

    auto universal = alg_universal_arrow(category, budget);
    report.find("Alg-universal arrow", universal.has_value(), universal ? functor_summary(universal->endofunctor) : "");

    bool c1 = monadic.monadic;
    bool c2 = beck.beck && adjoint;
    bool c3 = beck.beck && codensity && codensity->pointwise;
    bool c4 = l_algebraic && codensity;
    bool c5 = l_algebraic && universal;
    report.find("(1) monadic", c1);
    report.find("(2) Beck with free objects", c2);
    report.find("(3) Beck with a pointwise codensity monad", c3);
    report.find("(4) l-algebraic with a codensity monad", c4);
    report.find("(5) l-algebraic with an Alg-universal arrow", c5);

    auto agree = [] (bool a, bool b) { return string(a ? "true" : "false") + " vs " + (b ? "true" : "false"); };
    report.check("(1) iff (2)", c1 == c2, agree(c1, c2));
    report.check("(1) iff (3)", c1 == c3, agree(c1, c3));
    report.check("Alg-universal arrow iff codensity monad", universal.has_value() == codensity.has_value(),
            agree(universal.has_value(), codensity.has_value()));
    if (l_algebraic) {
        report.check("(1) iff (4)", c1 == c4, agree(c1, c4));
        report.check("(4) iff (5)", c4 == c5, agree(c4, c5));
        report.check("l-algebraic: codensity monad iff free objects", codensity.has_value() == adjoint.has_value(),
                agree(codensity.has_value(), adjoint.has_value()));
    }
    if (adjoint) {
        bool agrees = false;
        string witness;
        try {
            agrees = codensity && codensity->pointwise
                    && codensity_from_adjunction(*adjoint, budget).monad == codensity->monad
                    && monads_isomorphic(adjunction_monad(*adjoint), codensity->monad);
        }
        catch (const NoKanExtension & e) {
            witness = e.what();
        }
        report.check("free objects give a pointwise codensity monad equal to the adjunction monad", agrees, witness);
    }

    auto copowers = has_copowers(category->base_ptr());
    report.find("base has copowers", copowers.exists, copowers.witness);
    report.notes.push_back("copowers checked up to multiplicity " + std::to_string(copowers.max_multiplicity));
    if (copowers.exists) {
        bool beck_codensity = beck.beck && codensity;
        bool beck_universal = beck.beck && universal;
        report.check("copowers: (1) iff Beck with a codensity monad", c1 == beck_codensity, agree(c1, beck_codensity));
        report.check("copowers: (1) iff Beck with an Alg-universal arrow", c1 == beck_universal, agree(c1, beck_universal));
    }
    return report;
}

auto verify_em_polymeric(const Monad & monad, string instance) -> TheoremReport
{
    TheoremReport report{"em-polymeric", std::move(instance), {}, {}, {}};
    auto em = em_category(monad);
    auto variety = polymeric_variety(monad.endofunctor, em_identities(monad));
    if (report.instance.empty())
        report.instance = "monad with Eilenberg-Moore category of " + describe(*em);

    auto object_names = [] (const FinCategory & c) {
        vector<string> names;
        for (ObjId a = 0 ; a < c.num_objects() ; ++a)
            names.push_back(c.object_name(a));
        return names;
    };
    auto em_objects = object_names(em->total());
    auto variety_objects = object_names(variety->total());
    string difference;
    for (auto & name : em_objects)
        if (std::find(variety_objects.begin(), variety_objects.end(), name) == variety_objects.end())
            difference = name + " only in the Eilenberg-Moore category";
    for (auto & name : variety_objects)
        if (std::find(em_objects.begin(), em_objects.end(), name) == em_objects.end())
            difference = name + " only in the polymeric variety";
    report.check("same objects", em_objects == variety_objects, difference);
    report.check("same morphisms", em->total() == variety->total());
    report.check("same forgetful functor", concretely_identical(*em, *variety));

    bool free_ok = true;
    string free_witness;
    for (ObjId a = 0 ; a < monad.endofunctor.source().num_objects() ; ++a) {
        auto free = em_free(monad, a);
        if (! find_algebra(*em, free.carrier, free.structure)) {
            free_ok = false;
            free_witness = monad.endofunctor.source().object_name(a);
        }
    }
    report.check("free algebras are Eilenberg-Moore algebras", free_ok, free_witness);
    if (free_ok) {
        auto adjunction = free_adjunction(monad, em);
        report.check("free adjunction induces the monad", adjunction_monad(adjunction) == monad);
    }
    return report;
}

auto verify_alg_universal_iff_codensity(const ConcretePtr & category, const Budget & budget, string instance)
        -> TheoremReport
{
    TheoremReport report{"alg-universal-codensity", std::move(instance), {}, {}, {}};
    if (report.instance.empty())
        report.instance = describe(*category);
    auto universal = alg_universal_arrow(category, budget);
    auto codensity = codensity_monad(category->forgetful, budget);
    report.find("Alg-universal arrow", universal.has_value(), universal ? functor_summary(universal->endofunctor) : "");
    report.find("codensity monad", codensity.has_value(), codensity ? functor_summary(codensity->monad.endofunctor) : "");
    report.check("Alg-universal arrow exists iff codensity monad exists", universal.has_value() == codensity.has_value());
    if (universal && codensity) {
        report.check("base functor of the universal arrow equals the codensity carrier",
                universal->endofunctor == codensity->monad.endofunctor,
                functor_summary(universal->endofunctor) + " vs " + functor_summary(codensity->monad.endofunctor));
        report.notes.push_back("structure of the universal arrow: "
                + names_of(category->base(), universal->structures));
    }
    return report;
}

}
