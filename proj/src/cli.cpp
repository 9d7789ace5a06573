#include <kanex/cli.hpp>

#include <kanex/instances.hpp>

#include <functional>
#include <set>
#include <sstream>

namespace kanex {

using nlohmann::json;
using std::string;
using std::vector;

namespace {

const OptionSpec functor_option{"functor", "functor name (or F . G, Id_C)"};
const OptionSpec concrete_option{"concrete", "concrete category name; defaults to the only one in the workspace"};

}

auto command_specs() -> const vector<CommandSpec> &
{
    static const vector<CommandSpec> specs = {
        {"validate", "load and validate the inputs", {}, ""},
        {"limit", "limit of a diagram functor", {{"diagram", "diagram functor J -> C"}}, ""},
        {"colimit", "colimit of a diagram functor", {{"diagram", "diagram functor J -> C"}}, ""},
        {"comma", "comma category A | U", {{"object", "object A of the target of U"}, functor_option}, ""},
        {"kan", "right Kan extension of S along U",
            {{"functor", "the functor S"}, {"along", "the functor U"}, {"method", "pointwise, search or both (default)"}}, ""},
        {"codensity", "codensity monad of a functor", {functor_option, concrete_option}, ""},
        {"adjoint", "left adjoint of a functor", {functor_option, concrete_option}, ""},
        {"alg", "category of algebras of an endofunctor", {functor_option}, ""},
        {"polymeric", "polymeric variety of identities", {{"identity", "polymeric identity", true}}, ""},
        {"em", "Eilenberg-Moore category of a monad", {{"monad", "monad name"}}, ""},
        {"product", "fibre-wise product of concrete categories",
            {{"concrete", "factor", true}, {"base", "base category for the empty product"}}, ""},
        {"equalizer", "equalizer of two concrete functors",
            {{"first", "functor between the totals"}, {"second", "functor between the totals"},
             {"source", "concrete source"}, {"target", "concrete target"}}, ""},
        {"lalg", "limit of algebra categories along transformations",
            {{"functor", "endofunctor (a vertex)", true}, {"nat", "transformation G => F (an edge Alg F -> Alg G)", true}}, ""},
        {"beck", "Beck property", {concrete_option}, ""},
        {"monadic", "monadicity", {concrete_option}, ""},
        {"verify", "run a verifier",
            {{"concrete", "concrete category", true}, {"monad", "monad", true},
             {"functor", "endofunctor for limiting-cones-create-kan", true},
             {"nat", "transformation for limiting-cones-create-kan", true}},
            "theorem"},
        {"paper-examples", "run the shipped example suites", {}, ""},
    };
    return specs;
}

auto CommandOptions::value(const string & name) const -> std::optional<string>
{
    auto it = values.find(name);
    if (it == values.end() || it->second.empty())
        return std::nullopt;
    return it->second.back();
}

auto CommandOptions::all(const string & name) const -> vector<string>
{
    auto it = values.find(name);
    return it == values.end() ? vector<string>{} : it->second;
}

auto CommandResult::output(bool as_json) const -> string
{
    return as_json ? json.dump(2) + "\n" : text;
}

auto to_json(const TheoremReport & report) -> json
{
    json checks = json::array(), findings = json::array();
    for (auto & c : report.checks)
        checks.push_back({{"claim", c.claim}, {"outcome", c.outcome}, {"witness", c.witness}});
    for (auto & f : report.findings)
        findings.push_back({{"name", f.name}, {"value", f.value}, {"detail", f.detail}});
    return {{"theorem", report.theorem}, {"instance", report.instance}, {"checks", checks}, {"findings", findings},
        {"notes", report.notes}, {"verdict", report.verdict() ? "pass" : "fail"}};
}

auto render_text(const TheoremReport & report) -> string
{
    std::ostringstream out;
    out << report.theorem << " on " << report.instance << ": " << (report.verdict() ? "pass" : "FAIL") << "\n";
    for (auto & f : report.findings)
        out << "  " << f.name << ": " << (f.value ? "yes" : "no") << (f.detail.empty() ? "" : " (" + f.detail + ")") << "\n";
    for (auto & c : report.checks)
        out << "  [" << (c.outcome ? "ok" : "FAIL") << "] " << c.claim << (c.witness.empty() ? "" : " -- " + c.witness) << "\n";
    for (auto & n : report.notes)
        out << "  note: " << n << "\n";
    return out.str();
}

namespace {

/// Thrown for malformed command lines; mapped to exit code 2.
class UsageError : public Error
{
  public:
    using Error::Error;
};

auto error_kind(const std::exception & e) -> string
{
    if (auto d = dynamic_cast<const DslError *>(&e))
        return d->kind();
#define KANEX_KIND(Name) if (dynamic_cast<const Name *>(&e)) return #Name
    KANEX_KIND(UsageError);
    KANEX_KIND(MissingComposite);
    KANEX_KIND(LawViolation);
    KANEX_KIND(FunctorialityViolation);
    KANEX_KIND(NaturalitySquareViolation);
    KANEX_KIND(SearchSpaceExceeded);
    KANEX_KIND(MissingCommaLimit);
    KANEX_KIND(NoKanExtension);
    KANEX_KIND(NotFaithful);
    KANEX_KIND(NotConcrete);
    KANEX_KIND(NotFAlgebraic);
    KANEX_KIND(PreconditionUnmet);
    KANEX_KIND(UnknownName);
#undef KANEX_KIND
    return "Error";
}

auto object_map_text(const Functor & f) -> string
{
    string out;
    for (ObjId a = 0 ; a < f.source().num_objects() ; ++a)
        out += (a ? ", " : "") + f.source().object_name(a) + " => " + f.target().object_name(f.obj(a));
    return out;
}

auto components_text(const NatTrans & t) -> string
{
    string out;
    auto & c = t.source().source();
    for (ObjId a = 0 ; a < c.num_objects() ; ++a)
        out += (a ? ", " : "") + c.object_name(a) + ": " + t.source().target().morphism_name(t.at(a));
    return out;
}

auto functor_json(const Functor & f) -> json
{
    json objects = json::object(), morphisms = json::object();
    for (ObjId a = 0 ; a < f.source().num_objects() ; ++a)
        objects[f.source().object_name(a)] = f.target().object_name(f.obj(a));
    for (MorId m = 0 ; m < f.source().num_morphisms() ; ++m)
        morphisms[f.source().morphism_name(m)] = f.target().morphism_name(f.mor(m));
    return {{"objects", objects}, {"morphisms", morphisms}};
}

auto nat_json(const NatTrans & t) -> json
{
    json components = json::object();
    auto & c = t.source().source();
    for (ObjId a = 0 ; a < c.num_objects() ; ++a)
        components[c.object_name(a)] = t.source().target().morphism_name(t.at(a));
    return components;
}

auto category_json(const FinCategory & c) -> json
{
    json objects = json::array(), morphisms = json::array();
    for (ObjId a = 0 ; a < c.num_objects() ; ++a)
        objects.push_back(c.object_name(a));
    for (MorId m = 0 ; m < c.num_morphisms() ; ++m)
        if (! c.is_identity(m))
            morphisms.push_back({{"name", c.morphism_name(m)}, {"source", c.object_name(c.source(m))},
                {"target", c.object_name(c.target(m))}});
    return {{"objects", objects}, {"morphisms", morphisms}};
}

auto concrete_json(const ConcreteCategory & x) -> json
{
    auto & t = x.total();
    json objects = json::array(), morphisms = json::array();
    for (ObjId a = 0 ; a < t.num_objects() ; ++a)
        objects.push_back({{"name", t.object_name(a)}, {"over", x.base().object_name(x.forgetful.obj(a))}});
    for (MorId m = 0 ; m < t.num_morphisms() ; ++m)
        if (! t.is_identity(m))
            morphisms.push_back({{"name", t.morphism_name(m)}, {"source", t.object_name(t.source(m))},
                {"target", t.object_name(t.target(m))}, {"over", x.base().morphism_name(x.forgetful.mor(m))}});
    return {{"objects", objects}, {"morphisms", morphisms},
        {"tags", {{"f_algebraic", x.f_algebraic}, {"l_algebraic", x.l_algebraic}, {"homogeneous", x.homogeneous},
            {"single_induced", x.single_induced}}}};
}

auto concrete_text(const ConcreteCategory & x) -> string
{
    std::ostringstream out;
    auto & t = x.total();
    out << "  objects (" << t.num_objects() << "):";
    for (ObjId a = 0 ; a < t.num_objects() ; ++a)
        out << (a ? ", " : " ") << t.object_name(a) << " over " << x.base().object_name(x.forgetful.obj(a));
    out << "\n  non-identity morphisms: " << t.num_morphisms() - t.num_objects() << "\n";
    return out.str();
}

auto monad_json(const Monad & m) -> json
{
    return {{"endofunctor", functor_json(m.endofunctor)}, {"unit", nat_json(m.unit)},
        {"multiplication", nat_json(m.multiplication)}};
}

auto monad_text(const Monad & m) -> string
{
    return "  endofunctor: " + object_map_text(m.endofunctor) + "\n  unit: " + components_text(m.unit)
        + "\n  multiplication: " + components_text(m.multiplication) + "\n";
}

class Runner
{
  public:
    Runner(const Workspace & workspace, const CommandOptions & options) : ws_(workspace), options_(options) {}

    auto run(const string & command) -> CommandResult
    {
        static const std::map<string, CommandResult (Runner::*)()> table = {
            {"validate", &Runner::validate}, {"limit", &Runner::limit}, {"colimit", &Runner::colimit},
            {"comma", &Runner::comma}, {"kan", &Runner::kan}, {"codensity", &Runner::codensity},
            {"adjoint", &Runner::adjoint}, {"alg", &Runner::alg}, {"polymeric", &Runner::polymeric},
            {"em", &Runner::em}, {"product", &Runner::product}, {"equalizer", &Runner::equalizer},
            {"lalg", &Runner::lalg}, {"beck", &Runner::beck}, {"monadic", &Runner::monadic},
            {"verify", &Runner::verify}, {"paper-examples", &Runner::examples},
        };
        auto it = table.find(command);
        if (it == table.end())
            throw UsageError("unknown command '" + command + "'");
        return (this->*(it->second))();
    }

  private:
    const Workspace & ws_;
    const CommandOptions & options_;

    auto required(const string & option) const -> string
    {
        if (auto v = options_.value(option))
            return *v;
        throw UsageError("missing --" + option);
    }

    auto functor(const string & text) const -> Functor
    {
        if (ws_.functors.contains(text) || text.starts_with("Id_"))
            return ws_.functor(text);
        // F . G
        std::optional<Functor> result;
        std::stringstream in(text);
        string part;
        while (std::getline(in, part, '.')) {
            auto first = part.find_first_not_of(' '), last = part.find_last_not_of(' ');
            if (first == string::npos)
                throw UsageError("malformed functor expression '" + text + "'");
            auto f = ws_.functor(part.substr(first, last - first + 1));
            result = result ? compose(*result, f) : f;
        }
        if (! result)
            throw UsageError("malformed functor expression '" + text + "'");
        return *result;
    }

    auto concrete_name() const -> string
    {
        if (auto v = options_.value("concrete"))
            return *v;
        if (ws_.concretes.size() == 1)
            return ws_.concretes.begin()->first;
        throw UsageError("missing --concrete (the workspace has " + std::to_string(ws_.concretes.size()) + " concrete categories)");
    }

    /// --functor, or the forgetful functor of --concrete.
    auto functor_or_forgetful() const -> Functor
    {
        if (auto v = options_.value("functor"))
            return functor(*v);
        return ws_.concrete(concrete_name())->forgetful;
    }

    auto result(int code, string text, json body) const -> CommandResult
    {
        return {code, std::move(text), std::move(body)};
    }

    auto validate() -> CommandResult
    {
        std::ostringstream out;
        json entities = json::array();
        auto kind_name = [] (Workspace::Kind k) {
            switch (k) {
                case Workspace::Kind::category: return "category";
                case Workspace::Kind::functor: return "functor";
                case Workspace::Kind::nat: return "nat";
                case Workspace::Kind::monad: return "monad";
                case Workspace::Kind::concrete: return "concrete";
                case Workspace::Kind::identity: return "identity";
            }
            return "";
        };
        for (auto & [kind, name] : ws_.order) {
            string detail;
            if (kind == Workspace::Kind::category) {
                auto & c = *ws_.categories.at(name);
                detail = std::to_string(c.num_objects()) + " objects, " + std::to_string(c.num_morphisms()) + " morphisms";
            }
            else if (kind == Workspace::Kind::functor) {
                auto & e = ws_.functors.at(name);
                detail = e.source + " -> " + e.target + (check_faithful(e.functor).faithful ? ", faithful" : "");
            }
            else if (kind == Workspace::Kind::nat) {
                auto & e = ws_.transformations.at(name);
                detail = e.source + " => " + e.target + (is_natural_iso(e.transformation) ? ", invertible" : "");
            }
            else if (kind == Workspace::Kind::monad) {
                detail = "on " + ws_.monads.at(name).functor;
            }
            else if (kind == Workspace::Kind::concrete) {
                detail = describe(*ws_.concretes.at(name).category);
            }
            else {
                auto & e = ws_.identities.at(name);
                detail = "over " + e.endofunctor + ", arity " + std::to_string(e.identity.m) + ", " + std::to_string(e.identity.n);
            }
            out << kind_name(kind) << " " << name << ": " << detail << "\n";
            entities.push_back({{"kind", kind_name(kind)}, {"name", name}, {"detail", detail}});
        }
        out << "valid: " << ws_.order.size() << " declarations\n";
        return result(exit_computed, out.str(), {{"valid", true}, {"declarations", entities}});
    }

    auto cone_result(const Functor & diagram, const std::optional<Cone> & cone, const string & what) -> CommandResult
    {
        auto & c = diagram.target();
        if (! cone)
            return result(exit_negative, "no " + what + "\n", {{"exists", false}});
        json legs = json::object();
        string text = what + ": " + c.object_name(cone->apex) + "\n";
        for (ObjId d = 0 ; d < diagram.source().num_objects() ; ++d) {
            legs[diagram.source().object_name(d)] = c.morphism_name(cone->legs[d]);
            text += "  at " + diagram.source().object_name(d) + ": " + c.morphism_name(cone->legs[d]) + "\n";
        }
        return result(exit_computed, text, {{"exists", true}, {"apex", c.object_name(cone->apex)}, {"legs", legs}});
    }

    auto limit() -> CommandResult
    {
        auto d = functor(required("diagram"));
        return cone_result(d, kanex::limit(d), "limit");
    }

    auto colimit() -> CommandResult
    {
        auto d = functor(required("diagram"));
        return cone_result(d, kanex::colimit(d), "colimit");
    }

    auto comma() -> CommandResult
    {
        auto u = functor(required("functor"));
        auto name = required("object");
        auto a = u.target().find_object(name);
        if (! a)
            throw UnknownName("no object '" + name + "' in the target", {name});
        auto cc = comma_category(*a, u);
        auto & c = *cc.category;
        string text = "comma category " + name + " | U: " + std::to_string(c.num_objects()) + " objects\n";
        for (ObjId x = 0 ; x < c.num_objects() ; ++x)
            text += "  " + c.object_name(x) + "\n";
        for (MorId m = 0 ; m < c.num_morphisms() ; ++m)
            if (! c.is_identity(m))
                text += "  " + c.morphism_name(m) + "\n";
        return result(exit_computed, text, category_json(c));
    }

    auto ran_text(const RanResult & r) -> string
    {
        return "  extension: " + object_map_text(r.extension) + "\n  counit: " + components_text(r.counit)
            + "\n  pointwise: " + (r.pointwise ? "true" : "false") + "\n";
    }

    auto ran_json(const RanResult & r) -> json
    {
        return {{"exists", true}, {"extension", functor_json(r.extension)}, {"counit", nat_json(r.counit)}, {"pointwise", r.pointwise}};
    }

    auto kan() -> CommandResult
    {
        auto s = functor(required("functor"));
        auto u = functor(required("along"));
        if (! (s.source() == u.source()))
            throw PreconditionUnmet("the functor and the functor it extends along need a common source");
        auto method = options_.value("method").value_or("both");
        if (method != "pointwise" && method != "search" && method != "both")
            throw UsageError("--method must be pointwise, search or both");
        std::optional<RanResult> pointwise, search;
        string missing;
        if (method != "search") {
            try {
                pointwise = right_kan_pointwise(s, u);
            }
            catch (const MissingCommaLimit & e) {
                missing = e.what();
            }
        }
        if (method != "pointwise")
            search = right_kan_search(s, u, options_.budget);
        auto found = search ? search : pointwise;
        if (! found) {
            string text = "no right Kan extension" + (missing.empty() ? string() : " (" + missing + ")") + "\n";
            return result(exit_negative, text, {{"exists", false}, {"reason", missing}});
        }
        auto canonical = canonicalize(*found, u, options_.budget);
        auto body = ran_json(canonical);
        string text = "right Kan extension:\n" + ran_text(canonical);
        if (pointwise && search) {
            bool agree = same_extension(canonicalize(*pointwise, u, options_.budget), canonical);
            body["routes_agree"] = agree;
            text += string("  pointwise and search routes agree: ") + (agree ? "true" : "false") + "\n";
        }
        else if (method == "both") {
            text += "  pointwise construction: " + missing + "\n";
        }
        return result(exit_computed, text, body);
    }

    auto codensity() -> CommandResult
    {
        auto u = functor_or_forgetful();
        auto r = codensity_monad(u, options_.budget);
        if (! r)
            return result(exit_negative, "no codensity monad\n", {{"exists", false}});
        bool identity = r->monad == identity_monad(u.target_ptr());
        auto body = monad_json(r->monad);
        body["exists"] = true;
        body["pointwise"] = r->pointwise;
        body["identity"] = identity;
        string text = string("codensity monad") + (identity ? " (identity monad)" : "") + ":\n" + monad_text(r->monad)
            + "  pointwise: " + (r->pointwise ? "true" : "false") + "\n";
        return result(exit_computed, text, body);
    }

    auto adjoint() -> CommandResult
    {
        auto u = functor_or_forgetful();
        auto adj = left_adjoint(u);
        if (! adj)
            return result(exit_negative, "no left adjoint\n", {{"exists", false}});
        string text = "left adjoint: " + object_map_text(adj->left) + "\n  unit: " + components_text(adj->unit)
            + "\n  counit: " + components_text(adj->counit) + "\n";
        return result(exit_computed, text, {{"exists", true}, {"left", functor_json(adj->left)}, {"unit", nat_json(adj->unit)},
            {"counit", nat_json(adj->counit)}});
    }

    auto alg() -> CommandResult
    {
        auto f = functor(required("functor"));
        if (! f.is_endofunctor())
            throw PreconditionUnmet("Alg needs an endofunctor");
        auto a = alg_category(f);
        return result(exit_computed, "Alg F:\n" + concrete_text(*a), concrete_json(*a));
    }

    auto polymeric() -> CommandResult
    {
        auto names = options_.all("identity");
        if (names.empty())
            throw UsageError("missing --identity");
        vector<PolymericIdentity> identities;
        for (auto & n : names)
            identities.push_back(ws_.identity(n));
        auto v = polymeric_variety(identities.front().endofunctor, identities);
        return result(exit_computed, "polymeric variety:\n" + concrete_text(*v), concrete_json(*v));
    }

    auto em() -> CommandResult
    {
        auto m = ws_.monad(required("monad"));
        auto e = em_category(m);
        auto body = concrete_json(*e);
        json free = json::object();
        string text = "Eilenberg-Moore category:\n" + concrete_text(*e) + "  free algebras:";
        auto & c = m.endofunctor.source();
        for (ObjId a = 0 ; a < c.num_objects() ; ++a) {
            auto fa = em_free(m, a);
            auto name = algebra_name(c, fa.carrier, fa.structure);
            free[c.object_name(a)] = name;
            text += (a ? ", " : " ") + c.object_name(a) + " |-> " + name;
        }
        body["free"] = free;
        return result(exit_computed, text + "\n", body);
    }

    auto product() -> CommandResult
    {
        vector<ConcretePtr> factors;
        for (auto & n : options_.all("concrete"))
            factors.push_back(ws_.concrete(n));
        CatPtr base;
        if (auto b = options_.value("base"))
            base = ws_.category(*b);
        else if (! factors.empty())
            base = factors.front()->base_ptr();
        else
            throw UsageError("the empty product needs --base");
        for (auto & f : factors)
            if (! (f->base() == *base))
                throw PreconditionUnmet("factors live over different bases");
        auto p = concrete_product(factors, base);
        return result(exit_computed, "fibre-wise product:\n" + concrete_text(*p.category), concrete_json(*p.category));
    }

    auto equalizer() -> CommandResult
    {
        auto source = ws_.concrete(required("source"));
        auto target = ws_.concrete(required("target"));
        auto first = make_concrete_functor(source, target, functor(required("first")));
        auto second = make_concrete_functor(source, target, functor(required("second")));
        auto e = concrete_equalizer(first, second);
        return result(exit_computed, "equalizer:\n" + concrete_text(*e.category), concrete_json(*e.category));
    }

    /// The diagram of algebra categories on the free category of the graph with a vertex per
    /// endofunctor and an edge F -> G per transformation G => F.
    auto algebra_diagram(const vector<string> & functors, const vector<string> & nats) -> ConcreteDiagram
    {
        if (functors.empty())
            throw UsageError("missing --functor");
        vector<Functor> vertices;
        for (auto & n : functors)
            vertices.push_back(functor(n));
        auto base = vertices.front().source_ptr();
        for (auto & v : vertices)
            if (! v.is_endofunctor() || ! (v.source() == *base))
                throw PreconditionUnmet("vertices must be endofunctors of one category");
        auto vertex_of = [&] (const string & expression, const Functor & f) {
            for (std::size_t i = 0 ; i < functors.size() ; ++i)
                if (quote_name(functors[i]) == expression)
                    return static_cast<int>(i);
            for (std::size_t i = 0 ; i < vertices.size() ; ++i)
                if (vertices[i] == f)
                    return static_cast<int>(i);
            return -1;
        };
        struct Edge { string name; int from; int to; NatTrans nat; };
        vector<Edge> edges;
        for (auto & n : nats) {
            auto it = ws_.transformations.find(n);
            if (it == ws_.transformations.end())
                throw UnknownName("no transformation named '" + n + "'", {n});
            auto & t = it->second.transformation;
            int g = vertex_of(it->second.source, t.source()), f = vertex_of(it->second.target, t.target());
            if (g < 0 || f < 0)
                throw PreconditionUnmet("transformation " + n + " does not join two vertices");
            edges.push_back({n, f, g, t});
        }

        vector<ConcretePtr> algs;
        for (auto & v : vertices)
            algs.push_back(alg_category(v));

        // Paths of the free category, as edge sequences in traversal order.
        vector<vector<int>> paths;
        std::function<void (vector<int> &)> extend = [&] (vector<int> & path) {
            if (path.size() > edges.size())
                throw PreconditionUnmet("the transformations form a cycle");
            paths.push_back(path);
            for (int e = 0 ; e < static_cast<int>(edges.size()) ; ++e)
                if (edges[e].from == edges[path.back()].to) {
                    path.push_back(e);
                    extend(path);
                    path.pop_back();
                }
        };
        for (int e = 0 ; e < static_cast<int>(edges.size()) ; ++e) {
            vector<int> path{e};
            extend(path);
        }

        CategoryBuilder builder;
        std::set<string> used;
        for (auto & n : functors)
            if (! used.insert(n).second)
                throw PreconditionUnmet("vertex " + n + " is listed twice");
        for (auto & n : functors)
            builder.add_object(n);
        std::map<vector<int>, int> id_of;
        vector<string> names;
        for (auto & path : paths) {
            string name;
            for (auto it = path.rbegin() ; it != path.rend() ; ++it)
                name += (name.empty() ? "" : ".") + edges[*it].name;
            id_of[path] = builder.add_morphism(name, edges[path.front()].from, edges[path.back()].to);
            names.push_back(name);
        }
        vector<vector<int>> path_of(builder.num_morphisms());
        for (auto & [path, id] : id_of)
            path_of[id] = path;
        auto built = builder.build([&] (int g, int f) {
            auto path = path_of[f];
            path.insert(path.end(), path_of[g].begin(), path_of[g].end());
            return id_of.at(path);
        });

        vector<std::pair<string, ConcreteFunctor>> morphisms;
        for (std::size_t p = 0 ; p < paths.size() ; ++p) {
            std::optional<ConcreteFunctor> composite;
            for (int e : paths[p]) {
                auto step = alg_of_transformation(edges[e].nat, algs[edges[e].from], algs[edges[e].to]);
                composite = composite ? compose(step, *composite) : step;
            }
            morphisms.emplace_back(names[p], *composite);
        }
        vector<ConcretePtr> objects(algs.size());
        for (std::size_t v = 0 ; v < algs.size() ; ++v)
            objects[built.object_ids[v]] = algs[v];
        return make_concrete_diagram(base, built.category, objects, morphisms);
    }

    auto lalg() -> CommandResult
    {
        auto d = algebra_diagram(options_.all("functor"), options_.all("nat"));
        auto l = build_l_algebraic(d);
        return result(exit_computed, "l-algebraic category:\n" + concrete_text(*l.category), concrete_json(*l.category));
    }

    auto beck_text(const BeckVerdict & v) -> string
    {
        string text = string("Beck: ") + (v.beck ? "true" : "false") + "\n";
        for (auto & c : v.checks)
            text += "  [" + string(c.holds ? (c.vacuous ? "vacuous" : "ok") : "FAIL") + "] " + c.name
                + (c.witness.empty() ? "" : " -- " + c.witness) + "\n";
        return text + "  scope: " + v.scope + "\n";
    }

    auto beck_json(const BeckVerdict & v) -> json
    {
        json checks = json::array();
        for (auto & c : v.checks)
            checks.push_back({{"name", c.name}, {"holds", c.holds}, {"vacuous", c.vacuous}, {"witness", c.witness}});
        return {{"beck", v.beck}, {"checks", checks}, {"scope", v.scope}};
    }

    auto corpus_summary(const string & what, const std::function<bool (const ConcretePtr &)> & test) -> CommandResult
    {
        int yes = 0, total = 0;
        json items = json::object();
        for (auto & [name, x] : instances::concrete_corpus(4, 3)) {
            bool v = test(x);
            items[name] = v;
            yes += v;
            ++total;
        }
        string text = what + " on the seed corpus: " + std::to_string(yes) + " of " + std::to_string(total) + "\n";
        return result(exit_computed, text, {{"instances", items}, {"holds", yes}, {"total", total}});
    }

    auto beck() -> CommandResult
    {
        if (options_.seed_corpus)
            return corpus_summary("Beck", [&] (const ConcretePtr & x) { return is_beck(*x, options_.shapes).beck; });
        auto v = is_beck(*ws_.concrete(concrete_name()), options_.shapes);
        return result(v.beck ? exit_computed : exit_negative, beck_text(v), beck_json(v));
    }

    auto monadic() -> CommandResult
    {
        if (options_.seed_corpus)
            return corpus_summary("monadic", [&] (const ConcretePtr & x) { return is_monadic(x, options_.budget).monadic; });
        auto v = is_monadic(ws_.concrete(concrete_name()), options_.budget);
        json body = {{"monadic", v.monadic}, {"codensity", v.codensity.has_value()}, {"witness", v.witness}};
        string text = string("monadic: ") + (v.monadic ? "true" : "false") + (v.witness.empty() ? "" : " (" + v.witness + ")") + "\n";
        if (v.codensity)
            text += "codensity monad:\n" + monad_text(v.codensity->monad);
        return result(v.monadic ? exit_computed : exit_negative, text, body);
    }

    auto verify() -> CommandResult
    {
        auto theorem = options_.positional;
        vector<TheoremReport> reports;
        BeckTheoremOptions beck_options{options_.budget, options_.shapes};

        auto concretes = [&] {
            vector<std::pair<string, ConcretePtr>> out;
            auto names = options_.all("concrete");
            if (names.empty() && options_.all("monad").empty())
                for (auto & [kind, name] : ws_.order)
                    if (kind == Workspace::Kind::concrete)
                        names.push_back(name);
            for (auto & n : names)
                out.emplace_back(n, ws_.concrete(n));
            return out;
        };
        auto monads = [&] {
            auto names = options_.all("monad");
            if (names.empty() && options_.all("concrete").empty())
                for (auto & [kind, name] : ws_.order)
                    if (kind == Workspace::Kind::monad)
                        names.push_back(name);
            return names;
        };

        if (theorem == "beck-equivalence" || theorem == "alg-universal-codensity") {
            auto run = [&] (const ConcretePtr & x, const string & name) {
                reports.push_back(theorem == "beck-equivalence" ? verify_beck_theorems(x, beck_options, name)
                        : verify_alg_universal_iff_codensity(x, options_.budget, name));
            };
            for (auto & [name, x] : concretes())
                run(x, name);
            for (auto & name : monads())
                run(em_category(ws_.monad(name)), "Eilenberg-Moore category of " + name);
            if (options_.seed_corpus)
                for (auto & [name, x] : instances::concrete_corpus(4, 3))
                    run(x, name);
        }
        else if (theorem == "em-polymeric") {
            for (auto & name : monads())
                reports.push_back(verify_em_polymeric(ws_.monad(name), name));
            if (options_.seed_corpus) {
                for (auto & [name, m] : instances::closure_monads(4))
                    reports.push_back(verify_em_polymeric(m, name));
                for (auto & [name, m] : instances::monoid_monads(3))
                    reports.push_back(verify_em_polymeric(m, name));
            }
        }
        else if (theorem == "limiting-cones-create-kan") {
            if (! options_.all("functor").empty()) {
                auto d = algebra_diagram(options_.all("functor"), options_.all("nat"));
                auto limit = concrete_limit(d);
                reports.push_back(verify_limiting_cones_create_kan(d, limit, identity_functor(limit.category->total_ptr()),
                        limit.category->forgetful, options_.budget, "workspace diagram"));
            }
            if (options_.seed_corpus)
                for (auto & i : instances::limit_of_alg_instances())
                    reports.push_back(verify_limiting_cones_create_kan(i.diagram, i.limit, i.functor, i.along, options_.budget, i.name));
        }
        else {
            throw UsageError("unknown theorem '" + theorem
                    + "' (beck-equivalence, em-polymeric, alg-universal-codensity, limiting-cones-create-kan)");
        }
        if (reports.empty())
            throw UsageError("nothing to verify: give targets or --seed-corpus");

        bool pass = true;
        string text;
        json items = json::array();
        for (auto & r : reports) {
            pass = pass && r.verdict();
            text += render_text(r);
            items.push_back(to_json(r));
        }
        text += "verdict: " + string(pass ? "pass" : "FAIL") + " (" + std::to_string(reports.size()) + " reports)\n";
        return result(pass ? exit_computed : exit_negative, text, {{"reports", items}, {"verdict", pass ? "pass" : "fail"}});
    }

    auto examples() -> CommandResult
    {
        struct Expectation { string suite; string claim; bool holds; };
        vector<Expectation> results;
        auto expect = [&] (const string & suite, const string & claim, bool holds) {
            results.push_back({suite, claim, holds});
        };

        {
            auto w = parse(shipped_two_plus_two(), "two_plus_two.cat");
            auto x = w.concrete("X");
            auto c = w.category("C");
            auto s = "two_plus_two";
            expect(s, "Beck", is_beck(*x, options_.shapes).beck);
            auto cod = codensity_monad(x->forgetful, options_.budget);
            expect(s, "codensity monad exists", cod.has_value());
            expect(s, "codensity monad is the identity monad", cod && cod->monad == identity_monad(c));
            expect(s, "codensity monad is not pointwise", cod && ! cod->pointwise);
            expect(s, "no left adjoint", ! left_adjoint(x->forgetful));
            expect(s, "not monadic", ! is_monadic(x, options_.budget).monadic);
            auto report = verify_beck_theorems(x, {options_.budget, options_.shapes}, s);
            expect(s, "equivalences hold", report.verdict());
            auto universal = alg_universal_arrow(x, options_.budget);
            expect(s, "Alg-universal arrow with base functor Id", universal && universal->endofunctor == identity_functor(c));
        }
        {
            auto w = parse(shipped_chain_closure(), "chain_closure.cat");
            auto x = w.concrete("X");
            auto m = w.monad("M");
            auto s = "chain_closure";
            auto cod = codensity_monad(x->forgetful, options_.budget);
            expect(s, "codensity monad of the fixed points is M", cod && cod->monad == m);
            expect(s, "codensity monad is pointwise", cod && cod->pointwise);
            auto adj = left_adjoint(x->forgetful);
            expect(s, "left adjoint exists", adj.has_value());
            expect(s, "adjunction monad is M", adj && adjunction_monad(*adj) == m);
            expect(s, "monadic", is_monadic(x, options_.budget).monadic);
            expect(s, "Eilenberg-Moore category equals the polymeric variety", verify_em_polymeric(m, s).verdict());
            for (auto & [label, y] : {std::pair{string("fixed points"), x}, std::pair{string("Eilenberg-Moore category"), em_category(m)}}) {
                auto report = verify_beck_theorems(y, {options_.budget, options_.shapes}, s);
                bool all = report.verdict();
                for (auto & f : report.findings)
                    if (f.name.starts_with("("))
                        all = all && f.value;
                expect(s, label + ": all five conditions hold", all);
            }
            auto universal = alg_universal_arrow(x, options_.budget);
            expect(s, "Alg-universal arrow with base functor c", universal && universal->endofunctor == m.endofunctor);
            auto variety = polymeric_variety(m.endofunctor, {w.identity("unit_law")});
            expect(s, "unit law variety is the fixed points", variety->total().num_objects() == 2);
        }
        for (auto & i : instances::limit_of_alg_instances())
            expect("limits", i.name + ": limiting cone creates the Kan extension",
                    verify_limiting_cones_create_kan(i.diagram, i.limit, i.functor, i.along, options_.budget, i.name).verdict());

        bool pass = true;
        string text;
        json items = json::array();
        for (auto & r : results) {
            pass = pass && r.holds;
            text += "[" + string(r.holds ? "ok" : "MISMATCH") + "] " + r.suite + ": " + r.claim + "\n";
            items.push_back({{"suite", r.suite}, {"claim", r.claim}, {"holds", r.holds}});
        }
        text += pass ? "all examples reproduced\n" : "MISMATCH in the example suites\n";
        return result(pass ? exit_computed : exit_negative, text, {{"results", items}, {"pass", pass}});
    }
};

auto wrap(const string & command, CommandResult r) -> CommandResult
{
    json body = {{"schema", json_schema_version}, {"command", command}, {"exit_code", r.exit_code}, {"result", r.json}};
    r.json = std::move(body);
    return r;
}

auto failure(const string & command, const std::exception & e) -> CommandResult
{
    json error = {{"kind", error_kind(e)}, {"message", e.what()}};
    if (auto k = dynamic_cast<const Error *>(&e))
        error["witness"] = k->witness();
    if (auto d = dynamic_cast<const DslError *>(&e))
        error["location"] = {{"file", d->location().file}, {"line", d->location().line}, {"column", d->location().column}};
    string text = "error: ";
    if (! dynamic_cast<const DslError *>(&e))
        text += error_kind(e) + ": ";
    text += string(e.what()) + "\n";
    return {exit_error, text, {{"schema", json_schema_version}, {"command", command}, {"exit_code", exit_error}, {"error", error}}};
}

}

auto run_command(const string & command, const Workspace & workspace, const CommandOptions & options) -> CommandResult
{
    try {
        return wrap(command, Runner(workspace, options).run(command));
    }
    catch (const std::exception & e) {
        return failure(command, e);
    }
}

auto run_command(const string & command, const CommandOptions & options) -> CommandResult
{
    Workspace workspace;
    try {
        for (auto & path : options.inputs)
            parse_file_into(workspace, path);
    }
    catch (const std::exception & e) {
        return failure(command, e);
    }
    return run_command(command, workspace, options);
}

}
