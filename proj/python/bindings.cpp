#include <kanex/cli.hpp>
#include <kanex/instances.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace kanex;

namespace {

auto to_python(const nlohmann::json & value) -> py::object
{
    return py::module_::import("json").attr("loads")(value.dump());
}

auto object_map(const Functor & f) -> py::dict
{
    py::dict out;
    for (ObjId a = 0 ; a < f.source().num_objects() ; ++a)
        out[py::str(f.source().object_name(a))] = f.target().object_name(f.obj(a));
    return out;
}

auto morphism_map(const Functor & f) -> py::dict
{
    py::dict out;
    for (MorId m = 0 ; m < f.source().num_morphisms() ; ++m)
        out[py::str(f.source().morphism_name(m))] = f.target().morphism_name(f.mor(m));
    return out;
}

auto components(const NatTrans & t) -> py::dict
{
    py::dict out;
    auto & c = t.source().source();
    for (ObjId a = 0 ; a < c.num_objects() ; ++a)
        out[py::str(c.object_name(a))] = t.source().target().morphism_name(t.at(a));
    return out;
}

auto report_dict(const TheoremReport & report) -> py::object
{
    return to_python(to_json(report));
}

auto options_from(const py::dict & values) -> CommandOptions
{
    CommandOptions o;
    for (auto [key, value] : values) {
        auto name = py::cast<std::string>(key);
        if (name == "json")
            o.json = py::cast<bool>(value);
        else if (name == "seed_corpus")
            o.seed_corpus = py::cast<bool>(value);
        else if (name == "budget")
            o.budget.max_candidates = py::cast<std::uint64_t>(value);
        else if (name == "positional")
            o.positional = py::cast<std::string>(value);
        else if (name == "inputs")
            o.inputs = py::cast<std::vector<std::string>>(value);
        else if (name == "shapes") {
            o.shapes.clear();
            for (auto & s : py::cast<std::vector<std::string>>(value))
                o.shapes.push_back(parse_shape(s));
        }
        else if (py::isinstance<py::str>(value))
            o.values[name] = {py::cast<std::string>(value)};
        else
            o.values[name] = py::cast<std::vector<std::string>>(value);
    }
    return o;
}

}

PYBIND11_MODULE(_kanex, m)
{
    m.doc() = "Finite categories, Kan extensions, codensity monads and algebraic concrete categories";

    auto base_error = py::register_exception<Error>(m, "KanexError", PyExc_RuntimeError);
    py::register_exception<DslError>(m, "DslError", base_error.ptr());

    py::class_<FinCategory, std::shared_ptr<FinCategory>>(m, "Category")
        .def_property_readonly("objects", [] (const FinCategory & c) {
            std::vector<std::string> out;
            for (ObjId a = 0 ; a < c.num_objects() ; ++a)
                out.push_back(c.object_name(a));
            return out;
        })
        .def_property_readonly("morphisms", [] (const FinCategory & c) {
            std::vector<std::tuple<std::string, std::string, std::string>> out;
            for (MorId f = 0 ; f < c.num_morphisms() ; ++f)
                out.emplace_back(c.morphism_name(f), c.object_name(c.source(f)), c.object_name(c.target(f)));
            return out;
        })
        .def("compose", [] (const FinCategory & c, const std::string & after, const std::string & before) -> std::optional<std::string> {
            MorId h = c.compose(c.morphism(after), c.morphism(before));
            if (h == none)
                return std::nullopt;
            return c.morphism_name(h);
        })
        .def("hom", [] (const FinCategory & c, const std::string & a, const std::string & b) {
            std::vector<std::string> out;
            for (MorId f : c.hom(c.object(a), c.object(b)))
                out.push_back(c.morphism_name(f));
            return out;
        })
        .def("__eq__", [] (const FinCategory & a, const FinCategory & b) { return a == b; })
        .def("__len__", &FinCategory::num_objects);

    py::class_<Functor>(m, "Functor")
        .def_property_readonly("source", [] (const Functor & f) { return std::const_pointer_cast<FinCategory>(f.source_ptr()); })
        .def_property_readonly("target", [] (const Functor & f) { return std::const_pointer_cast<FinCategory>(f.target_ptr()); })
        .def_property_readonly("object_map", &object_map)
        .def_property_readonly("morphism_map", &morphism_map)
        .def("__eq__", [] (const Functor & a, const Functor & b) { return a == b; })
        .def("__matmul__", [] (const Functor & after, const Functor & before) { return compose(after, before); });

    py::class_<NatTrans>(m, "NatTrans")
        .def_property_readonly("source", &NatTrans::source)
        .def_property_readonly("target", &NatTrans::target)
        .def_property_readonly("components", &components)
        .def("__eq__", [] (const NatTrans & a, const NatTrans & b) { return a == b; });

    py::class_<Monad>(m, "Monad")
        .def_readonly("endofunctor", &Monad::endofunctor)
        .def_readonly("unit", &Monad::unit)
        .def_readonly("multiplication", &Monad::multiplication)
        .def("__eq__", [] (const Monad & a, const Monad & b) { return a == b; });

    py::class_<ConcreteCategory, std::shared_ptr<ConcreteCategory>>(m, "ConcreteCategory")
        .def_property_readonly("total", [] (const ConcreteCategory & x) { return std::const_pointer_cast<FinCategory>(x.total_ptr()); })
        .def_property_readonly("base", [] (const ConcreteCategory & x) { return std::const_pointer_cast<FinCategory>(x.base_ptr()); })
        .def_readonly("forgetful", &ConcreteCategory::forgetful)
        .def_readonly("f_algebraic", &ConcreteCategory::f_algebraic)
        .def_readonly("l_algebraic", &ConcreteCategory::l_algebraic)
        .def("fibre", [] (const ConcreteCategory & x, const std::string & a) {
            std::vector<std::string> out;
            for (ObjId o : x.fibre(x.base().object(a)))
                out.push_back(x.total().object_name(o));
            return out;
        })
        .def("__repr__", [] (const ConcreteCategory & x) { return "<ConcreteCategory " + describe(x) + ">"; });

    py::class_<PolymericIdentity>(m, "PolymericIdentity")
        .def_readonly("m", &PolymericIdentity::m)
        .def_readonly("n", &PolymericIdentity::n);

    py::class_<Workspace>(m, "Workspace")
        .def(py::init<>())
        .def("category", [] (const Workspace & w, const std::string & n) { return std::const_pointer_cast<FinCategory>(w.category(n)); })
        .def("functor", &Workspace::functor)
        .def("transformation", &Workspace::transformation)
        .def("monad", &Workspace::monad)
        .def("concrete", [] (const Workspace & w, const std::string & n) { return std::const_pointer_cast<ConcreteCategory>(w.concrete(n)); })
        .def("identity", &Workspace::identity)
        .def_property_readonly("names", [] (const Workspace & w) {
            std::vector<std::string> out;
            for (auto & [kind, name] : w.order)
                out.push_back(name);
            return out;
        })
        .def("parse", [] (Workspace & w, const std::string & text, const std::string & file) { parse_into(w, text, file); },
            py::arg("text"), py::arg("file") = "<input>")
        .def("render", [] (const Workspace & w) { return render(w); });

    m.def("parse", &parse, py::arg("text"), py::arg("file") = "<input>");
    m.def("parse_file", &parse_file);
    m.def("shipped_example", [] (const std::string & name) {
        if (name == "two_plus_two")
            return shipped_two_plus_two();
        if (name == "chain_closure")
            return shipped_chain_closure();
        throw py::value_error("unknown example " + name);
    });

    m.def("run", [] (const std::string & command, const std::optional<Workspace> & workspace, const py::dict & options) {
        auto o = options_from(options);
        auto result = workspace ? run_command(command, *workspace, o) : run_command(command, o);
        return py::make_tuple(result.exit_code, to_python(result.json), result.text);
    }, py::arg("command"), py::arg("workspace") = std::nullopt, py::arg("options") = py::dict());

    m.def("identity_functor", [] (const std::shared_ptr<FinCategory> & c) { return identity_functor(c); });

    m.def("right_kan", [] (const Functor & s, const Functor & u, const std::string & method, std::uint64_t budget) -> py::object {
        std::optional<RanResult> r;
        if (method == "pointwise")
            r = try_right_kan_pointwise(s, u);
        else if (method == "search")
            r = right_kan_search(s, u, {budget});
        else
            throw py::value_error("method must be pointwise or search");
        if (! r)
            return py::none();
        auto canonical = canonicalize(*r, u, {budget});
        py::dict out;
        out["extension"] = canonical.extension;
        out["counit"] = canonical.counit;
        out["pointwise"] = canonical.pointwise;
        return out;
    }, py::arg("functor"), py::arg("along"), py::arg("method") = "search", py::arg("budget") = Budget{}.max_candidates);

    m.def("codensity_monad", [] (const Functor & u) -> py::object {
        auto r = codensity_monad(u);
        if (! r)
            return py::none();
        py::dict out;
        out["monad"] = r->monad;
        out["pointwise"] = r->pointwise;
        return out;
    });

    m.def("left_adjoint", [] (const Functor & u) -> py::object {
        auto adj = left_adjoint(u);
        if (! adj)
            return py::none();
        py::dict out;
        out["left"] = adj->left;
        out["unit"] = adj->unit;
        out["counit"] = adj->counit;
        out["monad"] = adjunction_monad(*adj);
        return out;
    });

    m.def("is_beck", [] (const std::shared_ptr<ConcreteCategory> & x) { return is_beck(*x).beck; });
    m.def("is_monadic", [] (const std::shared_ptr<ConcreteCategory> & x) { return is_monadic(x).monadic; });
    m.def("alg_category", [] (const Functor & f) { return std::const_pointer_cast<ConcreteCategory>(alg_category(f)); });
    m.def("em_category", [] (const Monad & m) { return std::const_pointer_cast<ConcreteCategory>(em_category(m)); });
    m.def("polymeric_variety", [] (const Functor & f, const std::vector<PolymericIdentity> & identities) {
        return std::const_pointer_cast<ConcreteCategory>(polymeric_variety(f, identities));
    });
    m.def("em_identities", &em_identities);
    m.def("concretely_identical", [] (const std::shared_ptr<ConcreteCategory> & a, const std::shared_ptr<ConcreteCategory> & b) {
        return concretely_identical(*a, *b);
    });

    m.def("verify_beck_theorems", [] (const std::shared_ptr<ConcreteCategory> & x, const std::string & instance) {
        return report_dict(verify_beck_theorems(x, {}, instance));
    }, py::arg("category"), py::arg("instance") = "");
    m.def("verify_em_polymeric", [] (const Monad & m, const std::string & instance) {
        return report_dict(verify_em_polymeric(m, instance));
    }, py::arg("monad"), py::arg("instance") = "");
    m.def("verify_alg_universal_iff_codensity", [] (const std::shared_ptr<ConcreteCategory> & x, const std::string & instance) {
        return report_dict(verify_alg_universal_iff_codensity(x, {}, instance));
    }, py::arg("category"), py::arg("instance") = "");

    m.def("concrete_corpus", [] (int max_size, int max_order) {
        std::vector<std::pair<std::string, std::shared_ptr<ConcreteCategory>>> out;
        for (auto & [name, x] : instances::concrete_corpus(max_size, max_order))
            out.emplace_back(name, std::const_pointer_cast<ConcreteCategory>(x));
        return out;
    }, py::arg("max_size") = 3, py::arg("max_order") = 2);

    m.attr("JSON_SCHEMA_VERSION") = json_schema_version;
}
