#include <kanex/diagrams.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace kanex {

using std::optional;
using std::string;
using std::vector;

auto is_cone(const Diagram & diagram, const Cone & cone) -> bool
{
    auto & shape = diagram.source();
    auto & c = diagram.target();
    if (static_cast<int>(cone.legs.size()) != shape.num_objects())
        return false;
    for (ObjId d = 0 ; d < shape.num_objects() ; ++d) {
        MorId leg = cone.legs[d];
        if (leg < 0 || leg >= c.num_morphisms() || c.source(leg) != cone.apex || c.target(leg) != diagram.obj(d))
            return false;
    }
    for (MorId phi = 0 ; phi < shape.num_morphisms() ; ++phi)
        if (c.compose(diagram.mor(phi), cone.legs[shape.source(phi)]) != cone.legs[shape.target(phi)])
            return false;
    return true;
}

auto cones_with_apex(const Diagram & diagram, ObjId apex) -> vector<Cone>
{
    auto & shape = diagram.source();
    auto & c = diagram.target();
    const int n = shape.num_objects();

    vector<vector<MorId>> checks(n);
    for (MorId phi = 0 ; phi < shape.num_morphisms() ; ++phi)
        if (! shape.is_identity(phi))
            checks[std::max(shape.source(phi), shape.target(phi))].push_back(phi);

    vector<Cone> result;
    Cone current{apex, vector<MorId>(n, none)};
    std::function<void (ObjId)> assign = [&] (ObjId d) {
        if (d == n) {
            result.push_back(current);
            return;
        }
        for (MorId leg : c.hom(apex, diagram.obj(d))) {
            current.legs[d] = leg;
            bool ok = true;
            for (MorId phi : checks[d])
                if (c.compose(diagram.mor(phi), current.legs[shape.source(phi)]) != current.legs[shape.target(phi)]) {
                    ok = false;
                    break;
                }
            if (ok)
                assign(d + 1);
        }
        current.legs[d] = none;
    };
    assign(0);
    return result;
}

auto factorizations(const Diagram & diagram, const Cone & cone, const Cone & other) -> vector<MorId>
{
    auto & c = diagram.target();
    vector<MorId> result;
    for (MorId m : c.hom(other.apex, cone.apex)) {
        bool ok = true;
        for (std::size_t d = 0 ; d < cone.legs.size() ; ++d)
            if (c.compose(cone.legs[d], m) != other.legs[d]) {
                ok = false;
                break;
            }
        if (ok)
            result.push_back(m);
    }
    return result;
}

auto is_limit(const Diagram & diagram, const Cone & cone) -> bool
{
    if (! is_cone(diagram, cone))
        return false;
    auto & c = diagram.target();
    for (ObjId x = 0 ; x < c.num_objects() ; ++x) {
        std::set<vector<MorId>> images;
        for (MorId m : c.hom(x, cone.apex)) {
            vector<MorId> legs(cone.legs.size());
            for (std::size_t d = 0 ; d < legs.size() ; ++d)
                legs[d] = c.compose(cone.legs[d], m);
            if (! images.insert(std::move(legs)).second)
                return false;
        }
        if (images.size() != cones_with_apex(diagram, x).size())
            return false;
    }
    return true;
}

auto limit(const Diagram & diagram) -> optional<Cone>
{
    for (ObjId apex = 0 ; apex < diagram.target().num_objects() ; ++apex)
        for (auto & cone : cones_with_apex(diagram, apex))
            if (is_limit(diagram, cone))
                return cone;
    return std::nullopt;
}

auto all_limits(const Diagram & diagram) -> vector<Cone>
{
    vector<Cone> result;
    for (ObjId apex = 0 ; apex < diagram.target().num_objects() ; ++apex)
        for (auto & cone : cones_with_apex(diagram, apex))
            if (is_limit(diagram, cone))
                result.push_back(cone);
    return result;
}

namespace
{
    auto opposite_diagram(const Diagram & diagram) -> Diagram
    {
        auto shape_op = std::make_shared<const FinCategory>(opposite(diagram.source()));
        auto target_op = std::make_shared<const FinCategory>(opposite(diagram.target()));
        return opposite(diagram, shape_op, target_op);
    }
}

auto is_cocone(const Diagram & diagram, const Cone & cocone) -> bool
{
    return is_cone(opposite_diagram(diagram), cocone);
}

auto is_colimit(const Diagram & diagram, const Cone & cocone) -> bool
{
    return is_limit(opposite_diagram(diagram), cocone);
}

auto colimit(const Diagram & diagram) -> optional<Cone>
{
    return limit(opposite_diagram(diagram));
}

auto all_colimits(const Diagram & diagram) -> vector<Cone>
{
    return all_limits(opposite_diagram(diagram));
}

auto comma_category(ObjId base_object, const Functor & functor) -> CommaCategory
{
    auto & a = functor.source();
    auto & c = functor.target();

    CategoryBuilder builder;
    vector<ObjId> carrier;
    vector<MorId> arrow;
    vector<string> names;
    for (ObjId x = 0 ; x < a.num_objects() ; ++x)
        for (MorId f : c.hom(base_object, functor.obj(x))) {
            names.push_back("(" + a.object_name(x) + "," + c.morphism_name(f) + ")");
            builder.add_object(names.back());
            carrier.push_back(x);
            arrow.push_back(f);
        }

    // builder morphism -> underlying morphism of the source category
    vector<MorId> underlying(builder.num_morphisms(), none);
    std::map<std::tuple<MorId, int, int>, int> morphism_of;
    for (int o = 0 ; o < builder.num_objects() ; ++o) {
        underlying[builder.identity(o)] = a.identity(carrier[o]);
        morphism_of[{a.identity(carrier[o]), o, o}] = builder.identity(o);
    }
    for (int x = 0 ; x < builder.num_objects() ; ++x)
        for (int y = 0 ; y < builder.num_objects() ; ++y)
            for (MorId g : a.hom(carrier[x], carrier[y])) {
                if ((a.is_identity(g) && x == y) || c.compose(functor.mor(g), arrow[x]) != arrow[y])
                    continue;
                morphism_of[{g, x, y}] = builder.add_morphism(a.morphism_name(g) + ":" + names[x] + "->" + names[y], x, y);
                underlying.push_back(g);
            }

    auto built = builder.build([&] (int g, int f) {
        return morphism_of.at({a.compose(underlying[g], underlying[f]), builder.morphism_source(f), builder.morphism_target(g)});
    });

    CommaCategory result;
    result.base_object = base_object;
    result.category = built.category;
    auto & k = *built.category;
    vector<ObjId> projection_objects(k.num_objects());
    vector<MorId> projection_morphisms(k.num_morphisms());
    result.arrows.assign(k.num_objects(), none);
    for (int o = 0 ; o < builder.num_objects() ; ++o) {
        projection_objects[built.object_ids[o]] = carrier[o];
        result.arrows[built.object_ids[o]] = arrow[o];
    }
    for (int m = 0 ; m < builder.num_morphisms() ; ++m)
        projection_morphisms[built.morphism_ids[m]] = underlying[m];
    result.projection = Functor::unchecked(built.category, functor.source_ptr(),
            std::move(projection_objects), std::move(projection_morphisms));
    return result;
}

auto shape_category(Shape shape) -> CatPtr
{
    static const CatPtr shapes[] = {
        empty_category(),
        terminal_category(),
        make_category({{"0", "1"}, {}, {}}),
        make_category({{"0", "1", "2"}, {}, {}}),
        make_category({{"a", "b"}, {{"p", "a", "b"}, {"q", "a", "b"}}, {}}),
        make_category({{"0", "1", "2"}, {{"l", "2", "0"}, {"r", "2", "1"}}, {}}),
        make_category({{"0", "1", "2"}, {{"l", "0", "2"}, {"r", "1", "2"}}, {}}),
    };
    return shapes[static_cast<int>(shape)];
}

auto shape_name(Shape shape) -> string
{
    static const char * names[] = {"empty", "terminal", "discrete2", "discrete3", "parallel", "span", "cospan"};
    return names[static_cast<int>(shape)];
}

auto default_shapes() -> vector<Shape>
{
    return {Shape::empty, Shape::terminal, Shape::discrete2, Shape::discrete3, Shape::parallel_pair, Shape::span,
        Shape::cospan};
}

auto parse_shape(const string & name) -> Shape
{
    for (auto s : default_shapes())
        if (shape_name(s) == name)
            return s;
    throw UnknownName("unknown shape '" + name + "'", {name});
}

namespace
{
    auto describe_cone(const FinCategory & c, const Cone & cone) -> string
    {
        string out = "apex " + c.object_name(cone.apex) + ", legs [";
        for (std::size_t d = 0 ; d < cone.legs.size() ; ++d)
            out += (d ? ", " : "") + c.morphism_name(cone.legs[d]);
        return out + "]";
    }

    auto lifts(const Functor & functor, const Diagram & diagram, const Cone & below,
            bool (*valid)(const Diagram &, const Cone &), vector<Cone> (*candidates)(const Diagram &, ObjId)) -> vector<Cone>
    {
        vector<Cone> result;
        auto & a = functor.source();
        for (ObjId x = 0 ; x < a.num_objects() ; ++x) {
            if (functor.obj(x) != below.apex)
                continue;
            for (auto & cone : candidates(diagram, x)) {
                bool maps_onto = true;
                for (std::size_t d = 0 ; d < cone.legs.size() ; ++d)
                    if (functor.mor(cone.legs[d]) != below.legs[d]) {
                        maps_onto = false;
                        break;
                    }
                if (maps_onto && valid(diagram, cone))
                    result.push_back(cone);
            }
        }
        return result;
    }

    auto cocones_with_apex(const Diagram & diagram, ObjId apex) -> vector<Cone>
    {
        return cones_with_apex(opposite_diagram(diagram), apex);
    }

    auto check_lifts(const Functor & functor, const Diagram & diagram, const vector<Cone> & below, bool dual) -> CreationVerdict
    {
        CreationVerdict verdict;
        if (below.empty()) {
            verdict.vacuous = true;
            return verdict;
        }
        auto & base = functor.target();
        for (auto & cone : below) {
            auto found = dual ? lifts(functor, diagram, cone, is_cocone, cocones_with_apex)
                : lifts(functor, diagram, cone, is_cone, cones_with_apex);
            string kind = dual ? "colimit cocone " : "limit cone ";
            if (found.size() != 1) {
                verdict.holds = false;
                verdict.witness = kind + describe_cone(base, cone) + " has " + std::to_string(found.size()) + " lifts";
                return verdict;
            }
            bool universal = dual ? is_colimit(diagram, found[0]) : is_limit(diagram, found[0]);
            if (! universal) {
                verdict.holds = false;
                verdict.witness = "lift of " + kind + describe_cone(base, cone) + " is not universal";
                return verdict;
            }
        }
        return verdict;
    }
}

auto creates_limit(const Functor & functor, const Diagram & diagram) -> CreationVerdict
{
    return check_lifts(functor, diagram, all_limits(compose(functor, diagram)), false);
}

auto creates_colimit(const Functor & functor, const Diagram & diagram, const vector<Cone> & colimits_below) -> CreationVerdict
{
    if (colimits_below.empty())
        return check_lifts(functor, diagram, all_colimits(compose(functor, diagram)), true);
    return check_lifts(functor, diagram, colimits_below, true);
}

auto split_forks(const FinCategory & c, MorId f, MorId g) -> vector<SplitFork>
{
    vector<SplitFork> result;
    ObjId a = c.source(f), b = c.target(f);
    for (ObjId z = 0 ; z < c.num_objects() ; ++z)
        for (MorId e : c.hom(b, z)) {
            if (c.compose(e, f) != c.compose(e, g))
                continue;
            for (MorId s : c.hom(z, b)) {
                if (c.compose(e, s) != c.identity(z))
                    continue;
                for (MorId t : c.hom(b, a))
                    if (c.compose(f, t) == c.identity(b) && c.compose(g, t) == c.compose(s, e))
                        result.push_back({e, s, t});
            }
        }
    return result;
}

auto parallel_pair_diagram(const CatPtr & category, MorId f, MorId g) -> Diagram
{
    auto shape = shape_category(Shape::parallel_pair);
    auto & c = *category;
    return build_functor(shape, category,
            {{"a", c.object_name(c.source(f))}, {"b", c.object_name(c.target(f))}},
            {{"p", c.morphism_name(f)}, {"q", c.morphism_name(g)}});
}

}
