#include <kanex/kernel.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace kanex {

using std::optional;
using std::string;
using std::string_view;
using std::vector;

auto identity_name(string_view object) -> string
{
    return "id_" + string(object);
}

void FinCategory::index_()
{
    const auto n = objects_.size();
    homs_.assign(n * n, {});
    for (MorId f = 0 ; f < num_morphisms() ; ++f)
        homs_[static_cast<std::size_t>(morphisms_[f].source) * n + morphisms_[f].target].push_back(f);
    object_index_.clear();
    morphism_index_.clear();
    for (ObjId a = 0 ; a < num_objects() ; ++a)
        object_index_.emplace(objects_[a], a);
    for (MorId f = 0 ; f < num_morphisms() ; ++f)
        morphism_index_.emplace(morphisms_[f].name, f);
}

auto FinCategory::find_object(string_view name) const -> optional<ObjId>
{
    auto it = object_index_.find(string(name));
    if (it == object_index_.end())
        return std::nullopt;
    return it->second;
}

auto FinCategory::find_morphism(string_view name) const -> optional<MorId>
{
    auto it = morphism_index_.find(string(name));
    if (it == morphism_index_.end())
        return std::nullopt;
    return it->second;
}

auto FinCategory::object(string_view name) const -> ObjId
{
    if (auto a = find_object(name))
        return *a;
    throw UnknownName("unknown object '" + string(name) + "'", {string(name)});
}

auto FinCategory::morphism(string_view name) const -> MorId
{
    if (auto f = find_morphism(name))
        return *f;
    throw UnknownName("unknown morphism '" + string(name) + "'", {string(name)});
}

auto FinCategory::presentation() const -> Presentation
{
    Presentation p;
    p.objects = objects_;
    for (MorId f = 0 ; f < num_morphisms() ; ++f)
        if (! is_identity(f))
            p.morphisms.push_back({morphisms_[f].name, objects_[source(f)], objects_[target(f)]});
    for (MorId g = 0 ; g < num_morphisms() ; ++g)
        for (MorId f = 0 ; f < num_morphisms() ; ++f)
            if (! is_identity(g) && ! is_identity(f) && compose(g, f) != none)
                p.compositions.push_back({morphism_name(g), morphism_name(f), morphism_name(compose(g, f))});
    return p;
}

auto FinCategory::operator==(const FinCategory & other) const -> bool
{
    if (objects_ != other.objects_ || morphisms_.size() != other.morphisms_.size() || compose_ != other.compose_)
        return false;
    for (std::size_t i = 0 ; i < morphisms_.size() ; ++i)
        if (morphisms_[i].name != other.morphisms_[i].name || morphisms_[i].source != other.morphisms_[i].source
                || morphisms_[i].target != other.morphisms_[i].target)
            return false;
    return true;
}

auto build_category(const Presentation & presentation) -> FinCategory
{
    FinCategory c;

    c.objects_ = presentation.objects;
    std::sort(c.objects_.begin(), c.objects_.end());
    if (auto dup = std::adjacent_find(c.objects_.begin(), c.objects_.end()) ; dup != c.objects_.end())
        throw LawViolation("duplicate object '" + *dup + "'", {*dup});

    std::unordered_map<string, ObjId> objects;
    for (ObjId a = 0 ; a < c.num_objects() ; ++a)
        objects.emplace(c.objects_[a], a);
    auto lookup_object = [&] (const string & name) {
        auto it = objects.find(name);
        if (it == objects.end())
            throw UnknownName("unknown object '" + name + "'", {name});
        return it->second;
    };

    vector<FinCategory::Morphism> all;
    for (ObjId a = 0 ; a < c.num_objects() ; ++a)
        all.push_back({identity_name(c.objects_[a]), a, a});
    for (auto & m : presentation.morphisms)
        all.push_back({m.name, lookup_object(m.source), lookup_object(m.target)});
    std::sort(all.begin(), all.end(), [] (auto & x, auto & y) { return x.name < y.name; });
    for (std::size_t i = 1 ; i < all.size() ; ++i)
        if (all[i].name == all[i - 1].name)
            throw LawViolation("duplicate morphism '" + all[i].name + "'", {all[i].name});
    c.morphisms_ = std::move(all);

    c.identities_.assign(c.objects_.size(), none);
    for (MorId f = 0 ; f < c.num_morphisms() ; ++f) {
        auto & m = c.morphisms_[f];
        if (m.source == m.target && m.name == identity_name(c.objects_[m.source]))
            c.identities_[m.source] = f;
    }
    c.index_();

    const auto n = static_cast<std::size_t>(c.num_morphisms());
    c.compose_.assign(n * n, none);
    auto slot = [&] (MorId g, MorId f) -> MorId & { return c.compose_[g * n + f]; };

    for (MorId f = 0 ; f < c.num_morphisms() ; ++f) {
        slot(c.identity(c.target(f)), f) = f;
        slot(f, c.identity(c.source(f))) = f;
    }

    for (auto & fact : presentation.compositions) {
        MorId g = c.morphism(fact.after), f = c.morphism(fact.before), h = c.morphism(fact.result);
        if (c.target(f) != c.source(g))
            throw LawViolation("composition fact " + fact.after + " . " + fact.before + " names a non-composable pair",
                    {fact.after, fact.before});
        if (c.source(h) != c.source(f) || c.target(h) != c.target(g))
            throw LawViolation("composite " + fact.after + " . " + fact.before + " = " + fact.result + " has the wrong type",
                    {fact.after, fact.before, fact.result});
        MorId & entry = slot(g, f);
        if (entry != none && entry != h)
            throw LawViolation("composite " + fact.after + " . " + fact.before + " is both " + c.morphism_name(entry)
                    + " and " + fact.result, {fact.after, fact.before, fact.result});
        entry = h;
    }

    for (MorId g = 0 ; g < c.num_morphisms() ; ++g)
        for (MorId f = 0 ; f < c.num_morphisms() ; ++f) {
            if (c.target(f) != c.source(g) || slot(g, f) != none)
                continue;
            auto candidates = c.hom(c.source(f), c.target(g));
            if (candidates.size() != 1)
                throw MissingComposite("no composite declared for " + c.morphism_name(g) + " . " + c.morphism_name(f),
                        {c.morphism_name(g), c.morphism_name(f)});
            slot(g, f) = candidates[0];
        }

    for (MorId h = 0 ; h < c.num_morphisms() ; ++h)
        for (MorId g = 0 ; g < c.num_morphisms() ; ++g) {
            if (c.target(g) != c.source(h))
                continue;
            MorId hg = slot(h, g);
            for (ObjId a = 0 ; a < c.num_objects() ; ++a)
                for (MorId f : c.hom(a, c.source(g)))
                    if (slot(h, slot(g, f)) != slot(hg, f))
                        throw LawViolation("associativity fails for (" + c.morphism_name(h) + ", " + c.morphism_name(g)
                                + ", " + c.morphism_name(f) + ")",
                                {c.morphism_name(h), c.morphism_name(g), c.morphism_name(f)});
        }

    return c;
}

auto make_category(const Presentation & presentation) -> CatPtr
{
    return std::make_shared<const FinCategory>(build_category(presentation));
}

auto opposite(const FinCategory & category) -> FinCategory
{
    FinCategory op = category;
    for (auto & m : op.morphisms_)
        std::swap(m.source, m.target);
    const auto n = static_cast<std::size_t>(category.num_morphisms());
    for (std::size_t g = 0 ; g < n ; ++g)
        for (std::size_t f = 0 ; f < n ; ++f)
            op.compose_[g * n + f] = category.compose_[f * n + g];
    op.index_();
    return op;
}

auto empty_category() -> CatPtr
{
    static const CatPtr empty = make_category({});
    return empty;
}

auto terminal_category() -> CatPtr
{
    static const CatPtr one = make_category({{"0"}, {}, {}});
    return one;
}

auto CategoryBuilder::add_object(string name) -> int
{
    int a = num_objects();
    objects_.push_back(std::move(name));
    identities_.push_back(num_morphisms());
    morphisms_.push_back({identity_name(objects_.back()), a, a, true});
    return a;
}

auto CategoryBuilder::identity(int object) -> int
{
    return identities_[object];
}

auto CategoryBuilder::add_morphism(string name, int source, int target) -> int
{
    morphisms_.push_back({std::move(name), source, target, false});
    return num_morphisms() - 1;
}

auto CategoryBuilder::finish_(const vector<std::pair<int, int>> & composable, const vector<int> & results) const -> Built
{
    Presentation p;
    p.objects = objects_;
    for (auto & m : morphisms_)
        if (! m.identity)
            p.morphisms.push_back({m.name, objects_[m.source], objects_[m.target]});
    for (std::size_t i = 0 ; i < composable.size() ; ++i)
        p.compositions.push_back({morphisms_[composable[i].first].name, morphisms_[composable[i].second].name,
                morphisms_[results[i]].name});

    Built built;
    built.category = make_category(p);
    for (auto & o : objects_)
        built.object_ids.push_back(built.category->object(o));
    for (auto & m : morphisms_)
        built.morphism_ids.push_back(built.category->morphism(m.name));
    return built;
}

auto Functor::is_endofunctor() const -> bool
{
    return source_ == target_ || *source_ == *target_;
}

auto Functor::operator==(const Functor & other) const -> bool
{
    if (objects_ != other.objects_ || morphisms_ != other.morphisms_)
        return false;
    auto same = [] (const CatPtr & x, const CatPtr & y) { return x == y || (x && y && *x == *y); };
    return same(source_, other.source_) && same(target_, other.target_);
}

auto Functor::unchecked(CatPtr source, CatPtr target, vector<ObjId> objects, vector<MorId> morphisms) -> Functor
{
    Functor f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    f.objects_ = std::move(objects);
    f.morphisms_ = std::move(morphisms);
    return f;
}

namespace {

struct Failure
{
    string message;
    vector<string> witness;
};

auto functoriality_failure_with_witness(const Functor & functor) -> optional<Failure>
{
    auto & s = functor.source();
    auto & t = functor.target();
    if (static_cast<int>(functor.object_map().size()) != s.num_objects()
            || static_cast<int>(functor.morphism_map().size()) != s.num_morphisms())
        return Failure{"maps are not total on the source", {"source"}};
    for (ObjId a = 0 ; a < s.num_objects() ; ++a)
        if (functor.obj(a) < 0 || functor.obj(a) >= t.num_objects())
            return Failure{"object " + s.object_name(a) + " has no valid image", {s.object_name(a)}};
    for (MorId f = 0 ; f < s.num_morphisms() ; ++f) {
        MorId image = functor.mor(f);
        if (image < 0 || image >= t.num_morphisms())
            return Failure{"morphism " + s.morphism_name(f) + " has no valid image", {s.morphism_name(f)}};
        if (t.source(image) != functor.obj(s.source(f)) || t.target(image) != functor.obj(s.target(f)))
            return Failure{"image of " + s.morphism_name(f) + " has the wrong source or target",
                {s.morphism_name(f), t.morphism_name(image)}};
    }
    for (ObjId a = 0 ; a < s.num_objects() ; ++a)
        if (functor.mor(s.identity(a)) != t.identity(functor.obj(a)))
            return Failure{"identity of " + s.object_name(a) + " is not preserved",
                {s.morphism_name(s.identity(a)), t.morphism_name(functor.mor(s.identity(a)))}};
    for (MorId g = 0 ; g < s.num_morphisms() ; ++g)
        for (MorId f = 0 ; f < s.num_morphisms() ; ++f) {
            MorId gf = s.compose(g, f);
            if (gf != none && functor.mor(gf) != t.compose(functor.mor(g), functor.mor(f)))
                return Failure{"composite " + s.morphism_name(g) + " . " + s.morphism_name(f) + " is not preserved",
                    {s.morphism_name(g), s.morphism_name(f), s.morphism_name(gf)}};
        }
    return std::nullopt;
}

}

auto functoriality_failure(const Functor & functor) -> optional<string>
{
    if (auto failure = functoriality_failure_with_witness(functor))
        return failure->message;
    return std::nullopt;
}

auto build_functor(CatPtr source, CatPtr target, vector<ObjId> objects, vector<MorId> morphisms) -> Functor
{
    auto f = Functor::unchecked(std::move(source), std::move(target), std::move(objects), std::move(morphisms));
    if (auto failure = functoriality_failure_with_witness(f))
        throw FunctorialityViolation(failure->message, failure->witness);
    return f;
}

auto build_functor(CatPtr source, CatPtr target,
        const vector<std::pair<string, string>> & objects,
        const vector<std::pair<string, string>> & morphisms) -> Functor
{
    vector<ObjId> object_map(source->num_objects(), none);
    for (auto & [from, to] : objects)
        object_map[source->object(from)] = target->object(to);
    for (ObjId a = 0 ; a < source->num_objects() ; ++a)
        if (object_map[a] == none)
            throw FunctorialityViolation("object " + source->object_name(a) + " is not mapped", {source->object_name(a)});

    vector<MorId> morphism_map(source->num_morphisms(), none);
    for (auto & [from, to] : morphisms)
        morphism_map[source->morphism(from)] = target->morphism(to);
    for (MorId f = 0 ; f < source->num_morphisms() ; ++f) {
        if (morphism_map[f] != none)
            continue;
        if (source->is_identity(f)) {
            morphism_map[f] = target->identity(object_map[source->source(f)]);
            continue;
        }
        auto candidates = target->hom(object_map[source->source(f)], object_map[source->target(f)]);
        if (candidates.size() != 1)
            throw FunctorialityViolation("image of morphism " + source->morphism_name(f) + " is not determined",
                    {source->morphism_name(f)});
        morphism_map[f] = candidates[0];
    }
    return build_functor(std::move(source), std::move(target), std::move(object_map), std::move(morphism_map));
}

auto identity_functor(CatPtr category) -> Functor
{
    vector<ObjId> objects(category->num_objects());
    vector<MorId> morphisms(category->num_morphisms());
    std::iota(objects.begin(), objects.end(), 0);
    std::iota(morphisms.begin(), morphisms.end(), 0);
    return Functor::unchecked(category, category, std::move(objects), std::move(morphisms));
}

auto constant_functor(CatPtr source, CatPtr target, ObjId value) -> Functor
{
    vector<ObjId> objects(source->num_objects(), value);
    vector<MorId> morphisms(source->num_morphisms(), target->identity(value));
    return Functor::unchecked(std::move(source), std::move(target), std::move(objects), std::move(morphisms));
}

auto compose(const Functor & after, const Functor & before) -> Functor
{
    if (! (before.target_ptr() == after.source_ptr() || before.target() == after.source()))
        throw FunctorialityViolation("functors are not composable");
    vector<ObjId> objects(before.source().num_objects());
    vector<MorId> morphisms(before.source().num_morphisms());
    for (ObjId a = 0 ; a < before.source().num_objects() ; ++a)
        objects[a] = after.obj(before.obj(a));
    for (MorId f = 0 ; f < before.source().num_morphisms() ; ++f)
        morphisms[f] = after.mor(before.mor(f));
    return Functor::unchecked(before.source_ptr(), after.target_ptr(), std::move(objects), std::move(morphisms));
}

auto opposite(const Functor & functor, CatPtr source_op, CatPtr target_op) -> Functor
{
    return Functor::unchecked(std::move(source_op), std::move(target_op),
            {functor.object_map().begin(), functor.object_map().end()},
            {functor.morphism_map().begin(), functor.morphism_map().end()});
}

auto check_faithful(const Functor & functor) -> FaithfulnessVerdict
{
    auto & s = functor.source();
    for (ObjId a = 0 ; a < s.num_objects() ; ++a)
        for (ObjId b = 0 ; b < s.num_objects() ; ++b) {
            auto hom = s.hom(a, b);
            for (std::size_t i = 0 ; i < hom.size() ; ++i)
                for (std::size_t j = i + 1 ; j < hom.size() ; ++j)
                    if (functor.mor(hom[i]) == functor.mor(hom[j]))
                        return {false, std::pair{hom[i], hom[j]}};
        }
    return {};
}

auto subcategory(const CatPtr & category, const vector<bool> & keep_objects, const vector<bool> & keep_morphisms) -> Functor
{
    auto & c = *category;
    CategoryBuilder builder;
    vector<int> object_of(c.num_objects(), none);
    vector<ObjId> objects;
    for (ObjId a = 0 ; a < c.num_objects() ; ++a)
        if (keep_objects[a]) {
            object_of[a] = builder.add_object(c.object_name(a));
            objects.push_back(a);
        }
    vector<int> morphism_of(c.num_morphisms(), none);
    vector<MorId> morphisms(builder.num_morphisms(), none);
    for (ObjId a : objects) {
        morphism_of[c.identity(a)] = builder.identity(object_of[a]);
        morphisms[builder.identity(object_of[a])] = c.identity(a);
    }
    for (MorId f = 0 ; f < c.num_morphisms() ; ++f) {
        if (! keep_morphisms[f] || c.is_identity(f))
            continue;
        if (! keep_objects[c.source(f)] || ! keep_objects[c.target(f)])
            throw LawViolation("kept morphism " + c.morphism_name(f) + " leaves the kept objects");
        morphism_of[f] = builder.add_morphism(c.morphism_name(f), object_of[c.source(f)], object_of[c.target(f)]);
        morphisms.push_back(f);
    }
    auto built = builder.build([&] (int g, int f) {
        int result = morphism_of[c.compose(morphisms[g], morphisms[f])];
        if (result == none)
            throw LawViolation("kept morphisms are not closed under composition");
        return result;
    });
    vector<ObjId> object_map(built.category->num_objects());
    vector<MorId> morphism_map(built.category->num_morphisms());
    for (std::size_t i = 0 ; i < objects.size() ; ++i)
        object_map[built.object_ids[i]] = objects[i];
    for (std::size_t i = 0 ; i < morphisms.size() ; ++i)
        morphism_map[built.morphism_ids[i]] = morphisms[i];
    return Functor::unchecked(built.category, category, std::move(object_map), std::move(morphism_map));
}

auto full_subcategory(const CatPtr & category, const vector<ObjId> & objects) -> Functor
{
    vector<bool> keep_objects(category->num_objects(), false);
    for (ObjId a : objects)
        keep_objects[a] = true;
    vector<bool> keep_morphisms(category->num_morphisms(), false);
    for (MorId f = 0 ; f < category->num_morphisms() ; ++f)
        keep_morphisms[f] = keep_objects[category->source(f)] && keep_objects[category->target(f)];
    return subcategory(category, keep_objects, keep_morphisms);
}

FunctorPowers::FunctorPowers(Functor base)
{
    if (! base.is_endofunctor())
        throw FunctorialityViolation("powers are defined for endofunctors only");
    powers_.push_back(identity_functor(base.source_ptr()));
    powers_.push_back(std::move(base));
}

auto FunctorPowers::operator[](int n) -> const Functor &
{
    while (static_cast<int>(powers_.size()) <= n)
        powers_.push_back(compose(powers_[1], powers_.back()));
    return powers_[n];
}

auto NatTrans::operator==(const NatTrans & other) const -> bool
{
    return components_ == other.components_ && source_ == other.source_ && target_ == other.target_;
}

auto NatTrans::unchecked(Functor source, Functor target, vector<MorId> components) -> NatTrans
{
    NatTrans t;
    t.source_ = std::move(source);
    t.target_ = std::move(target);
    t.components_ = std::move(components);
    return t;
}

namespace {

auto naturality_failure_with_witness(const NatTrans & t) -> optional<Failure>
{
    auto & F = t.source();
    auto & G = t.target();
    auto & s = F.source();
    auto & c = F.target();
    if (! (F.source() == G.source()) || ! (F.target() == G.target()))
        return Failure{"source and target functors are not parallel", {"source", "target"}};
    if (static_cast<int>(t.components().size()) != s.num_objects())
        return Failure{"components are not total", {"components"}};
    for (ObjId a = 0 ; a < s.num_objects() ; ++a) {
        MorId m = t.at(a);
        if (m < 0 || m >= c.num_morphisms() || c.source(m) != F.obj(a) || c.target(m) != G.obj(a))
            return Failure{"component at " + s.object_name(a) + " has the wrong type", {s.object_name(a)}};
    }
    for (MorId f = 0 ; f < s.num_morphisms() ; ++f)
        if (c.compose(G.mor(f), t.at(s.source(f))) != c.compose(t.at(s.target(f)), F.mor(f)))
            return Failure{"naturality square fails at " + s.morphism_name(f),
                {s.morphism_name(f), c.morphism_name(t.at(s.source(f))), c.morphism_name(t.at(s.target(f)))}};
    return std::nullopt;
}

}

auto naturality_failure(const NatTrans & t) -> optional<string>
{
    if (auto failure = naturality_failure_with_witness(t))
        return failure->message;
    return std::nullopt;
}

auto build_nat_trans(Functor source, Functor target, vector<MorId> components) -> NatTrans
{
    auto t = NatTrans::unchecked(std::move(source), std::move(target), std::move(components));
    if (auto failure = naturality_failure_with_witness(t))
        throw NaturalitySquareViolation(failure->message, failure->witness);
    return t;
}

auto identity_transformation(const Functor & functor) -> NatTrans
{
    vector<MorId> components(functor.source().num_objects());
    for (ObjId a = 0 ; a < functor.source().num_objects() ; ++a)
        components[a] = functor.target().identity(functor.obj(a));
    return NatTrans::unchecked(functor, functor, std::move(components));
}

auto vertical(const NatTrans & after, const NatTrans & before) -> NatTrans
{
    if (! (before.target() == after.source()))
        throw NaturalitySquareViolation("transformations are not vertically composable");
    auto & c = before.source().target();
    vector<MorId> components(before.components().size());
    for (std::size_t a = 0 ; a < components.size() ; ++a)
        components[a] = c.compose(after.at(static_cast<ObjId>(a)), before.at(static_cast<ObjId>(a)));
    return NatTrans::unchecked(before.source(), after.target(), std::move(components));
}

auto whisker_left(const Functor & functor, const NatTrans & t) -> NatTrans
{
    vector<MorId> components(t.components().size());
    for (std::size_t a = 0 ; a < components.size() ; ++a)
        components[a] = functor.mor(t.at(static_cast<ObjId>(a)));
    return NatTrans::unchecked(compose(functor, t.source()), compose(functor, t.target()), std::move(components));
}

auto whisker_right(const NatTrans & t, const Functor & functor) -> NatTrans
{
    vector<MorId> components(functor.source().num_objects());
    for (ObjId a = 0 ; a < functor.source().num_objects() ; ++a)
        components[a] = t.at(functor.obj(a));
    return NatTrans::unchecked(compose(t.source(), functor), compose(t.target(), functor), std::move(components));
}

auto horizontal(const NatTrans & outer, const NatTrans & inner) -> NatTrans
{
    return vertical(whisker_left(outer.target(), inner), whisker_right(outer, inner.source()));
}

auto inverse(const FinCategory & c, MorId f) -> optional<MorId>
{
    for (MorId g : c.hom(c.target(f), c.source(f)))
        if (c.compose(g, f) == c.identity(c.source(f)) && c.compose(f, g) == c.identity(c.target(f)))
            return g;
    return std::nullopt;
}

auto is_iso(const FinCategory & c, MorId f) -> bool
{
    return inverse(c, f).has_value();
}

auto is_natural_iso(const NatTrans & t) -> bool
{
    auto & c = t.source().target();
    for (MorId m : t.components())
        if (! is_iso(c, m))
            return false;
    return true;
}

auto describe(const FinCategory & c, MorId f) -> string
{
    return c.morphism_name(f) + ": " + c.object_name(c.source(f)) + " -> " + c.object_name(c.target(f));
}

}
