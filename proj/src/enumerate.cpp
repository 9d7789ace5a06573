#include <kanex/enumerate.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace kanex {

using std::vector;

namespace
{
    struct Triple
    {
        MorId after, before, result;
    };

    class FunctorSearch
    {
      public:
        FunctorSearch(const CatPtr & source, const CatPtr & target, const std::function<bool (const Functor &)> & visit,
                const ObjectRestriction & restriction) :
            source_(source), target_(target), s_(*source), t_(*target), visit_(visit)
        {
            for (ObjId a = 0 ; a < s_.num_objects() ; ++a) {
                if (a < static_cast<ObjId>(restriction.size()) && ! restriction[a].empty())
                    candidates_.push_back(restriction[a]);
                else {
                    vector<ObjId> all(t_.num_objects());
                    std::iota(all.begin(), all.end(), 0);
                    candidates_.push_back(std::move(all));
                }
            }

            for (MorId f = 0 ; f < s_.num_morphisms() ; ++f)
                if (! s_.is_identity(f)) {
                    position_.push_back(f);
                }
            vector<int> position_of(s_.num_morphisms(), -1);
            for (int p = 0 ; p < static_cast<int>(position_.size()) ; ++p)
                position_of[position_[p]] = p;

            checks_.assign(position_.size(), {});
            for (MorId g = 0 ; g < s_.num_morphisms() ; ++g)
                for (MorId f = 0 ; f < s_.num_morphisms() ; ++f) {
                    if (s_.is_identity(g) || s_.is_identity(f))
                        continue;
                    MorId h = s_.compose(g, f);
                    if (h == none)
                        continue;
                    int last = std::max({position_of[g], position_of[f], position_of[h]});
                    checks_[last].push_back({g, f, h});
                }

            objects_.assign(s_.num_objects(), none);
            morphisms_.assign(s_.num_morphisms(), none);
        }

        auto space() const -> long double
        {
            long double total = 1;
            for (auto & c : candidates_)
                total *= static_cast<long double>(c.size());
            return total;
        }

        void run()
        {
            assign_object_(0);
        }

      private:
        auto assign_object_(ObjId a) -> bool
        {
            if (a == s_.num_objects()) {
                for (ObjId x = 0 ; x < s_.num_objects() ; ++x)
                    morphisms_[s_.identity(x)] = t_.identity(objects_[x]);
                return assign_morphism_(0);
            }
            for (ObjId image : candidates_[a]) {
                objects_[a] = image;
                if (! assign_object_(a + 1))
                    return false;
            }
            return true;
        }

        auto assign_morphism_(int p) -> bool
        {
            if (p == static_cast<int>(position_.size()))
                return visit_(Functor::unchecked(source_, target_, objects_, morphisms_));
            MorId f = position_[p];
            for (MorId image : t_.hom(objects_[s_.source(f)], objects_[s_.target(f)])) {
                morphisms_[f] = image;
                bool ok = true;
                for (auto & c : checks_[p])
                    if (morphisms_[c.result] != t_.compose(morphisms_[c.after], morphisms_[c.before])) {
                        ok = false;
                        break;
                    }
                if (ok && ! assign_morphism_(p + 1))
                    return false;
            }
            morphisms_[f] = none;
            return true;
        }

        const CatPtr & source_;
        const CatPtr & target_;
        const FinCategory & s_;
        const FinCategory & t_;
        const std::function<bool (const Functor &)> & visit_;
        vector<vector<ObjId>> candidates_;
        vector<MorId> position_;
        vector<vector<Triple>> checks_;
        vector<ObjId> objects_;
        vector<MorId> morphisms_;
    };
}

void for_each_functor(const CatPtr & source, const CatPtr & target, const Budget & budget,
        const std::function<bool (const Functor &)> & visit, const ObjectRestriction & restriction)
{
    FunctorSearch search(source, target, visit, restriction);
    if (search.space() > static_cast<long double>(budget.max_candidates))
        throw SearchSpaceExceeded("functor search space of size " + std::to_string(static_cast<double>(search.space()))
                + " exceeds the budget of " + std::to_string(budget.max_candidates));
    search.run();
}

auto all_functors(const CatPtr & source, const CatPtr & target, const Budget & budget,
        const ObjectRestriction & restriction) -> vector<Functor>
{
    vector<Functor> result;
    for_each_functor(source, target, budget, [&] (const Functor & f) {
        result.push_back(f);
        return true;
    }, restriction);
    return result;
}

auto all_endofunctors(const CatPtr & category, const Budget & budget) -> vector<Functor>
{
    return all_functors(category, category, budget);
}

void for_each_nat_trans(const Functor & source, const Functor & target,
        const std::function<bool (const NatTrans &)> & visit)
{
    auto & s = source.source();
    auto & c = source.target();
    const int n = s.num_objects();

    vector<vector<MorId>> checks(n);
    for (MorId f = 0 ; f < s.num_morphisms() ; ++f)
        if (! s.is_identity(f))
            checks[std::max(s.source(f), s.target(f))].push_back(f);

    vector<MorId> components(n, none);
    std::function<bool (ObjId)> assign = [&] (ObjId a) -> bool {
        if (a == n)
            return visit(NatTrans::unchecked(source, target, components));
        for (MorId m : c.hom(source.obj(a), target.obj(a))) {
            components[a] = m;
            bool ok = true;
            for (MorId f : checks[a])
                if (c.compose(target.mor(f), components[s.source(f)]) != c.compose(components[s.target(f)], source.mor(f))) {
                    ok = false;
                    break;
                }
            if (ok && ! assign(a + 1))
                return false;
        }
        components[a] = none;
        return true;
    };
    assign(0);
}

auto all_nat_trans(const Functor & source, const Functor & target) -> vector<NatTrans>
{
    vector<NatTrans> result;
    for_each_nat_trans(source, target, [&] (const NatTrans & t) {
        result.push_back(t);
        return true;
    });
    return result;
}

auto count_nat_trans(const Functor & source, const Functor & target) -> std::uint64_t
{
    std::uint64_t count = 0;
    for_each_nat_trans(source, target, [&] (const NatTrans &) {
        ++count;
        return true;
    });
    return count;
}

}
