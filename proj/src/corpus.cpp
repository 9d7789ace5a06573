#include <kanex/corpus.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace kanex::corpus {

using std::string;
using std::vector;

auto poset_morphism_name(const string & below, const string & above) -> string
{
    return below + "<=" + above;
}

auto poset(const vector<string> & elements, const vector<std::pair<int, int>> & relations) -> CatPtr
{
    const int n = static_cast<int>(elements.size());
    vector<vector<bool>> le(n, vector<bool>(n, false));
    for (int x = 0 ; x < n ; ++x)
        le[x][x] = true;
    for (auto [x, y] : relations)
        le[x][y] = true;
    for (int k = 0 ; k < n ; ++k)
        for (int x = 0 ; x < n ; ++x)
            for (int y = 0 ; y < n ; ++y)
                if (le[x][k] && le[k][y])
                    le[x][y] = true;
    for (int x = 0 ; x < n ; ++x)
        for (int y = x + 1 ; y < n ; ++y)
            if (le[x][y] && le[y][x])
                throw LawViolation("relations are not antisymmetric at " + elements[x] + ", " + elements[y]);

    CategoryBuilder builder;
    for (auto & e : elements)
        builder.add_object(e);
    vector<vector<int>> arrow(n, vector<int>(n, none));
    for (int x = 0 ; x < n ; ++x)
        arrow[x][x] = builder.identity(x);
    for (int x = 0 ; x < n ; ++x)
        for (int y = 0 ; y < n ; ++y)
            if (x != y && le[x][y])
                arrow[x][y] = builder.add_morphism(poset_morphism_name(elements[x], elements[y]), x, y);
    return builder.build([&] (int g, int f) {
        return arrow[builder.morphism_source(f)][builder.morphism_target(g)];
    }).category;
}

auto chain(int length) -> CatPtr
{
    vector<string> elements;
    vector<std::pair<int, int>> relations;
    for (int i = 0 ; i < length ; ++i) {
        elements.push_back(std::to_string(i));
        if (i > 0)
            relations.emplace_back(i - 1, i);
    }
    return poset(elements, relations);
}

auto discrete(int size) -> CatPtr
{
    vector<string> elements;
    for (int i = 0 ; i < size ; ++i)
        elements.push_back(std::to_string(i));
    return poset(elements, {});
}

auto diamond() -> CatPtr
{
    return poset({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

auto join_semilattice() -> CatPtr
{
    return poset({"a", "b", "c", "1"}, {{0, 3}, {1, 3}, {2, 0}});
}

auto monoid(const vector<string> & elements, const vector<vector<int>> & table) -> CatPtr
{
    CategoryBuilder builder;
    builder.add_object("*");
    vector<int> ids{builder.identity(0)};
    for (std::size_t i = 1 ; i < elements.size() ; ++i)
        ids.push_back(builder.add_morphism(elements[i], 0, 0));
    vector<int> element_of(builder.num_morphisms());
    for (std::size_t i = 0 ; i < ids.size() ; ++i)
        element_of[ids[i]] = static_cast<int>(i);
    return builder.build([&] (int g, int f) {
        return ids[table[element_of[g]][element_of[f]]];
    }).category;
}

auto two_plus_two() -> CatPtr
{
    static const CatPtr category = make_category({{"0", "1", "0'", "1'"}, {{"i", "0", "1"}, {"i'", "0'", "1'"}}, {}});
    return category;
}

auto two_plus_two_inclusion() -> Functor
{
    static const CatPtr small = make_category({{"0", "0'"}, {}, {}});
    return build_functor(small, two_plus_two(), {{"0", "0"}, {"0'", "0'"}}, {});
}

auto all_posets(int size) -> vector<Instance>
{
    vector<std::pair<int, int>> pairs;
    for (int x = 0 ; x < size ; ++x)
        for (int y = x + 1 ; y < size ; ++y)
            pairs.emplace_back(x, y);

    vector<int> permutation(size);
    std::iota(permutation.begin(), permutation.end(), 0);
    vector<vector<int>> permutations;
    do
        permutations.push_back(permutation);
    while (std::next_permutation(permutation.begin(), permutation.end()));

    std::set<vector<bool>> seen;
    vector<Instance> result;
    for (unsigned mask = 0 ; mask < (1u << pairs.size()) ; ++mask) {
        vector<vector<bool>> le(size, vector<bool>(size, false));
        for (std::size_t p = 0 ; p < pairs.size() ; ++p)
            if (mask & (1u << p))
                le[pairs[p].first][pairs[p].second] = true;
        bool transitive = true;
        for (int x = 0 ; x < size && transitive ; ++x)
            for (int y = 0 ; y < size && transitive ; ++y)
                for (int z = 0 ; z < size && transitive ; ++z)
                    if (le[x][y] && le[y][z] && ! le[x][z])
                        transitive = false;
        if (! transitive)
            continue;

        vector<bool> canonical;
        for (auto & perm : permutations) {
            vector<bool> relabelled;
            for (int x = 0 ; x < size ; ++x)
                for (int y = 0 ; y < size ; ++y)
                    relabelled.push_back(le[perm[x]][perm[y]]);
            if (canonical.empty() || relabelled < canonical)
                canonical = relabelled;
        }
        if (! seen.insert(canonical).second)
            continue;

        vector<string> elements;
        for (int x = 0 ; x < size ; ++x)
            elements.push_back(std::to_string(x));
        vector<std::pair<int, int>> relations;
        for (int x = 0 ; x < size ; ++x)
            for (int y = 0 ; y < size ; ++y)
                if (le[x][y])
                    relations.emplace_back(x, y);
        result.push_back({"poset" + std::to_string(size) + "_" + std::to_string(result.size()), poset(elements, relations)});
    }
    return result;
}

auto all_monoids(int order) -> vector<Instance>
{
    static const char * names[] = {"id_*", "a", "b", "c", "d"};
    const int k = order - 1;
    vector<string> elements(names, names + order);

    vector<int> permutation(k);
    std::iota(permutation.begin(), permutation.end(), 1);
    vector<vector<int>> relabellings;
    do {
        vector<int> full{0};
        full.insert(full.end(), permutation.begin(), permutation.end());
        relabellings.push_back(full);
    } while (std::next_permutation(permutation.begin(), permutation.end()));

    vector<vector<int>> table(order, vector<int>(order, 0));
    for (int x = 0 ; x < order ; ++x) {
        table[0][x] = x;
        table[x][0] = x;
    }

    std::set<vector<int>> seen;
    vector<Instance> result;
    std::function<void (int)> fill = [&] (int cell) {
        if (cell == k * k) {
            for (int x = 0 ; x < order ; ++x)
                for (int y = 0 ; y < order ; ++y)
                    for (int z = 0 ; z < order ; ++z)
                        if (table[table[x][y]][z] != table[x][table[y][z]])
                            return;
            vector<int> canonical;
            for (auto & r : relabellings) {
                // r maps new labels to old ones; inverse maps old to new
                vector<int> inverse(order);
                for (int i = 0 ; i < order ; ++i)
                    inverse[r[i]] = i;
                vector<int> relabelled;
                for (int x = 0 ; x < order ; ++x)
                    for (int y = 0 ; y < order ; ++y)
                        relabelled.push_back(inverse[table[r[x]][r[y]]]);
                if (canonical.empty() || relabelled < canonical)
                    canonical = relabelled;
            }
            if (! seen.insert(canonical).second)
                return;
            result.push_back({"monoid" + std::to_string(order) + "_" + std::to_string(result.size()), monoid(elements, table)});
            return;
        }
        int x = cell / k + 1, y = cell % k + 1;
        for (int v = 0 ; v < order ; ++v) {
            table[x][y] = v;
            fill(cell + 1);
        }
    };
    fill(0);
    return result;
}

auto seed_categories(int max_size, int max_order) -> vector<Instance>
{
    vector<Instance> result;
    for (int n = 1 ; n <= max_size ; ++n)
        for (auto & p : all_posets(n))
            result.push_back(p);
    for (int n = 2 ; n <= max_order ; ++n)
        for (auto & m : all_monoids(n))
            result.push_back(m);
    result.push_back({"two_plus_two", two_plus_two()});
    return result;
}

}
