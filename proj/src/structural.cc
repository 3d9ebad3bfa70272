#include <subcount/structural.hh>

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace subcount
{
    auto psi(const Graph & graph, int v) -> int
    {
        if (v < 0 || v >= graph.n())
            throw PreconditionError{"psi: vertex out of range"};
        std::vector<char> middle(graph.n(), 0);
        for (int u : graph.neighbors(v))
            middle[u] = 1;
        Graph paths(graph.n());
        for (auto [a, b] : graph.edges())
            if (a != v && b != v && (middle[a] || middle[b]))
                paths.add_edge(a, b);
        return max_matching_size(paths);
    }

    auto max_psi(const Graph & graph) -> int
    {
        int result = 0;
        for (int v = 0; v < graph.n(); ++v)
            result = std::max(result, psi(graph, v));
        return result;
    }

    auto starneighbor_violations(const Graph & graph) -> std::vector<int>
    {
        std::vector<int> result;
        for (int v = 0; v < graph.n(); ++v) {
            int p = psi(graph, v);
            auto heavy = std::count_if(graph.neighbors(v).begin(), graph.neighbors(v).end(),
                [&](int u) { return graph.degree(u) >= 2 * p + 2; });
            if (heavy > p)
                result.push_back(v);
        }
        return result;
    }

    EdgeColoring::EdgeColoring(int n, int colors) :
        n(n),
        colors(colors),
        table(static_cast<std::size_t>(n) * n, 0)
    {
        if (n < 0 || colors < 1)
            throw PreconditionError{"EdgeColoring: need n >= 0 and at least one color"};
    }

    auto EdgeColoring::set(int u, int v, int c) -> void
    {
        if (c < 0 || c >= colors)
            throw PreconditionError{"EdgeColoring: color out of range"};
        table[static_cast<std::size_t>(u) * n + v] = c;
        table[static_cast<std::size_t>(v) * n + u] = c;
    }

    auto ramsey_monochromatic_clique(const EdgeColoring & coloring, int r) -> std::optional<std::vector<int>>
    {
        if (r < 1)
            throw PreconditionError{"ramsey_monochromatic_clique: r must be positive"};
        if (coloring.n < r)
            return std::nullopt;
        if (r == 1)
            return std::vector<int>{0};

        // groups[c]: chain vertices whose kept class had color c. Every later
        // chain vertex sees all of them in color c.
        std::vector<std::vector<int>> groups(coloring.colors);
        std::vector<int> candidates(coloring.n);
        for (int v = 0; v < coloring.n; ++v)
            candidates[v] = v;

        while (! candidates.empty()) {
            int v = candidates.front();
            for (auto & group : groups)
                if (static_cast<int>(group.size()) == r - 1) {
                    auto clique = group;
                    clique.push_back(v);
                    return clique;
                }
            std::vector<std::vector<int>> classes(coloring.colors);
            for (std::size_t i = 1; i < candidates.size(); ++i)
                classes[coloring.color(v, candidates[i])].push_back(candidates[i]);
            int best = 0;
            for (int c = 1; c < coloring.colors; ++c)
                if (classes[c].size() > classes[best].size())
                    best = c;
            groups[best].push_back(v);
            candidates = std::move(classes[best]);
        }

        // The chain can stall below the Ramsey number; finish with a bounded
        // exhaustive search per color.
        long long budget = 2'000'000;
        for (int c = 0; c < coloring.colors; ++c) {
            std::vector<int> clique;
            std::function<bool(int)> grow = [&](int from) -> bool {
                if (static_cast<int>(clique.size()) == r)
                    return true;
                for (int x = from; x < coloring.n && budget > 0; ++x) {
                    --budget;
                    if (coloring.n - x < r - static_cast<int>(clique.size()))
                        return false;
                    if (! std::all_of(clique.begin(), clique.end(), [&](int y) { return coloring.color(x, y) == c; }))
                        continue;
                    clique.push_back(x);
                    if (grow(x + 1))
                        return true;
                    clique.pop_back();
                }
                return false;
            };
            if (grow(0))
                return clique;
        }
        return std::nullopt;
    }

    auto verify_extraction(const Graph & graph, int k, const Extraction & extraction) -> bool
    {
        auto in_range = [&](int v) { return v >= 0 && v < graph.n(); };
        switch (extraction.kind) {
        case ExtractionKind::clique: {
            auto & c = extraction.clique;
            if (static_cast<int>(c.size()) != k || ! std::all_of(c.begin(), c.end(), in_range))
                return false;
            if (std::set<int>(c.begin(), c.end()).size() != c.size())
                return false;
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = i + 1; j < c.size(); ++j)
                    if (! graph.adjacent(c[i], c[j]))
                        return false;
            return true;
        }
        case ExtractionKind::biclique: {
            auto & a = extraction.left;
            auto & b = extraction.right;
            if (static_cast<int>(a.size()) != k || static_cast<int>(b.size()) != k)
                return false;
            if (! std::all_of(a.begin(), a.end(), in_range) || ! std::all_of(b.begin(), b.end(), in_range))
                return false;
            std::set<int> all(a.begin(), a.end());
            all.insert(b.begin(), b.end());
            if (static_cast<int>(all.size()) != 2 * k)
                return false;
            for (int x : a)
                for (int y : b)
                    if (! graph.adjacent(x, y))
                        return false;
            for (auto * side : {&a, &b})
                for (std::size_t i = 0; i < side->size(); ++i)
                    for (std::size_t j = i + 1; j < side->size(); ++j)
                        if (graph.adjacent((*side)[i], (*side)[j]))
                            return false;
            return true;
        }
        case ExtractionKind::induced_matching: {
            auto & m = extraction.matching;
            if (static_cast<int>(m.size()) != k)
                return false;
            for (auto [u, v] : m)
                if (! in_range(u) || ! in_range(v) || u == v || ! graph.adjacent(u, v))
                    return false;
            return is_induced_matching(graph, m);
        }
        }
        return false;
    }

    auto extract_clique_biclique_or_matching(const Graph & graph, int k, std::vector<Edge> matching)
        -> std::optional<Extraction>
    {
        if (k < 1)
            throw PreconditionError{"extract: k must be positive"};
        if (matching.empty())
            matching = maximum_matching(graph);
        for (auto & e : matching) {
            e = make_edge(e.first, e.second);
            if (e.first < 0 || e.second >= graph.n() || ! graph.adjacent(e.first, e.second))
                throw PreconditionError{"extract: matching edge not in graph"};
        }
        if (! is_matching(matching))
            throw PreconditionError{"extract: edges do not form a matching"};

        int m = static_cast<int>(matching.size());
        EdgeColoring coloring{m, 16};
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                auto [xi, yi] = matching[i];
                auto [xj, yj] = matching[j];
                int color = (graph.adjacent(xi, xj) ? 1 : 0) | (graph.adjacent(xi, yj) ? 2 : 0)
                    | (graph.adjacent(yi, xj) ? 4 : 0) | (graph.adjacent(yi, yj) ? 8 : 0);
                coloring.set(i, j, color);
            }

        auto chosen = ramsey_monochromatic_clique(coloring, 2 * k);
        if (! chosen)
            return std::nullopt;
        auto & s = *chosen;
        std::sort(s.begin(), s.end());
        int color = coloring.color(s[0], s[1]);

        Extraction result{ExtractionKind::induced_matching, {}, {}, {}, {}};
        if (color & 1) {
            result.kind = ExtractionKind::clique;
            for (int i = 0; i < k; ++i)
                result.clique.push_back(matching[s[i]].first);
        }
        else if (color & 8) {
            result.kind = ExtractionKind::clique;
            for (int i = 0; i < k; ++i)
                result.clique.push_back(matching[s[i]].second);
        }
        else if (color & 6) {
            // x_i ~ y_j for i < j (or y_i ~ x_j): first half against second half.
            result.kind = ExtractionKind::biclique;
            bool forward = color & 2;
            for (int i = 0; i < k; ++i) {
                auto early = matching[s[i]];
                auto late = matching[s[k + i]];
                result.left.push_back(forward ? early.first : early.second);
                result.right.push_back(forward ? late.second : late.first);
            }
        }
        else
            for (int i = 0; i < k; ++i)
                result.matching.push_back(matching[s[i]]);

        if (! verify_extraction(graph, k, result))
            throw InconsistencyError{"extract: witness failed verification"};
        return result;
    }

    namespace
    {
        auto within_two(const Graph & graph, const std::vector<int> & sources) -> std::vector<char>
        {
            std::vector<char> mark(graph.n(), 0);
            for (int s : sources) {
                mark[s] = 1;
                for (int a : graph.neighbors(s)) {
                    mark[a] = 1;
                    for (int b : graph.neighbors(a))
                        mark[b] = 1;
                }
            }
            return mark;
        }

        auto check_edges(const Graph & graph, const std::vector<Edge> & edges, const std::string & what) -> void
        {
            for (auto [u, v] : edges)
                if (u < 0 || v < 0 || u >= graph.n() || v >= graph.n() || u == v || ! graph.adjacent(u, v))
                    throw PreconditionError{what + ": edge not in graph"};
        }
    }

    auto greedy_induced_matching(const Graph & graph, const std::vector<Edge> & edges, MatchingMode mode)
        -> std::vector<Edge>
    {
        check_edges(graph, edges, "greedy_induced_matching");
        std::vector<Edge> result;
        std::vector<char> blocked(graph.n(), 0);
        for (auto [u, v] : edges) {
            if (blocked[u] || blocked[v])
                continue;
            result.push_back(make_edge(u, v));
            if (mode == MatchingMode::induced) {
                for (int x : {u, v}) {
                    blocked[x] = 1;
                    for (int y : graph.neighbors(x))
                        blocked[y] = 1;
                }
            }
            else {
                auto near = within_two(graph, {u, v});
                for (int x = 0; x < graph.n(); ++x)
                    blocked[x] |= near[x];
            }
        }
        return result;
    }

    auto is_separated_matching(const Graph & graph, const std::vector<Edge> & edges) -> bool
    {
        if (! is_induced_matching(graph, edges))
            return false;
        std::vector<int> owner(graph.n(), -1);
        for (std::size_t i = 0; i < edges.size(); ++i)
            owner[edges[i].first] = owner[edges[i].second] = static_cast<int>(i);
        for (int x = 0; x < graph.n(); ++x) {
            if (owner[x] != -1)
                continue;
            int seen = -1;
            for (int y : graph.neighbors(x))
                if (owner[y] != -1) {
                    if (seen != -1 && seen != owner[y])
                        return false;
                    seen = owner[y];
                }
        }
        return true;
    }

    auto induced_matching_separated_by_stars(const Graph & graph, const std::vector<Edge> & matching, int L, int k)
        -> std::optional<std::vector<Edge>>
    {
        check_edges(graph, matching, "induced_matching_separated_by_stars");
        if (! is_induced_matching(graph, matching))
            throw PreconditionError{"induced_matching_separated_by_stars: input is not an induced matching"};
        if (max_psi(graph) > L)
            throw PreconditionError{"induced_matching_separated_by_stars: psi exceeds L"};

        std::vector<Edge> result;
        std::vector<char> near(graph.n(), 0);
        for (auto [u, v] : matching) {
            if (static_cast<int>(result.size()) == k)
                break;
            if (near[u] || near[v])
                continue;
            result.push_back(make_edge(u, v));
            auto ball = within_two(graph, {u, v});
            for (int x = 0; x < graph.n(); ++x)
                near[x] |= ball[x];
        }
        if (static_cast<int>(result.size()) < k)
            return std::nullopt;
        if (! is_separated_matching(graph, result))
            throw InconsistencyError{"induced_matching_separated_by_stars: output not separated"};
        return result;
    }

    auto degree_gap_filter(const Graph & graph, const std::vector<Edge> & matching, int low, int width, int L)
        -> DegreeGap
    {
        check_edges(graph, matching, "degree_gap_filter");
        if (! is_induced_matching(graph, matching))
            throw PreconditionError{"degree_gap_filter: input is not an induced matching"};
        if (width < 1 || low < 2 * L + 2)
            throw PreconditionError{"degree_gap_filter: need width >= 1 and low >= 2L + 2"};
        if (max_psi(graph) > L)
            throw PreconditionError{"degree_gap_filter: psi exceeds L"};

        int windows = 4 * (2 * L + 2);
        // hits[j]: (endpoint, neighbor) pairs whose neighbor degree falls in window j.
        std::vector<long long> hits(windows, 0);
        auto window_of = [&](int degree) -> int {
            if (degree < low)
                return -1;
            long long j = (degree - low) / width;
            return j < windows ? static_cast<int>(j) : -1;
        };
        for (auto [u, v] : matching)
            for (int x : {u, v})
                for (int y : graph.neighbors(x))
                    if (int j = window_of(graph.degree(y)); j != -1)
                        ++hits[j];

        for (int j = 0; j < windows; ++j) {
            if (2 * hits[j] > static_cast<long long>(matching.size()))
                continue;
            DegreeGap result;
            result.gap_start = low + j * width;
            for (auto [u, v] : matching) {
                bool touches = false;
                for (int x : {u, v})
                    for (int y : graph.neighbors(x))
                        touches |= window_of(graph.degree(y)) == j;
                if (! touches)
                    result.kept.push_back(make_edge(u, v));
            }
            if (2 * result.kept.size() < matching.size())
                throw InconsistencyError{"degree_gap_filter: kept fewer than half"};
            return result;
        }
        throw InconsistencyError{"degree_gap_filter: no sparse window; star-neighbor bound violated"};
    }

    auto select_subcollection(const std::vector<std::vector<int>> & sets, int k, int z, int r) -> std::vector<int>
    {
        if (k < 0 || z < 0 || r < 0)
            throw PreconditionError{"select_subcollection: negative parameter"};
        if (static_cast<long long>(sets.size()) < (1LL + static_cast<long long>(z) * r) * k)
            throw PreconditionError{"select_subcollection: too few sets"};
        std::vector<std::vector<int>> normalized;
        for (auto & s : sets) {
            std::vector<int> d = s;
            std::sort(d.begin(), d.end());
            d.erase(std::unique(d.begin(), d.end()), d.end());
            if (static_cast<int>(d.size()) > r)
                throw PreconditionError{"select_subcollection: set larger than r"};
            normalized.push_back(std::move(d));
        }

        std::vector<char> alive(sets.size(), 1);
        std::vector<int> chosen;
        for (int step = 0; step < k; ++step) {
            std::size_t pick = 0;
            while (! alive[pick])
                ++pick;
            alive[pick] = 0;
            chosen.push_back(static_cast<int>(pick));
            // Set aside up to z witnesses per element so it either recurs z
            // times outside the choice or never again inside it.
            for (int x : normalized[pick]) {
                int removed = 0;
                for (std::size_t i = 0; i < sets.size() && removed < z; ++i)
                    if (alive[i] && std::binary_search(normalized[i].begin(), normalized[i].end(), x)) {
                        alive[i] = 0;
                        ++removed;
                    }
            }
        }
        return chosen;
    }
}
