#include <subcount/graph.hh>

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace subcount
{
    namespace
    {
        auto words_for(int n) -> std::size_t
        {
            return (static_cast<std::size_t>(n) + 63) / 64;
        }
    }

    Graph::Graph(int n)
    {
        if (n < 0)
            throw PreconditionError{"Graph: negative vertex count"};
        add_vertices(n);
    }

    Graph::Graph(int n, const std::vector<Edge> & edges) :
        Graph(n)
    {
        for (auto [u, v] : edges)
            add_edge(u, v);
    }

    auto Graph::add_vertices(int count) -> int
    {
        int first = _n;
        _n += count;
        _adj.resize(_n);
        auto words = words_for(_n);
        _rows.resize(_n);
        for (auto & row : _rows)
            row.resize(words, 0);
        return first;
    }

    auto Graph::check_vertex(int v) const -> void
    {
        if (v < 0 || v >= _n)
            throw PreconditionError{"vertex " + std::to_string(v) + " out of range"};
    }

    auto Graph::try_add_edge(int u, int v) -> bool
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw PreconditionError{"self-loop at " + std::to_string(u)};
        if (adjacent(u, v))
            return false;
        _rows[u][v >> 6] |= std::uint64_t{1} << (v & 63);
        _rows[v][u >> 6] |= std::uint64_t{1} << (u & 63);
        _adj[u].insert(std::lower_bound(_adj[u].begin(), _adj[u].end(), v), v);
        _adj[v].insert(std::lower_bound(_adj[v].begin(), _adj[v].end(), u), u);
        ++_m;
        return true;
    }

    auto Graph::add_edge(int u, int v) -> void
    {
        if (! try_add_edge(u, v))
            throw PreconditionError{"duplicate edge " + std::to_string(u) + "-" + std::to_string(v)};
    }

    auto Graph::remove_edge(int u, int v) -> void
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v || ! adjacent(u, v))
            return;
        _rows[u][v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        _rows[v][u >> 6] &= ~(std::uint64_t{1} << (u & 63));
        _adj[u].erase(std::lower_bound(_adj[u].begin(), _adj[u].end(), v));
        _adj[v].erase(std::lower_bound(_adj[v].begin(), _adj[v].end(), u));
        --_m;
    }

    auto Graph::max_degree() const -> int
    {
        int best = 0;
        for (int v = 0; v < _n; ++v)
            best = std::max(best, degree(v));
        return best;
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        result.reserve(_m);
        for (int u = 0; u < _n; ++u)
            for (int v : _adj[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::induced(const std::vector<int> & vertices) const -> Graph
    {
        Graph result(static_cast<int>(vertices.size()));
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                if (adjacent(vertices[i], vertices[j]))
                    result.add_edge(static_cast<int>(i), static_cast<int>(j));
        return result;
    }

    auto Graph::without_vertices(const std::vector<int> & removed) const -> Graph
    {
        std::vector<char> drop(_n, 0);
        for (int v : removed)
            drop[v] = 1;
        std::vector<int> kept;
        for (int v = 0; v < _n; ++v)
            if (! drop[v])
                kept.push_back(v);
        return induced(kept);
    }

    auto Graph::operator==(const Graph & other) const -> bool
    {
        return _n == other._n && _adj == other._adj;
    }

    DirectedGraph::DirectedGraph(int n) :
        _n(n),
        _out(n),
        _in(n),
        _matrix(static_cast<std::size_t>(n) * n, 0)
    {
    }

    auto DirectedGraph::try_add_arc(int u, int v) -> bool
    {
        if (u < 0 || v < 0 || u >= _n || v >= _n)
            throw PreconditionError{"arc endpoint out of range"};
        if (u == v)
            throw PreconditionError{"self-loop at " + std::to_string(u)};
        if (has_arc(u, v))
            return false;
        _matrix[static_cast<std::size_t>(u) * _n + v] = 1;
        _out[u].insert(std::lower_bound(_out[u].begin(), _out[u].end(), v), v);
        _in[v].insert(std::lower_bound(_in[v].begin(), _in[v].end(), u), u);
        ++_m;
        return true;
    }

    auto DirectedGraph::add_arc(int u, int v) -> void
    {
        if (! try_add_arc(u, v))
            throw PreconditionError{"duplicate arc " + std::to_string(u) + "->" + std::to_string(v)};
    }

    auto DirectedGraph::arcs() const -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> result;
        for (int u = 0; u < _n; ++u)
            for (int v : _out[u])
                result.emplace_back(u, v);
        return result;
    }

    auto DirectedGraph::operator==(const DirectedGraph & other) const -> bool
    {
        return _n == other._n && _out == other._out;
    }

    auto VertexColoredGraph::validate() const -> void
    {
        if (static_cast<int>(color.size()) != graph.n())
            throw PreconditionError{"vertex coloring is not total"};
    }

    auto VertexColoredGraph::is_colorful() const -> bool
    {
        std::set<int> seen(color.begin(), color.end());
        return seen.size() == color.size();
    }

    auto VertexColoredGraph::vertices_with_color(int c) const -> std::vector<int>
    {
        std::vector<int> result;
        for (int v = 0; v < n(); ++v)
            if (color[v] == c)
                result.push_back(v);
        return result;
    }

    auto VertexColoredGraph::restricted_to_colors(const std::vector<int> & colors) const -> VertexColoredGraph
    {
        std::vector<int> kept;
        for (int v = 0; v < n(); ++v)
            if (std::binary_search(colors.begin(), colors.end(), color[v]))
                kept.push_back(v);
        VertexColoredGraph result{graph.induced(kept), {}};
        for (int v : kept)
            result.color.push_back(color[v]);
        return result;
    }

    auto EdgeColoredGraph::add_edge(int u, int v, int c) -> void
    {
        graph.add_edge(u, v);
        color[make_edge(u, v)] = c;
    }

    auto EdgeColoredGraph::color_of(int u, int v) const -> int
    {
        auto it = color.find(make_edge(u, v));
        if (it == color.end())
            throw PreconditionError{"edge has no color"};
        return it->second;
    }

    auto EdgeColoredGraph::colors() const -> std::vector<int>
    {
        std::set<int> seen;
        for (auto & [e, c] : color)
            seen.insert(c);
        return {seen.begin(), seen.end()};
    }

    auto EdgeColoredGraph::restricted_to_colors(const std::vector<int> & colors) const -> Graph
    {
        Graph result(n());
        for (auto & [e, c] : color)
            if (std::find(colors.begin(), colors.end(), c) != colors.end())
                result.add_edge(e.first, e.second);
        return result;
    }

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph
    {
        Graph result(a.n() + b.n());
        for (auto [u, v] : a.edges())
            result.add_edge(u, v);
        for (auto [u, v] : b.edges())
            result.add_edge(a.n() + u, a.n() + v);
        return result;
    }

    namespace
    {
        auto bipartite_matching(const Graph & g, const std::vector<int> & side) -> std::vector<Edge>
        {
            std::vector<int> mate(g.n(), -1);
            std::vector<int> seen(g.n(), -1);
            std::function<bool(int, int)> augment = [&](int u, int stamp) -> bool {
                for (int v : g.neighbors(u)) {
                    if (seen[v] == stamp)
                        continue;
                    seen[v] = stamp;
                    if (mate[v] == -1 || augment(mate[v], stamp)) {
                        mate[v] = u;
                        mate[u] = v;
                        return true;
                    }
                }
                return false;
            };
            for (int u = 0; u < g.n(); ++u)
                if (side[u] == 0 && mate[u] == -1)
                    augment(u, u);
            std::vector<Edge> result;
            for (int u = 0; u < g.n(); ++u)
                if (side[u] == 0 && mate[u] != -1)
                    result.push_back(make_edge(u, mate[u]));
            std::sort(result.begin(), result.end());
            return result;
        }

        struct MatchingSearch
        {
            const Graph & g;
            std::vector<char> alive;
            std::vector<Edge> current, best;

            auto live_degree(int v) const -> int
            {
                int d = 0;
                for (int u : g.neighbors(v))
                    d += alive[u];
                return d;
            }

            auto run() -> void
            {
                int pick = -1, pick_degree = 0, active = 0;
                for (int v = 0; v < g.n(); ++v) {
                    if (! alive[v])
                        continue;
                    int d = live_degree(v);
                    if (d == 0)
                        continue;
                    ++active;
                    if (pick == -1 || d < pick_degree) {
                        pick = v;
                        pick_degree = d;
                    }
                }
                if (current.size() + active / 2 <= best.size())
                    return;
                if (pick == -1) {
                    best = current;
                    return;
                }
                alive[pick] = 0;
                for (int u : g.neighbors(pick)) {
                    if (! alive[u])
                        continue;
                    alive[u] = 0;
                    current.push_back(make_edge(pick, u));
                    run();
                    current.pop_back();
                    alive[u] = 1;
                    // A degree-one vertex is always matched in some maximum matching.
                    if (pick_degree == 1)
                        break;
                }
                if (pick_degree > 1)
                    run();
                alive[pick] = 1;
            }
        };
    }

    auto maximum_matching(const Graph & g) -> std::vector<Edge>
    {
        if (auto side = bipartition(g))
            return bipartite_matching(g, *side);
        MatchingSearch search{g, std::vector<char>(g.n(), 1), {}, {}};
        search.run();
        std::sort(search.best.begin(), search.best.end());
        return search.best;
    }

    auto max_matching_size(const Graph & g) -> int
    {
        return static_cast<int>(maximum_matching(g).size());
    }

    namespace
    {
        // state: 0 undecided, 1 in the cover, -1 excluded.
        auto cover_feasible(const Graph & g, std::vector<signed char> & state, int budget) -> bool
        {
            std::vector<int> forced;
            for (int v = 0; v < g.n(); ++v) {
                if (state[v] != -1)
                    continue;
                for (int u : g.neighbors(v)) {
                    if (state[u] == -1)
                        return false;
                    if (state[u] == 0) {
                        state[u] = 1;
                        forced.push_back(u);
                    }
                }
            }
            auto undo = [&] {
                for (int u : forced)
                    state[u] = 0;
            };

            int used = 0;
            for (int v = 0; v < g.n(); ++v)
                used += state[v] == 1;
            int remaining = budget - used;
            if (remaining < 0) {
                undo();
                return false;
            }

            int pick = -1, pick_degree = 0;
            std::vector<char> matched(g.n(), 0);
            int lower = 0;
            for (int v = 0; v < g.n(); ++v) {
                if (state[v] != 0)
                    continue;
                int d = 0;
                for (int u : g.neighbors(v))
                    if (state[u] == 0) {
                        ++d;
                        if (! matched[v] && ! matched[u]) {
                            matched[v] = matched[u] = 1;
                            ++lower;
                        }
                    }
                if (d > pick_degree) {
                    pick = v;
                    pick_degree = d;
                }
            }
            if (pick == -1) {
                undo();
                return true;
            }
            if (lower > remaining) {
                undo();
                return false;
            }

            state[pick] = 1;
            bool ok = cover_feasible(g, state, budget);
            if (! ok) {
                state[pick] = -1;
                ok = cover_feasible(g, state, budget);
            }
            state[pick] = 0;
            undo();
            return ok;
        }
    }

    auto min_vertex_cover(const Graph & g) -> VertexCover
    {
        std::vector<signed char> state(g.n(), 0);
        int tau = max_matching_size(g);
        while (! cover_feasible(g, state, tau))
            ++tau;

        VertexCover result;
        result.size = tau;
        for (int v = 0; v < g.n(); ++v) {
            state[v] = 1;
            if (! cover_feasible(g, state, tau))
                state[v] = -1;
        }
        for (int v = 0; v < g.n(); ++v)
            if (state[v] == 1)
                result.vertices.push_back(v);
        return result;
    }

    auto bipartition(const Graph & g) -> std::optional<std::vector<int>>
    {
        std::vector<int> side(g.n(), -1);
        for (int s = 0; s < g.n(); ++s) {
            if (side[s] != -1)
                continue;
            side[s] = 0;
            std::deque<int> queue{s};
            while (! queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int v : g.neighbors(u)) {
                    if (side[v] == -1) {
                        side[v] = 1 - side[u];
                        queue.push_back(v);
                    }
                    else if (side[v] == side[u])
                        return std::nullopt;
                }
            }
        }
        return side;
    }

    auto is_bipartite(const Graph & g) -> bool
    {
        return bipartition(g).has_value();
    }

    auto connected_components(const Graph & g) -> std::vector<std::vector<int>>
    {
        std::vector<int> label(g.n(), -1);
        std::vector<std::vector<int>> result;
        for (int s = 0; s < g.n(); ++s) {
            if (label[s] != -1)
                continue;
            std::vector<int> component{s};
            label[s] = static_cast<int>(result.size());
            for (std::size_t i = 0; i < component.size(); ++i)
                for (int v : g.neighbors(component[i]))
                    if (label[v] == -1) {
                        label[v] = label[s];
                        component.push_back(v);
                    }
            std::sort(component.begin(), component.end());
            result.push_back(std::move(component));
        }
        return result;
    }

    auto is_connected_subset(const Graph & g, const std::vector<int> & vertices) -> bool
    {
        if (vertices.empty())
            return false;
        return connected_components(g.induced(vertices)).size() == 1;
    }

    auto is_matching(const std::vector<Edge> & edges) -> bool
    {
        std::set<int> seen;
        for (auto [u, v] : edges)
            if (u == v || ! seen.insert(u).second || ! seen.insert(v).second)
                return false;
        return true;
    }

    auto is_induced_matching(const Graph & g, const std::vector<Edge> & edges) -> bool
    {
        if (! is_matching(edges))
            return false;
        std::vector<int> vertices;
        for (auto [u, v] : edges) {
            if (! g.adjacent(u, v))
                return false;
            vertices.push_back(u);
            vertices.push_back(v);
        }
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                if (g.adjacent(vertices[i], vertices[j]) && ! (i % 2 == 0 && j == i + 1))
                    return false;
        return true;
    }

    auto make_cycle(int n) -> Graph
    {
        Graph g(n);
        for (int i = 0; i < n; ++i)
            g.add_edge(i, (i + 1) % n);
        return g;
    }

    auto make_path(int n) -> Graph
    {
        Graph g(n);
        for (int i = 0; i + 1 < n; ++i)
            g.add_edge(i, i + 1);
        return g;
    }

    auto make_complete(int n) -> Graph
    {
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                g.add_edge(i, j);
        return g;
    }

    auto make_complete_bipartite(int a, int b) -> Graph
    {
        Graph g(a + b);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                g.add_edge(i, a + j);
        return g;
    }

    auto make_matching(int k) -> Graph
    {
        Graph g(2 * k);
        for (int i = 0; i < k; ++i)
            g.add_edge(2 * i, 2 * i + 1);
        return g;
    }

    auto make_star(int leaves) -> Graph
    {
        Graph g(leaves + 1);
        for (int i = 1; i <= leaves; ++i)
            g.add_edge(0, i);
        return g;
    }
}
