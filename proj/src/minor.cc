#include <subcount/minor.hh>

#include <algorithm>
#include <map>

namespace subcount
{
    auto verify_minor_model(const Graph & pattern, const Graph & host, const MinorModel & model)
        -> std::optional<std::string>
    {
        if (static_cast<int>(model.branch.size()) != pattern.n())
            return "branch set count differs from pattern size";
        std::vector<int> owner(host.n(), -1);
        auto claim = [&](int v, int who) -> bool {
            if (v < 0 || v >= host.n() || owner[v] != -1)
                return false;
            owner[v] = who;
            return true;
        };
        for (int i = 0; i < pattern.n(); ++i) {
            if (model.branch[i].empty())
                return "branch set " + std::to_string(i) + " is empty";
            for (int v : model.branch[i])
                if (! claim(v, i))
                    return "branch set " + std::to_string(i) + " overlaps or leaves the host";
            if (! is_connected_subset(host, model.branch[i]))
                return "branch set " + std::to_string(i) + " is not connected";
        }
        for (int v : model.discard)
            if (! claim(v, pattern.n()))
                return "discard set overlaps a branch set";

        std::vector<std::vector<char>> crossing(pattern.n(), std::vector<char>(pattern.n(), 0));
        for (auto [a, b] : host.edges()) {
            int i = owner[a], j = owner[b];
            if (i >= 0 && j >= 0 && i < pattern.n() && j < pattern.n() && i != j)
                crossing[i][j] = crossing[j][i] = 1;
        }
        for (auto [i, j] : pattern.edges())
            if (! crossing[i][j])
                return "pattern edge " + std::to_string(i) + "-" + std::to_string(j) + " has no crossing edge";
        return std::nullopt;
    }

    auto contract(const Graph & host, const MinorModel & model) -> Graph
    {
        int n = static_cast<int>(model.branch.size());
        std::vector<int> owner(host.n(), -1);
        for (int i = 0; i < n; ++i)
            for (int v : model.branch[i])
                owner[v] = i;
        Graph result(n);
        for (auto [a, b] : host.edges())
            if (owner[a] != -1 && owner[b] != -1 && owner[a] != owner[b])
                result.try_add_edge(owner[a], owner[b]);
        return result;
    }

    auto is_bicubic(const Graph & graph) -> bool
    {
        for (int v = 0; v < graph.n(); ++v)
            if (graph.degree(v) != 3)
                return false;
        return is_bipartite(graph);
    }

    auto make_bicubic(const Graph & pattern) -> BicubicLift
    {
        int h = pattern.n();
        if (h == 0)
            throw PreconditionError{"make_bicubic: empty pattern"};
        for (int v = 0; v < h; ++v)
            if (pattern.degree(v) == 0)
                throw PreconditionError{"make_bicubic: pattern has an isolated vertex"};
        if (is_bicubic(pattern)) {
            BicubicLift same{pattern, {}};
            for (int v = 0; v < h; ++v)
                same.model.branch.push_back({v});
            return same;
        }

        // Raise degrees 1 and 2 to 3: pair free ports by new edges first,
        // then close leftovers with a small gadget.
        Graph work = pattern;
        std::vector<int> ports;
        for (int v = 0; v < h; ++v)
            for (int d = pattern.degree(v); d < 3; ++d)
                ports.push_back(v);
        std::vector<char> used(ports.size(), 0);
        for (std::size_t i = 0; i < ports.size(); ++i) {
            if (used[i])
                continue;
            for (std::size_t j = i + 1; j < ports.size(); ++j)
                if (! used[j] && ports[j] != ports[i] && ! work.adjacent(ports[i], ports[j])) {
                    work.add_edge(ports[i], ports[j]);
                    used[i] = used[j] = 1;
                    break;
                }
        }
        std::vector<int> left;
        for (std::size_t i = 0; i < ports.size(); ++i)
            if (! used[i])
                left.push_back(ports[i]);
        int m = static_cast<int>(left.size());
        if (m >= 3) {
            int q = work.add_vertices(m);
            for (int i = 0; i < m; ++i) {
                work.add_edge(q + i, q + (i + 1) % m);
                work.add_edge(q + i, left[i]);
            }
        }
        else if (m == 2) {
            int q = work.add_vertices(4); // q1, q2, r1, r2
            work.add_edge(q, left[0]);
            work.add_edge(q + 1, left[1]);
            for (int a : {q, q + 1})
                for (int b : {q + 2, q + 3})
                    work.add_edge(a, b);
            work.add_edge(q + 2, q + 3);
        }
        else if (m == 1) {
            int q = work.add_vertices(5); // K4 on q..q+3 with q-q+1 subdivided by q+4
            for (int a = q; a < q + 4; ++a)
                for (int b = a + 1; b < q + 4; ++b)
                    if (a != q || b != q + 1)
                        work.add_edge(a, b);
            work.add_edge(q + 4, q);
            work.add_edge(q + 4, q + 1);
            work.add_edge(q + 4, left[0]);
        }

        // Replace vertices of degree above 3 by cycles.
        std::vector<int> base(work.n());
        int cubic_n = 0;
        for (int v = 0; v < work.n(); ++v) {
            base[v] = cubic_n;
            cubic_n += work.degree(v) == 3 ? 1 : work.degree(v);
        }
        auto slot = [&](int v, int u) -> int {
            if (work.degree(v) == 3)
                return base[v];
            auto & nb = work.neighbors(v);
            return base[v] + static_cast<int>(std::lower_bound(nb.begin(), nb.end(), u) - nb.begin());
        };
        // Edges of the cubic graph with the pattern vertex whose branch set
        // takes their subdivision vertex (-1: discard).
        std::vector<std::pair<Edge, int>> cubic_edges;
        for (int v = 0; v < work.n(); ++v) {
            int d = work.degree(v);
            if (d > 3)
                for (int i = 0; i < d; ++i)
                    cubic_edges.push_back({make_edge(base[v] + i, base[v] + (i + 1) % d), v < h ? v : -1});
        }
        for (auto [u, v] : work.edges())
            cubic_edges.push_back({make_edge(slot(u, v), slot(v, u)), v < h && pattern.adjacent(u, v) ? u : -1});

        int subdivisions = static_cast<int>(cubic_edges.size());
        if (subdivisions % 3 != 0)
            throw InconsistencyError{"make_bicubic: cubic graph has an edge count not divisible by 3"};
        BicubicLift result{Graph(cubic_n + subdivisions + subdivisions / 3), {}};
        auto & graph = result.graph;
        result.model.branch.resize(h);
        for (int i = 0; i < subdivisions; ++i) {
            auto [edge, who] = cubic_edges[i];
            int s = cubic_n + i;
            graph.add_edge(edge.first, s);
            graph.add_edge(s, edge.second);
            graph.add_edge(s, cubic_n + subdivisions + i / 3);
            if (who != -1)
                result.model.branch[who].push_back(s);
        }
        for (int v = 0; v < h; ++v) {
            int count = work.degree(v) == 3 ? 1 : work.degree(v);
            for (int i = 0; i < count; ++i)
                result.model.branch[v].push_back(base[v] + i);
        }
        std::vector<char> in_branch(graph.n(), 0);
        for (auto & set : result.model.branch) {
            std::sort(set.begin(), set.end());
            for (int v : set)
                in_branch[v] = 1;
        }
        for (int v = 0; v < graph.n(); ++v)
            if (! in_branch[v])
                result.model.discard.push_back(v);

        if (! is_bicubic(graph))
            throw InconsistencyError{"make_bicubic: output is not bicubic"};
        if (auto problem = verify_minor_model(pattern, graph, result.model))
            throw InconsistencyError{"make_bicubic: " + *problem};
        return result;
    }

    auto minor_lift_instance(const VertexColoredGraph & pattern, const Graph & lifted, const MinorModel & model,
        const VertexColoredGraph & host) -> VertexColoredGraph
    {
        pattern.validate();
        host.validate();
        if (! pattern.is_colorful())
            throw PreconditionError{"minor_lift_instance: pattern must be colorful"};
        if (auto problem = verify_minor_model(pattern.graph, lifted, model))
            throw PreconditionError{"minor_lift_instance: invalid model: " + *problem};

        std::map<int, int> class_of_color;
        for (int i = 0; i < pattern.n(); ++i)
            class_of_color[pattern.color[i]] = i;

        VertexColoredGraph result;
        // copy_start[v]: first result vertex of the copy for host vertex v.
        std::vector<int> host_class(host.n(), -1), copy_start(host.n(), -1);
        int total = 0;
        for (int v = 0; v < host.n(); ++v)
            if (auto it = class_of_color.find(host.color[v]); it != class_of_color.end()) {
                host_class[v] = it->second;
                copy_start[v] = total;
                total += static_cast<int>(model.branch[it->second].size());
            }
        int discard_start = total;
        total += static_cast<int>(model.discard.size());
        result.graph = Graph(total);
        result.color.assign(total, -1);

        auto place_copy = [&](int start, const std::vector<int> & set) {
            for (std::size_t a = 0; a < set.size(); ++a) {
                result.color[start + a] = set[a];
                for (std::size_t b = a + 1; b < set.size(); ++b)
                    if (lifted.adjacent(set[a], set[b]))
                        result.graph.add_edge(start + static_cast<int>(a), start + static_cast<int>(b));
            }
        };
        auto join = [&](int start_a, int size_a, int start_b, int size_b) {
            for (int a = 0; a < size_a; ++a)
                for (int b = 0; b < size_b; ++b)
                    result.graph.try_add_edge(start_a + a, start_b + b);
        };

        for (int v = 0; v < host.n(); ++v)
            if (host_class[v] != -1)
                place_copy(copy_start[v], model.branch[host_class[v]]);
        place_copy(discard_start, model.discard);

        int discard_size = static_cast<int>(model.discard.size());
        for (int u = 0; u < host.n(); ++u) {
            if (host_class[u] == -1)
                continue;
            int i = host_class[u];
            int size_u = static_cast<int>(model.branch[i].size());
            join(copy_start[u], size_u, discard_start, discard_size);
            for (int v = u + 1; v < host.n(); ++v) {
                int j = host_class[v];
                if (j == -1 || j == i)
                    continue;
                if (pattern.graph.adjacent(i, j) && ! host.graph.adjacent(u, v))
                    continue;
                join(copy_start[u], size_u, copy_start[v], static_cast<int>(model.branch[j].size()));
            }
        }
        return result;
    }

    auto build_grid_instance(const Graph & graph, int k, GridOrientation orientation) -> GridInstance
    {
        if (k < 2)
            throw PreconditionError{"build_grid_instance: k must be at least 2"};
        GridInstance result;
        auto cell = [k](int i, int j) { return i * k + j; };
        result.pattern.graph = Graph(k * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                result.pattern.color.push_back(cell(i, j));
                if (j + 1 < k)
                    result.pattern.graph.add_edge(cell(i, j), cell(i, j + 1));
                if (i + 1 < k)
                    result.pattern.graph.add_edge(cell(i, j), cell(i + 1, j));
            }

        // Vertices per cell: (x, x) on the diagonal, oriented edges (x, y) elsewhere.
        std::vector<std::vector<std::pair<int, int>>> members(k * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                auto & list = members[cell(i, j)];
                if (i == j)
                    for (int x = 0; x < graph.n(); ++x)
                        list.push_back({x, x});
                else
                    for (auto [x, y] : graph.edges()) {
                        if (orientation == GridOrientation::both || i < j)
                            list.push_back({x, y});
                        if (orientation == GridOrientation::both || i > j)
                            list.push_back({y, x});
                    }
                std::sort(list.begin(), list.end());
            }
        std::vector<int> start(k * k + 1, 0);
        for (int c = 0; c < k * k; ++c)
            start[c + 1] = start[c] + static_cast<int>(members[c].size());
        auto & host = result.host;
        host.graph = Graph(start[k * k]);
        host.color.resize(start[k * k]);
        for (int c = 0; c < k * k; ++c)
            for (int a = start[c]; a < start[c + 1]; ++a)
                host.color[a] = c;

        // Horizontal neighbors agree on x, vertical neighbors agree on y.
        auto link = [&](int c, int d, bool same_first) {
            for (std::size_t a = 0; a < members[c].size(); ++a)
                for (std::size_t b = 0; b < members[d].size(); ++b) {
                    auto [x1, y1] = members[c][a];
                    auto [x2, y2] = members[d][b];
                    if (same_first ? x1 == x2 : y1 == y2)
                        host.graph.add_edge(start[c] + static_cast<int>(a), start[d] + static_cast<int>(b));
                }
        };
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                if (j + 1 < k)
                    link(cell(i, j), cell(i, j + 1), true);
                if (i + 1 < k)
                    link(cell(i, j), cell(i + 1, j), false);
            }
        return result;
    }
}
