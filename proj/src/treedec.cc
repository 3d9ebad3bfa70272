#include <subcount/structural.hh>
#include <subcount/treedec.hh>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

namespace subcount
{
    auto TreeDecomposition::width() const -> int
    {
        int result = -1;
        for (auto & bag : bags)
            result = std::max(result, static_cast<int>(bag.size()) - 1);
        return result;
    }

    auto validate(const Graph & graph, const TreeDecomposition & td) -> std::optional<std::string>
    {
        int size = td.size();
        if (size == 0)
            return graph.n() == 0 ? std::nullopt : std::optional<std::string>{"no nodes"};
        if (static_cast<int>(td.parent.size()) != size || td.root < 0 || td.root >= size || td.parent[td.root] != -1)
            return "malformed root or parent array";
        for (int t = 0; t < size; ++t) {
            if (t != td.root && (td.parent[t] < 0 || td.parent[t] >= size))
                return "node " + std::to_string(t) + " has no valid parent";
            // Walk up to the root; more than size steps means a cycle.
            int steps = 0;
            for (int x = t; x != td.root; x = td.parent[x])
                if (++steps > size)
                    return "parent pointers contain a cycle";
            for (int v : td.bags[t])
                if (v < 0 || v >= graph.n())
                    return "bag vertex out of range";
            if (! std::is_sorted(td.bags[t].begin(), td.bags[t].end()))
                return "bag not sorted";
        }

        auto contains = [&](int t, int v) { return std::binary_search(td.bags[t].begin(), td.bags[t].end(), v); };
        for (auto [u, v] : graph.edges()) {
            bool found = false;
            for (int t = 0; t < size && ! found; ++t)
                found = contains(t, u) && contains(t, v);
            if (! found)
                return "edge " + std::to_string(u) + "-" + std::to_string(v) + " in no bag";
        }
        for (int v = 0; v < graph.n(); ++v) {
            // Occurrences are connected iff exactly one occurrence lacks an
            // occurring parent.
            int tops = 0;
            for (int t = 0; t < size; ++t)
                if (contains(t, v) && (t == td.root || ! contains(td.parent[t], v)))
                    ++tops;
            if (tops == 0)
                return "vertex " + std::to_string(v) + " in no bag";
            if (tops > 1)
                return "bags of vertex " + std::to_string(v) + " are not connected";
        }
        return std::nullopt;
    }

    auto decomposition_from_order(const Graph & graph, const std::vector<int> & order) -> TreeDecomposition
    {
        int n = graph.n();
        if (static_cast<int>(order.size()) != n)
            throw PreconditionError{"decomposition_from_order: order must list every vertex once"};
        std::vector<int> position(n, -1);
        for (int i = 0; i < n; ++i) {
            if (order[i] < 0 || order[i] >= n || position[order[i]] != -1)
                throw PreconditionError{"decomposition_from_order: order must list every vertex once"};
            position[order[i]] = i;
        }

        TreeDecomposition td;
        if (n == 0)
            return td;
        std::vector<std::vector<char>> filled(n, std::vector<char>(n, 0));
        for (auto [u, v] : graph.edges())
            filled[u][v] = filled[v][u] = 1;

        td.parent.assign(n, -1);
        td.bags.resize(n);
        for (int i = 0; i < n; ++i) {
            int v = order[i];
            std::vector<int> later;
            for (int u = 0; u < n; ++u)
                if (filled[v][u] && position[u] > i)
                    later.push_back(u);
            for (std::size_t a = 0; a < later.size(); ++a)
                for (std::size_t b = a + 1; b < later.size(); ++b)
                    filled[later[a]][later[b]] = filled[later[b]][later[a]] = 1;
            auto bag = later;
            bag.push_back(v);
            std::sort(bag.begin(), bag.end());
            td.bags[i] = std::move(bag);
            if (! later.empty()) {
                int next = n;
                for (int u : later)
                    next = std::min(next, position[u]);
                td.parent[i] = next;
            }
        }
        // Components end in separate roots; hang them under the last node.
        td.root = n - 1;
        for (int i = 0; i + 1 < n; ++i)
            if (td.parent[i] == -1)
                td.parent[i] = td.root;
        return td;
    }

    auto treewidth_exact(const Graph & graph) -> TreeDecomposition
    {
        int n = graph.n();
        if (n > treewidth_exact_limit)
            throw PreconditionError{"treewidth_exact: graph too large"};
        if (n == 0)
            return {};
        std::vector<std::uint32_t> adjacency(n, 0);
        for (auto [u, v] : graph.edges()) {
            adjacency[u] |= 1U << v;
            adjacency[v] |= 1U << u;
        }
        std::uint32_t full = n == 32 ? ~0U : (1U << n) - 1;

        // Vertices outside set ∪ {v} reachable from v through set.
        auto q_size = [&](std::uint32_t set, int v) -> int {
            std::uint32_t seen = 1U << v, frontier = 1U << v, reach = 0;
            while (frontier) {
                int x = std::countr_zero(frontier);
                frontier &= frontier - 1;
                std::uint32_t next = adjacency[x] & ~seen;
                seen |= next;
                reach |= next & ~set;
                frontier |= next & set;
            }
            return std::popcount(reach);
        };

        // best[S]: optimal width for eliminating S first, choice[S]: last of them.
        std::vector<std::int8_t> best(std::size_t{1} << n, std::numeric_limits<std::int8_t>::max());
        std::vector<std::int8_t> choice(std::size_t{1} << n, -1);
        best[0] = -1;
        for (std::uint32_t set = 1; set <= full; ++set)
            for (std::uint32_t rest = set; rest; rest &= rest - 1) {
                int v = std::countr_zero(rest);
                std::uint32_t before = set & ~(1U << v);
                int value = std::max<int>(best[before], q_size(before, v));
                if (value < best[set]) {
                    best[set] = static_cast<std::int8_t>(value);
                    choice[set] = static_cast<std::int8_t>(v);
                }
            }

        std::vector<int> order;
        for (std::uint32_t set = full; set; set &= ~(1U << choice[set]))
            order.push_back(choice[set]);
        std::reverse(order.begin(), order.end());
        auto td = decomposition_from_order(graph, order);
        if (td.width() != std::max<int>(best[full], 0))
            throw InconsistencyError{"treewidth_exact: decomposition width disagrees with the optimum"};
        return td;
    }

    namespace
    {
        auto is_ancestor(const TreeDecomposition & td, int a, int t) -> bool
        {
            for (; t != -1; t = td.parent[t])
                if (t == a)
                    return true;
            return false;
        }

        auto lca(const TreeDecomposition & td, const std::vector<int> & depth, int a, int b) -> int
        {
            while (depth[a] > depth[b])
                a = td.parent[a];
            while (depth[b] > depth[a])
                b = td.parent[b];
            while (a != b) {
                a = td.parent[a];
                b = td.parent[b];
            }
            return a;
        }
    }

    auto nice_matching(const Graph & graph, const TreeDecomposition & td, int k, NiceMatchingAudit * audit)
        -> std::optional<std::vector<Edge>>
    {
        if (auto problem = validate(graph, td))
            throw PreconditionError{"nice_matching: invalid tree decomposition: " + *problem};
        if (k < 0)
            throw PreconditionError{"nice_matching: k must be nonnegative"};
        int n = graph.n(), size = td.size();
        int w = td.width();

        std::vector<std::vector<int>> children(size);
        std::vector<int> depth(size, 0), preorder{td.root};
        for (int t = 0; t < size; ++t)
            if (t != td.root)
                children[td.parent[t]].push_back(t);
        for (std::size_t i = 0; i < preorder.size(); ++i)
            for (int c : children[preorder[i]]) {
                depth[c] = depth[preorder[i]] + 1;
                preorder.push_back(c);
            }
        // below[t]: vertices in bags of the subtree at t.
        std::vector<std::vector<char>> below(size, std::vector<char>(n, 0));
        for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
            for (int v : td.bags[*it])
                below[*it][v] = 1;
            for (int c : children[*it])
                for (int v = 0; v < n; ++v)
                    below[*it][v] |= below[c][v];
        }

        auto edges = graph.edges();
        std::vector<Edge> matching;
        std::vector<int> marked; // X
        std::vector<char> covered(n, 0); // V_i
        std::vector<char> separator(n, 0); // S_i

        // First edge of H_t avoiding `avoid` and V_i, if any.
        auto edge_inside = [&](int t, const std::vector<int> & avoid) -> std::optional<Edge> {
            for (auto [u, v] : edges) {
                if (! below[t][u] || ! below[t][v] || covered[u] || covered[v])
                    continue;
                if (std::binary_search(avoid.begin(), avoid.end(), u) || std::binary_search(avoid.begin(), avoid.end(), v))
                    continue;
                return Edge{u, v};
            }
            return std::nullopt;
        };

        auto maximal_marked = [&] {
            std::vector<int> result;
            for (int t : marked) {
                bool top = true;
                for (int a = td.parent[t]; a != -1 && top; a = td.parent[a])
                    top = std::find(marked.begin(), marked.end(), a) == marked.end();
                if (top)
                    result.push_back(t);
            }
            return result;
        };

        auto check_invariants = [&] {
            auto tops = maximal_marked();
            std::vector<int> rest;
            for (int v = 0; v < n; ++v)
                if (covered[v] && ! separator[v])
                    rest.push_back(v);
            auto inside = graph.induced(rest);
            long long bound = static_cast<long long>(w + 1)
                * (3LL * static_cast<long long>(matching.size()) - static_cast<long long>(marked.size())
                    - static_cast<long long>(tops.size()));
            if (min_vertex_cover(inside).size > bound)
                throw InconsistencyError{"nice_matching: vertex cover invariant violated"};

            std::vector<int> local(n, -1);
            for (std::size_t i = 0; i < rest.size(); ++i)
                local[rest[i]] = static_cast<int>(i);
            std::vector<int> component(rest.size(), -1);
            auto components = connected_components(inside);
            for (std::size_t c = 0; c < components.size(); ++c)
                for (int v : components[c])
                    component[v] = static_cast<int>(c);
            std::vector<char> used(components.size(), 0);
            for (auto [u, v] : matching) {
                if (local[u] == -1 || local[v] == -1)
                    throw InconsistencyError{"nice_matching: matched vertex left the covered region"};
                int c = component[local[u]];
                if (c != component[local[v]] || used[c])
                    throw InconsistencyError{"nice_matching: matched edges share a component"};
                used[c] = 1;
                if (psi(graph, u) > 2 * (w + 1) || psi(graph, v) > 2 * (w + 1))
                    throw InconsistencyError{"nice_matching: matched vertex centers a large star"};
            }
        };

        auto mark = [&](int t) {
            marked.push_back(t);
            for (int v : td.bags[t])
                separator[v] = 1;
            for (int v = 0; v < n; ++v)
                covered[v] |= below[t][v];
        };

        while (static_cast<int>(matching.size()) < k) {
            if (audit)
                ++audit->iterations;
            // Deepest node whose subtree still has an edge off its bag and V_i.
            int best = -1;
            for (int t : preorder)
                if ((best == -1 || depth[t] > depth[best]) && edge_inside(t, td.bags[t]))
                    best = t;
            if (best == -1)
                return std::nullopt;

            std::vector<int> active;
            for (int c : children[best])
                if (edge_inside(c, td.bags[best]))
                    active.push_back(c);
            if (active.empty())
                throw InconsistencyError{"nice_matching: chosen node has no active child"};

            auto tops = maximal_marked();
            bool merged = false;
            for (int c : active) {
                std::vector<int> inside;
                for (int t : tops)
                    if (is_ancestor(td, c, t))
                        inside.push_back(t);
                if (inside.size() < 2)
                    continue;
                int deepest = -1;
                for (std::size_t a = 0; a < inside.size(); ++a)
                    for (std::size_t b = a + 1; b < inside.size(); ++b) {
                        int t = lca(td, depth, inside[a], inside[b]);
                        if (deepest == -1 || depth[t] > depth[deepest])
                            deepest = t;
                    }
                mark(deepest);
                merged = true;
                if (audit)
                    ++audit->case_one;
                break;
            }
            if (! merged) {
                for (int c : active)
                    matching.push_back(*edge_inside(c, td.bags[best]));
                mark(best);
                if (audit)
                    ++audit->case_two;
            }
            check_invariants();
        }

        matching.resize(k);
        if (! is_induced_matching(graph, matching))
            throw InconsistencyError{"nice_matching: result is not induced"};
        return matching;
    }
}
