#include <subcount/cycle_reduction.hh>

#include <algorithm>
#include <string>

namespace subcount
{
    auto matching_cycle_digraph(const Graph & host, const std::vector<int> & side) -> DirectedGraph
    {
        if (static_cast<int>(side.size()) != host.n())
            throw PreconditionError{"matching_cycle_digraph: side vector has wrong length"};
        DirectedGraph result{host.n()};
        for (auto [u, v] : host.edges()) {
            if (side[u] == side[v])
                throw PreconditionError{"matching_cycle_digraph: edge inside one side"};
            if (side[u] == 0)
                result.add_arc(u, v);
            else
                result.add_arc(v, u);
        }
        for (int r = 0; r < host.n(); ++r)
            for (int l = 0; l < host.n(); ++l)
                if (side[r] == 1 && side[l] == 0)
                    result.add_arc(r, l);
        return result;
    }

    auto matchings_via_directed_cycles(const Graph & host, int k, const DirectedCycleOracle & oracle,
        std::vector<int> side) -> Count
    {
        if (k < 1)
            throw PreconditionError{"matchings_via_directed_cycles: k must be at least 1"};
        if (side.empty()) {
            auto computed = bipartition(host);
            if (! computed)
                throw PreconditionError{"matchings_via_directed_cycles: host is not bipartite"};
            side = *computed;
        }
        // Each k-matching closes into (k-1)! directed cycles, one per cyclic order of its edges.
        return exact_divide(oracle(matching_cycle_digraph(host, side), 2 * k), factorial(k - 1),
            "matchings_via_directed_cycles");
    }

    auto split_multigraph(const DirectedGraph & host, int k) -> MultiGraph
    {
        MultiGraph result;
        result.n = 2 * host.n();
        for (auto [u, v] : host.arcs())
            result.edges.push_back({2 * u + 1, 2 * v, 0});
        for (int v = 0; v < host.n(); ++v)
            for (int c = 1; c <= k; ++c)
                result.edges.push_back({2 * v, 2 * v + 1, c});
        return result;
    }

    auto subdivided_subgraph(const MultiGraph & graph, const std::vector<int> & colors) -> Graph
    {
        Graph result{graph.n};
        for (auto & e : graph.edges) {
            if (std::find(colors.begin(), colors.end(), e.color) == colors.end())
                continue;
            int middle = result.add_vertices(1);
            result.add_edge(e.u, middle);
            result.add_edge(middle, e.v);
        }
        return result;
    }

    auto directed_cycles_via_undirected(const DirectedGraph & host, int k, const CycleOracle & oracle) -> Count
    {
        if (k < 2)
            throw PreconditionError{"directed_cycles_via_undirected: k must be at least 2, got " + std::to_string(k)};
        if (k > 24)
            throw PreconditionError{"directed_cycles_via_undirected: k too large"};
        auto split = split_multigraph(host, k);

        // 2k-cycles of the split graph using every internal color exactly once
        // are directed k-cycles with a color assignment to their vertices.
        Count colorful = 0;
        for (unsigned subset = 0; subset < (1U << k); ++subset) {
            std::vector<int> colors{0};
            for (int c = 1; c <= k; ++c)
                if ((subset >> (c - 1)) & 1U)
                    colors.push_back(c);
            Count term = oracle(subdivided_subgraph(split, colors), 4 * k);
            if ((k - static_cast<int>(colors.size() - 1)) % 2 == 0)
                colorful += term;
            else
                colorful -= term;
        }
        if (colorful < 0)
            throw InconsistencyError{"directed_cycles_via_undirected: negative colorful count"};
        return exact_divide(colorful, factorial(k), "directed_cycles_via_undirected");
    }
}
