#pragma once

#include <subcount/graph.hh>

#include <functional>
#include <vector>

namespace subcount
{
    using DirectedCycleOracle = std::function<Count(const DirectedGraph & host, int length)>;
    using CycleOracle = std::function<Count(const Graph & host, int length)>;

    // Orients every edge from side 0 to side 1 and adds all side-1 -> side-0 arcs.
    auto matching_cycle_digraph(const Graph & host, const std::vector<int> & side) -> DirectedGraph;

    // k-matchings of a bipartite host from directed 2k-cycle counts; side is
    // computed when empty.
    auto matchings_via_directed_cycles(const Graph & host, int k, const DirectedCycleOracle & oracle,
        std::vector<int> side = {}) -> Count;

    // Every vertex v becomes an arc-entry and arc-exit pair joined by k
    // parallel internal edges colored 1..k; arc edges have color 0.
    // Vertex v maps to 2v (entry) and 2v + 1 (exit).
    auto split_multigraph(const DirectedGraph & host, int k) -> MultiGraph;

    // Simple graph with every edge of the listed colors subdivided once.
    auto subdivided_subgraph(const MultiGraph & graph, const std::vector<int> & colors) -> Graph;

    // Directed k-cycles of the host from undirected 4k-cycle counts, k >= 2.
    auto directed_cycles_via_undirected(const DirectedGraph & host, int k, const CycleOracle & oracle) -> Count;
}
