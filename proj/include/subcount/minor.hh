#pragma once

#include <subcount/graph.hh>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace subcount
{
    // branch[i] is the connected vertex set of the host standing in for
    // pattern vertex i; discard holds the remaining host vertices.
    struct MinorModel
    {
        std::vector<std::vector<int>> branch;
        std::vector<int> discard;
    };

    // Empty when the model witnesses pattern as a minor of host: disjoint,
    // connected branch sets with a crossing edge for every pattern edge.
    auto verify_minor_model(const Graph & pattern, const Graph & host, const MinorModel & model)
        -> std::optional<std::string>;

    // Graph obtained by contracting each branch set and deleting the discard set.
    auto contract(const Graph & host, const MinorModel & model) -> Graph;

    struct BicubicLift
    {
        Graph graph;
        MinorModel model;
    };

    // A bipartite 3-regular graph containing pattern as a minor, with the
    // model. Low-degree vertices are raised by extra edges and small closing
    // gadgets, high-degree vertices become cycles, every edge is subdivided
    // and the subdivision vertices are capped in triples.
    auto make_bicubic(const Graph & pattern) -> BicubicLift;

    auto is_bicubic(const Graph & graph) -> bool;

    // Host for the lifted pattern: each host vertex of class i becomes a copy
    // of lifted[branch i], copies are joined along pattern edges that the host
    // realizes and across every non-edge, and the discard part is joined to
    // all. Colors of the result are lifted vertex ids. Preserves the number of
    // color-preserving copies.
    auto minor_lift_instance(const VertexColoredGraph & pattern, const Graph & lifted, const MinorModel & model,
        const VertexColoredGraph & host) -> VertexColoredGraph;

    struct GridInstance
    {
        VertexColoredGraph pattern; // k x k grid, cell (i, j) is vertex and color i * k + j
        VertexColoredGraph host;
    };

    enum class GridOrientation
    {
        // Off-diagonal cell (i, j) holds edge (x, y) only when x < y iff i < j:
        // one grid copy per k-clique.
        increasing,
        // Both orientations in every off-diagonal cell: one grid copy per
        // ordering of each k-clique, so k! per clique.
        both
    };

    // Host whose color-preserving grid copies correspond to k-cliques of graph.
    auto build_grid_instance(const Graph & graph, int k, GridOrientation orientation = GridOrientation::increasing)
        -> GridInstance;
}
