#pragma once

#include <subcount/graph.hh>

#include <functional>
#include <vector>

namespace subcount
{
    // Injective adjacency-preserving maps V(H) -> V(G), not necessarily induced.
    auto count_embeddings(const Graph & pattern, const Graph & host, unsigned threads = 1) -> Count;
    auto count_automorphisms(const Graph & pattern) -> Count;
    auto count_subgraphs(const Graph & pattern, const Graph & host, unsigned threads = 1) -> Count;

    // Number of k-edge matchings in host, as subgraphs.
    auto count_k_matchings(const Graph & host, int k) -> Count;

    // Copies of a vertex-colorful pattern whose colors agree with the host's.
    auto count_colorpreserving_subgraphs(const VertexColoredGraph & pattern, const VertexColoredGraph & host) -> Count;

    // Matchings using exactly one edge of every listed color.
    auto count_colorful_matchings(const EdgeColoredGraph & host, const std::vector<int> & colors) -> Count;

    enum class WalkKind
    {
        path,
        cycle
    };

    // Simple paths or cycles with k edges, each counted once as a subgraph.
    auto count_walk_patterns(const Graph & host, WalkKind kind, int k) -> Count;
    // Directed paths or directed cycles with k arcs; a cycle is counted once.
    auto count_walk_patterns(const DirectedGraph & host, WalkKind kind, int k) -> Count;

    auto is_isomorphic(const Graph & a, const Graph & b) -> bool;

    // Calls visit(map) for every isomorphism a -> b; stop by returning false.
    // Optional vertex labels must then be preserved too.
    auto for_each_isomorphism(const Graph & a, const Graph & b,
        const std::function<bool(const std::vector<int> &)> & visit, const std::vector<int> & label_a = {},
        const std::vector<int> & label_b = {}) -> void;
}
