#pragma once

#include <subcount/graph.hh>

#include <optional>
#include <vector>

namespace subcount
{
    // Largest number of length-2 paths from v that share only v: a maximum
    // matching of G - v among edges with an endpoint in N(v).
    auto psi(const Graph & graph, int v) -> int;
    auto max_psi(const Graph & graph) -> int;

    // Vertices v with more than psi(v) neighbors of degree >= 2 psi(v) + 2.
    // Always empty; exposed as an audit.
    auto starneighbor_violations(const Graph & graph) -> std::vector<int>;

    // Edge coloring of a complete graph on [0, n).
    struct EdgeColoring
    {
        int n = 0;
        int colors = 0;
        std::vector<int> table; // n * n, symmetric

        EdgeColoring(int n, int colors);
        auto color(int u, int v) const -> int { return table[static_cast<std::size_t>(u) * n + v]; }
        auto set(int u, int v, int c) -> void;
    };

    // r vertices whose pairwise edges share one color, from the pigeonhole
    // chain: repeatedly take the smallest candidate and keep the largest color
    // class of its remaining neighbors. When the chain stalls, a bounded
    // exhaustive search takes over; empty when that fails too.
    auto ramsey_monochromatic_clique(const EdgeColoring & coloring, int r) -> std::optional<std::vector<int>>;

    enum class ExtractionKind
    {
        clique,
        biclique,
        induced_matching
    };

    struct Extraction
    {
        ExtractionKind kind;
        std::vector<int> clique;
        std::vector<int> left, right; // biclique sides
        std::vector<Edge> matching;
    };

    // From a matching of G, finds an induced k-clique, k+k biclique or induced
    // k-matching through the 16-color Ramsey argument. Uses a maximum matching
    // when none is given. Every returned witness has been re-verified.
    auto extract_clique_biclique_or_matching(const Graph & graph, int k, std::vector<Edge> matching = {})
        -> std::optional<Extraction>;
    auto verify_extraction(const Graph & graph, int k, const Extraction & extraction) -> bool;

    enum class MatchingMode
    {
        induced,
        separated // also no outside vertex touches two chosen edges
    };

    // Greedy: take the first remaining edge of F, discard the edges of F near it.
    auto greedy_induced_matching(const Graph & graph, const std::vector<Edge> & edges, MatchingMode mode)
        -> std::vector<Edge>;
    auto is_separated_matching(const Graph & graph, const std::vector<Edge> & edges) -> bool;

    // k edges of an induced matching at pairwise distance more than 2, greedily.
    auto induced_matching_separated_by_stars(const Graph & graph, const std::vector<Edge> & matching, int L, int k)
        -> std::optional<std::vector<Edge>>;

    struct DegreeGap
    {
        std::vector<Edge> kept;
        int gap_start = 0; // no vertex near kept has degree in [gap_start, gap_start + width)
    };

    // Keeps at least half of the induced matching F and finds a window of
    // `width` consecutive degrees, starting in [low, low + 4(2L+2)width],
    // avoided by every neighbor of the kept endpoints.
    auto degree_gap_filter(const Graph & graph, const std::vector<Edge> & matching, int low, int width, int L)
        -> DegreeGap;

    // Indices of k sets such that every element is in at most one chosen set
    // or in at least z unchosen sets.
    auto select_subcollection(const std::vector<std::vector<int>> & sets, int k, int z, int r) -> std::vector<int>;
}
