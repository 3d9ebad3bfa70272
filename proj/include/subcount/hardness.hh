#pragma once

#include <subcount/graph.hh>
#include <subcount/polynomial.hh>

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace subcount
{
    // Edge colors for the six-cycle construction over a bicubic pattern H.
    // Pattern edge e gets color e (its index in H.edges()); the six cycle
    // edges of pattern vertex i get colors cycle_color(i, 1..6).
    struct GadgetColorScheme
    {
        std::vector<Edge> pattern_edges;
        // Incident pattern edges of each vertex, ordered by the other endpoint.
        std::vector<std::array<int, 3>> incident;
        std::vector<int> side;

        auto k() const -> int { return static_cast<int>(incident.size()); }
        auto pattern_edge_colors() const -> std::vector<int>;
        auto cycle_color(int vertex, int position) const -> int
        {
            return static_cast<int>(pattern_edges.size()) + 6 * vertex + (position - 1);
        }
    };

    // Rejects H unless it is 3-regular and bipartite.
    auto gadget_color_scheme(const Graph & pattern) -> GadgetColorScheme;

    // Host with every vertex mapped to its six-cycle. Cycle slots are
    // w1, z1, w2, z2, w3, z3; slot 2a is the w-vertex used by incident edge a.
    struct TriangleGraph
    {
        EdgeColoredGraph graph;
        std::vector<std::array<int, 6>> cycle;
        std::vector<int> pattern_vertex; // host vertex -> pattern vertex (its class)
        std::vector<int> side;           // 0 or 1 per vertex of graph
    };

    // Host restricted to the pattern's colors, with every class padded by
    // isolated vertices up to `size`. Original vertices keep their ids.
    auto pad_classes(const VertexColoredGraph & pattern, const VertexColoredGraph & host, int size)
        -> VertexColoredGraph;

    // Pattern vertex i owns host color pattern.color[i]. Classes must have equal size.
    auto build_triangle_graph(const VertexColoredGraph & pattern, const VertexColoredGraph & host,
        const GadgetColorScheme & scheme) -> TriangleGraph;

    // Cycle-slot colors (1..6) queried for a state index 1..5.
    auto state_color_set(int state) -> std::vector<int>;

    // Three damaged six-cycles for residue type 1..5, plus `extra` intact
    // cycles, edge colors 1..6.
    auto residue_graph(int type, int extra) -> EdgeColoredGraph;

    // Colorful matchings of state_color_set(state) in residue_graph(type, m), as a polynomial in m.
    auto pst_polynomial(int type, int state) -> IntPolynomial;

    struct StateMatrix
    {
        // values[state - 1][type - 1]
        IntMatrix values;
        Integer determinant;
    };

    auto state_matrix(const Integer & extra) -> StateMatrix;
    auto state_determinant_polynomial() -> IntPolynomial;
    // The state matrix is nonsingular for every extra-cycle count >= this bound.
    auto state_nonsingular_from() -> Integer;

    // Good-type coordinate of the Kronecker system; b is indexed by state
    // vectors in lexicographic order, first coordinate most significant.
    auto solve_theta_star(const std::vector<Count> & b, const Integer & class_size, int k) -> Count;

    // Pattern-edge colors plus the cycle colors selected by each state.
    auto query_colors(const GadgetColorScheme & scheme, const std::vector<int> & states) -> std::vector<int>;

    using ColmatchOracle = std::function<Count(const EdgeColoredGraph & host, const std::vector<int> & colors)>;

    // Smallest admissible class size for the given host.
    auto hardness_class_size(const VertexColoredGraph & pattern, const VertexColoredGraph & host) -> int;

    // Color-preserving copies of a bicubic colorful pattern, from 5^k
    // colorful-matching queries on the six-cycle host. class_size overrides
    // the padding target and must be admissible.
    auto subpart_via_colmatch_oracle(const VertexColoredGraph & pattern, const VertexColoredGraph & host,
        const ColmatchOracle & oracle, unsigned threads = 1, std::optional<int> class_size = std::nullopt) -> Count;
}
