#pragma once

#include <subcount/count.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace subcount
{
    // Unordered pair, stored with first < second.
    using Edge = std::pair<int, int>;

    inline auto make_edge(int u, int v) -> Edge
    {
        return u < v ? Edge{u, v} : Edge{v, u};
    }

    // Dense-bitset adjacency plus sorted neighbor lists. Vertices are [0, n).
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(int n);
        Graph(int n, const std::vector<Edge> & edges);

        auto n() const -> int { return _n; }
        auto m() const -> int { return _m; }

        // Returns the id of the first new vertex.
        auto add_vertices(int count) -> int;

        // Rejects self-loops, out-of-range endpoints and duplicates.
        auto add_edge(int u, int v) -> void;
        // Returns false instead of throwing when the edge already exists.
        auto try_add_edge(int u, int v) -> bool;
        auto remove_edge(int u, int v) -> void;

        auto adjacent(int u, int v) const -> bool
        {
            return (_rows[u][v >> 6] >> (v & 63)) & 1U;
        }
        auto neighbors(int v) const -> const std::vector<int> & { return _adj[v]; }
        auto degree(int v) const -> int { return static_cast<int>(_adj[v].size()); }
        auto max_degree() const -> int;

        // Sorted lexicographically, each with first < second.
        auto edges() const -> std::vector<Edge>;

        // Subgraph induced by the listed vertices; vertex i of the result is vertices[i].
        auto induced(const std::vector<int> & vertices) const -> Graph;
        auto without_vertices(const std::vector<int> & removed) const -> Graph;

        auto operator==(const Graph & other) const -> bool;

    private:
        auto check_vertex(int v) const -> void;

        int _n = 0;
        int _m = 0;
        std::vector<std::vector<int>> _adj;
        std::vector<std::vector<std::uint64_t>> _rows;
    };

    class DirectedGraph
    {
    public:
        DirectedGraph() = default;
        explicit DirectedGraph(int n);

        auto n() const -> int { return _n; }
        auto m() const -> int { return _m; }

        auto add_arc(int u, int v) -> void;
        auto try_add_arc(int u, int v) -> bool;
        auto has_arc(int u, int v) const -> bool { return _matrix[static_cast<std::size_t>(u) * _n + v]; }
        auto out(int v) const -> const std::vector<int> & { return _out[v]; }
        auto in(int v) const -> const std::vector<int> & { return _in[v]; }
        auto arcs() const -> std::vector<std::pair<int, int>>;

        auto operator==(const DirectedGraph & other) const -> bool;

    private:
        int _n = 0;
        int _m = 0;
        std::vector<std::vector<int>> _out, _in;
        std::vector<std::uint8_t> _matrix;
    };

    struct ColoredEdge
    {
        int u, v, color;
    };

    // Parallel edges allowed; each edge carries a color.
    struct MultiGraph
    {
        int n = 0;
        std::vector<ColoredEdge> edges;
    };

    struct VertexColoredGraph
    {
        Graph graph;
        std::vector<int> color;

        auto n() const -> int { return graph.n(); }
        // Throws unless every vertex carries a color.
        auto validate() const -> void;
        auto is_colorful() const -> bool;
        auto vertices_with_color(int c) const -> std::vector<int>;
        // Subgraph induced by all vertices whose color is in the sorted list.
        auto restricted_to_colors(const std::vector<int> & colors) const -> VertexColoredGraph;
    };

    struct EdgeColoredGraph
    {
        Graph graph;
        std::map<Edge, int> color;

        auto n() const -> int { return graph.n(); }
        auto add_edge(int u, int v, int c) -> void;
        auto color_of(int u, int v) const -> int;
        // Distinct colors in ascending order.
        auto colors() const -> std::vector<int>;
        // Same vertex set, only edges whose color is in the list.
        auto restricted_to_colors(const std::vector<int> & colors) const -> Graph;
    };

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph;

    auto max_matching_size(const Graph & g) -> int;
    auto maximum_matching(const Graph & g) -> std::vector<Edge>;

    struct VertexCover
    {
        int size = 0;
        std::vector<int> vertices;
    };

    // Exact; the witness is the lexicographically least optimal cover.
    auto min_vertex_cover(const Graph & g) -> VertexCover;

    // Side 0/1 per vertex; the smallest vertex of each component is on side 0.
    auto bipartition(const Graph & g) -> std::optional<std::vector<int>>;
    auto is_bipartite(const Graph & g) -> bool;
    auto connected_components(const Graph & g) -> std::vector<std::vector<int>>;
    auto is_connected_subset(const Graph & g, const std::vector<int> & vertices) -> bool;

    auto is_matching(const std::vector<Edge> & edges) -> bool;
    auto is_induced_matching(const Graph & g, const std::vector<Edge> & edges) -> bool;

    auto make_cycle(int n) -> Graph;
    auto make_path(int n) -> Graph;
    auto make_complete(int n) -> Graph;
    auto make_complete_bipartite(int a, int b) -> Graph;
    auto make_matching(int k) -> Graph;
    auto make_star(int leaves) -> Graph;
}
