#pragma once

#include <subcount/graph.hh>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace subcount
{
    class ParseError : public std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    // Line-based text format:
    //   g <n> [directed]
    //   e <u> <v> [color]
    //   vc <u> <color>
    // with '#' starting a comment. Vertices are 0-based.
    struct GraphFile
    {
        struct Line
        {
            int u, v;
            std::optional<int> color;
        };

        int n = 0;
        bool directed = false;
        std::vector<Line> edges;
        std::vector<std::optional<int>> vertex_color;

        auto graph() const -> Graph;
        auto directed_graph() const -> DirectedGraph;
        // Every vertex must carry a color.
        auto vertex_colored() const -> VertexColoredGraph;
        // Every edge must carry a color.
        auto edge_colored() const -> EdgeColoredGraph;
    };

    auto parse_graph_file(std::istream & in) -> GraphFile;
    auto parse_graph_string(const std::string & text) -> GraphFile;
    auto read_graph_file(const std::string & path) -> GraphFile;

    auto to_graph_file(const Graph & graph) -> GraphFile;
    auto to_graph_file(const DirectedGraph & graph) -> GraphFile;
    auto to_graph_file(const VertexColoredGraph & graph) -> GraphFile;
    auto to_graph_file(const EdgeColoredGraph & graph) -> GraphFile;

    auto write_graph_file(std::ostream & out, const GraphFile & file) -> void;
    auto format_graph_file(const GraphFile & file) -> std::string;
    auto save_graph_file(const std::string & path, const GraphFile & file) -> void;
}
