#include <subcount/graph_io.hh>

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace subcount
{
    namespace
    {
        auto fail(int line, const std::string & message) -> ParseError
        {
            return ParseError{"line " + std::to_string(line) + ": " + message};
        }

        auto parse_int(const std::string & token, int line) -> int
        {
            int value = 0;
            auto [end, error] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (error != std::errc{} || end != token.data() + token.size())
                throw fail(line, "expected an integer, got '" + token + "'");
            return value;
        }
    }

    auto parse_graph_file(std::istream & in) -> GraphFile
    {
        GraphFile file;
        bool header = false;
        std::set<std::pair<int, int>> seen;
        std::string text;
        for (int line = 1; std::getline(in, text); ++line) {
            if (auto hash = text.find('#'); hash != std::string::npos)
                text.resize(hash);
            std::istringstream words{text};
            std::vector<std::string> tokens;
            for (std::string word; words >> word;)
                tokens.push_back(word);
            if (tokens.empty())
                continue;

            const auto & kind = tokens[0];
            if (kind == "g") {
                if (header)
                    throw fail(line, "repeated header");
                if (tokens.size() < 2 || tokens.size() > 3 || (tokens.size() == 3 && tokens[2] != "directed"))
                    throw fail(line, "header must be 'g <n> [directed]'");
                file.n = parse_int(tokens[1], line);
                if (file.n < 0)
                    throw fail(line, "negative vertex count");
                file.directed = tokens.size() == 3;
                file.vertex_color.assign(file.n, std::nullopt);
                header = true;
                continue;
            }
            if (! header)
                throw fail(line, "missing 'g' header");
            auto check_vertex = [&](int v) {
                if (v < 0 || v >= file.n)
                    throw fail(line, "vertex " + std::to_string(v) + " out of range");
            };
            if (kind == "e") {
                if (tokens.size() < 3 || tokens.size() > 4)
                    throw fail(line, "edge must be 'e <u> <v> [color]'");
                int u = parse_int(tokens[1], line), v = parse_int(tokens[2], line);
                check_vertex(u);
                check_vertex(v);
                if (u == v)
                    throw fail(line, "self-loop");
                auto key = file.directed ? std::pair{u, v} : make_edge(u, v);
                if (! seen.insert(key).second)
                    throw fail(line, "duplicate edge");
                std::optional<int> color;
                if (tokens.size() == 4)
                    color = parse_int(tokens[3], line);
                file.edges.push_back({u, v, color});
            }
            else if (kind == "vc") {
                if (tokens.size() != 3)
                    throw fail(line, "vertex color must be 'vc <u> <color>'");
                int u = parse_int(tokens[1], line);
                check_vertex(u);
                if (file.vertex_color[u])
                    throw fail(line, "vertex color given twice");
                file.vertex_color[u] = parse_int(tokens[2], line);
            }
            else
                throw fail(line, "unknown record '" + kind + "'");
        }
        if (! header)
            throw ParseError{"missing 'g' header"};
        return file;
    }

    auto parse_graph_string(const std::string & text) -> GraphFile
    {
        std::istringstream in{text};
        return parse_graph_file(in);
    }

    auto read_graph_file(const std::string & path) -> GraphFile
    {
        std::ifstream in{path};
        if (! in)
            throw ParseError{"cannot open " + path};
        try {
            return parse_graph_file(in);
        }
        catch (const ParseError & e) {
            throw ParseError{path + ": " + e.what()};
        }
    }

    auto GraphFile::graph() const -> Graph
    {
        if (directed)
            throw ParseError{"expected an undirected graph"};
        Graph result(n);
        for (auto & e : edges)
            result.add_edge(e.u, e.v);
        return result;
    }

    auto GraphFile::directed_graph() const -> DirectedGraph
    {
        if (! directed)
            throw ParseError{"expected a directed graph"};
        DirectedGraph result(n);
        for (auto & e : edges)
            result.add_arc(e.u, e.v);
        return result;
    }

    auto GraphFile::vertex_colored() const -> VertexColoredGraph
    {
        VertexColoredGraph result{graph(), {}};
        for (int v = 0; v < n; ++v) {
            if (! vertex_color[v])
                throw ParseError{"vertex " + std::to_string(v) + " has no color"};
            result.color.push_back(*vertex_color[v]);
        }
        return result;
    }

    auto GraphFile::edge_colored() const -> EdgeColoredGraph
    {
        if (directed)
            throw ParseError{"expected an undirected graph"};
        EdgeColoredGraph result{Graph(n), {}};
        for (auto & e : edges) {
            if (! e.color)
                throw ParseError{"edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " has no color"};
            result.add_edge(e.u, e.v, *e.color);
        }
        return result;
    }

    auto to_graph_file(const Graph & graph) -> GraphFile
    {
        GraphFile file;
        file.n = graph.n();
        file.vertex_color.assign(file.n, std::nullopt);
        for (auto [u, v] : graph.edges())
            file.edges.push_back({u, v, std::nullopt});
        return file;
    }

    auto to_graph_file(const DirectedGraph & graph) -> GraphFile
    {
        GraphFile file;
        file.n = graph.n();
        file.directed = true;
        file.vertex_color.assign(file.n, std::nullopt);
        for (auto [u, v] : graph.arcs())
            file.edges.push_back({u, v, std::nullopt});
        return file;
    }

    auto to_graph_file(const VertexColoredGraph & graph) -> GraphFile
    {
        graph.validate();
        auto file = to_graph_file(graph.graph);
        for (int v = 0; v < graph.n(); ++v)
            file.vertex_color[v] = graph.color[v];
        return file;
    }

    auto to_graph_file(const EdgeColoredGraph & graph) -> GraphFile
    {
        auto file = to_graph_file(graph.graph);
        for (auto & e : file.edges)
            e.color = graph.color_of(e.u, e.v);
        return file;
    }

    auto write_graph_file(std::ostream & out, const GraphFile & file) -> void
    {
        out << "g " << file.n << (file.directed ? " directed" : "") << '\n';
        for (auto & e : file.edges) {
            out << "e " << e.u << ' ' << e.v;
            if (e.color)
                out << ' ' << *e.color;
            out << '\n';
        }
        for (int v = 0; v < file.n; ++v)
            if (file.vertex_color[v])
                out << "vc " << v << ' ' << *file.vertex_color[v] << '\n';
    }

    auto format_graph_file(const GraphFile & file) -> std::string
    {
        std::ostringstream out;
        write_graph_file(out, file);
        return out.str();
    }

    auto save_graph_file(const std::string & path, const GraphFile & file) -> void
    {
        std::ofstream out{path};
        if (! out)
            throw PreconditionError{"cannot write " + path};
        write_graph_file(out, file);
    }
}
