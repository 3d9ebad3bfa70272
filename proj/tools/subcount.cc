#include <subcount/brute.hh>
#include <subcount/count.hh>
#include <subcount/cycle_reduction.hh>
#include <subcount/factored_matchings.hh>
#include <subcount/gadget.hh>
#include <subcount/graph_io.hh>
#include <subcount/hardness.hh>
#include <subcount/iex.hh>
#include <subcount/minor.hh>
#include <subcount/structural.hh>
#include <subcount/vc_counter.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace subcount;
using nlohmann::json;

namespace
{
    enum class Algo
    {
        brute,
        vc,
        automatic
    };

    struct Options
    {
        std::string algo = "auto";
        int tau_max = 4;
        bool verify = false;
        unsigned threads = 0;
        bool trust = false;

        std::string pattern_path, host_path, output_path, matching_text, colors_text, orientation = "increasing";
        std::string lifted_path, model_out_path;
        std::string n_value = "0";
        int k = 0;
        bool paths = false, chain = false, count = false;
    };

    auto resolved_threads(const Options & options) -> unsigned
    {
        if (options.threads > 0)
            return options.threads;
        if (const char * env = std::getenv("SUBCOUNT_THREADS"); env && *env) {
            int value = std::atoi(env);
            if (value > 0)
                return static_cast<unsigned>(value);
        }
        return 1;
    }

    auto parse_algo(const std::string & name) -> Algo
    {
        if (name == "brute")
            return Algo::brute;
        if (name == "vc")
            return Algo::vc;
        return Algo::automatic;
    }

    // Counter used for #Sub: automatic picks the cover-based one for patterns
    // with a small vertex cover.
    auto choose(const Options & options, const Graph & pattern) -> Algo
    {
        auto algo = parse_algo(options.algo);
        if (algo != Algo::automatic)
            return algo;
        return min_vertex_cover(pattern).size <= options.tau_max ? Algo::vc : Algo::brute;
    }

    auto algo_name(Algo algo) -> std::string
    {
        return algo == Algo::vc ? "vc" : "brute";
    }

    auto sub_counter(Algo algo, unsigned threads) -> SubOracle
    {
        if (algo == Algo::vc)
            return [threads](const Graph & p, const Graph & g) { return count_sub_vc(p, g, threads); };
        return [threads](const Graph & p, const Graph & g) { return count_subgraphs(p, g, threads); };
    }

    auto parse_int_list(const std::string & text) -> std::vector<int>
    {
        std::vector<int> result;
        std::stringstream in{text};
        for (std::string item; std::getline(in, item, ',');) {
            if (item.empty())
                continue;
            try {
                std::size_t used = 0;
                result.push_back(std::stoi(item, &used));
                if (used != item.size())
                    throw std::invalid_argument{item};
            }
            catch (const std::exception &) {
                throw ParseError{"bad integer list '" + text + "'"};
            }
        }
        return result;
    }

    // "0-1,2-3"
    auto parse_matching(const std::string & text) -> std::vector<Edge>
    {
        std::vector<Edge> result;
        std::stringstream in{text};
        for (std::string item; std::getline(in, item, ',');) {
            if (item.empty())
                continue;
            auto dash = item.find('-');
            if (dash == std::string::npos)
                throw ParseError{"bad edge '" + item + "', expected u-v"};
            auto ends = parse_int_list(item.substr(0, dash) + "," + item.substr(dash + 1));
            if (ends.size() != 2)
                throw ParseError{"bad edge '" + item + "', expected u-v"};
            result.push_back(make_edge(ends[0], ends[1]));
        }
        return result;
    }

    auto edges_json(const std::vector<Edge> & edges) -> json
    {
        json result = json::array();
        for (auto [u, v] : edges)
            result.push_back({u, v});
        return result;
    }

    class Run
    {
    public:
        explicit Run(const Options & options) :
            options(options),
            threads(resolved_threads(options)),
            start(std::chrono::steady_clock::now())
        {
        }

        auto finish(json record) -> void
        {
            auto elapsed = std::chrono::steady_clock::now() - start;
            record["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
            std::cout << record.dump() << '\n';
        }

        auto count_record(const Count & count, const std::string & algorithm, std::uint64_t calls = 0) -> json
        {
            return json{{"count", to_string(count)}, {"algorithm", algorithm}, {"oracle_calls", calls}};
        }

        auto cross_check(const Count & a, const Count & b, const std::string & what) -> void
        {
            if (a != b)
                throw InconsistencyError{what + ": counters disagree (" + to_string(a) + " vs " + to_string(b) + ")"};
        }

        const Options & options;
        unsigned threads;
        std::chrono::steady_clock::time_point start;
    };

    auto count_pattern(const Options & options, bool embeddings) -> void
    {
        Run run{options};
        auto pattern = read_graph_file(options.pattern_path).graph();
        auto host = read_graph_file(options.host_path).graph();
        auto algo = choose(options, pattern);
        auto counter = [&](Algo which) {
            if (which == Algo::vc)
                return embeddings ? count_emb_vc(pattern, host, run.threads) : count_sub_vc(pattern, host, run.threads);
            return embeddings ? count_embeddings(pattern, host, run.threads)
                              : count_subgraphs(pattern, host, run.threads);
        };
        auto result = counter(algo);
        if (options.verify)
            run.cross_check(result, counter(algo == Algo::vc ? Algo::brute : Algo::vc), "--verify");
        run.finish(run.count_record(result, algo_name(algo)));
    }

    auto count_subpart(const Options & options) -> void
    {
        Run run{options};
        auto pattern = read_graph_file(options.pattern_path).vertex_colored();
        auto host = read_graph_file(options.host_path).vertex_colored();
        auto algo = parse_algo(options.algo);
        Count result;
        std::string name;
        std::atomic<std::uint64_t> calls{0};
        if (algo == Algo::brute) {
            result = count_colorpreserving_subgraphs(pattern, host);
            name = "brute";
        }
        else {
            auto inner = choose(options, pattern.graph);
            auto oracle = sub_counter(inner, 1);
            result = subpart_via_sub_oracle(
                pattern, host,
                [&](const Graph & p, const Graph & g) {
                    ++calls;
                    return oracle(p, g);
                },
                run.threads);
            name = "iex+" + algo_name(inner);
        }
        if (options.verify && algo != Algo::brute)
            run.cross_check(result, count_colorpreserving_subgraphs(pattern, host), "--verify");
        run.finish(run.count_record(result, name, calls));
    }

    auto count_colorful(const Options & options) -> void
    {
        Run run{options};
        auto host = read_graph_file(options.host_path).edge_colored();
        auto colors = parse_int_list(options.colors_text);
        auto result = count_colorful_matchings(host, colors);
        if (options.verify)
            run.cross_check(result,
                colmatch_via_match_oracle(host, colors, [](const Graph & g, int k) { return count_k_matchings(g, k); },
                    run.threads),
                "--verify");
        run.finish(run.count_record(result, "brute"));
    }

    auto count_matchings(const Options & options) -> void
    {
        Run run{options};
        auto host = read_graph_file(options.host_path).graph();
        if (options.k < 0)
            throw PreconditionError{"k must be nonnegative"};
        auto algo = parse_algo(options.algo);
        if (algo == Algo::automatic)
            algo = options.k <= options.tau_max ? Algo::vc : Algo::brute;
        auto counter = [&](Algo which) {
            return which == Algo::vc ? count_sub_vc(make_matching(options.k), host, run.threads)
                                     : count_k_matchings(host, options.k);
        };
        auto result = counter(algo);
        if (options.verify)
            run.cross_check(result, counter(algo == Algo::vc ? Algo::brute : Algo::vc), "--verify");
        run.finish(run.count_record(result, algo_name(algo)));
    }

    auto count_cycles(const Options & options) -> void
    {
        Run run{options};
        auto file = read_graph_file(options.host_path);
        auto kind = options.paths ? WalkKind::path : WalkKind::cycle;
        if (options.k < 1 || (kind == WalkKind::cycle && options.k < (file.directed ? 2 : 3)))
            throw PreconditionError{"length too small"};
        Count result;
        std::string name = "brute";
        if (file.directed)
            result = count_walk_patterns(file.directed_graph(), kind, options.k);
        else {
            auto host = file.graph();
            auto shape = kind == WalkKind::path ? make_path(options.k + 1) : make_cycle(options.k);
            auto algo = choose(options, shape);
            result = algo == Algo::vc ? count_sub_vc(shape, host, run.threads) : count_walk_patterns(host, kind, options.k);
            name = algo_name(algo);
            if (options.verify)
                run.cross_check(result,
                    algo == Algo::vc ? count_walk_patterns(host, kind, options.k) : count_sub_vc(shape, host, run.threads),
                    "--verify");
        }
        run.finish(run.count_record(result, name));
    }

    auto require_small_gadget(const Options & options, const Graph & pattern) -> void
    {
        if (pattern.n() > 12 && ! options.trust)
            throw PreconditionError{"gadget checks on more than 12 pattern vertices need --trust"};
    }

    auto verify_gadget(const Options & options) -> void
    {
        Run run{options};
        auto pattern = read_graph_file(options.pattern_path).graph();
        require_small_gadget(options, pattern);
        auto verdict = check_matching_gadget(pattern, parse_matching(options.matching_text));
        json record{{"is_gadget", verdict.is_gadget}, {"candidates", verdict.candidates.size()}};
        if (verdict.counterexample)
            record["counterexample"] = *verdict.counterexample;
        run.finish(record);
    }

    auto search_gadget_command(const Options & options) -> void
    {
        Run run{options};
        auto pattern = read_graph_file(options.pattern_path).graph();
        require_small_gadget(options, pattern);
        auto found = search_gadget(pattern, options.k);
        json record{{"found", found.has_value()}};
        if (found)
            record["matching"] = edges_json(found->matching);
        run.finish(record);
    }

    auto reduce_via_gadget(const Options & options) -> void
    {
        Run run{options};
        auto pattern = read_graph_file(options.pattern_path).graph();
        auto host = read_graph_file(options.host_path).graph();
        auto matching = parse_matching(options.matching_text);
        if (! options.trust) {
            require_small_gadget(options, pattern);
            if (! is_matching_gadget(pattern, matching))
                throw PreconditionError{"the given matching does not make the pattern a gadget"};
        }
        auto gadget = make_gadget(pattern, matching);
        auto algo = choose(options, pattern);
        auto oracle = sub_counter(algo, 1);
        std::atomic<std::uint64_t> calls{0};
        auto result = count_matchings_via_gadget(
            host, gadget,
            [&](const Graph & p, const Graph & g) {
                ++calls;
                return oracle(p, g);
            },
            run.threads);
        if (options.verify)
            run.cross_check(result, count_k_matchings(host, gadget.k()), "--verify");
        run.finish(run.count_record(result, "gadget+" + algo_name(algo), calls));
    }

    auto reduce_via_colmatch(const Options & options) -> void
    {
        Run run{options};
        auto pattern = read_graph_file(options.pattern_path).vertex_colored();
        auto host = read_graph_file(options.host_path).vertex_colored();
        std::atomic<std::uint64_t> calls{0};
        ColmatchOracle inner;
        std::string name;
        if (parse_algo(options.algo) == Algo::brute) {
            inner = [](const EdgeColoredGraph & g, const std::vector<int> & c) { return count_colorful_matchings(g, c); };
            name = "colmatch+brute";
        }
        else {
            inner = FactoredColmatchCounter{gadget_color_scheme(pattern.graph).pattern_edge_colors()};
            name = "colmatch+factored";
        }
        auto result = subpart_via_colmatch_oracle(
            pattern, host,
            [&](const EdgeColoredGraph & g, const std::vector<int> & c) {
                ++calls;
                return inner(g, c);
            },
            run.threads);
        if (options.verify)
            run.cross_check(result, count_colorpreserving_subgraphs(pattern, host), "--verify");
        run.finish(run.count_record(result, name, calls));
    }

    auto reduce_via_cycles(const Options & options) -> void
    {
        Run run{options};
        auto host = read_graph_file(options.host_path).graph();
        std::atomic<std::uint64_t> calls{0};
        DirectedCycleOracle oracle;
        std::string name;
        if (options.chain) {
            oracle = [&](const DirectedGraph & g, int length) {
                return directed_cycles_via_undirected(g, length, [&](const Graph & u, int l) {
                    ++calls;
                    return count_walk_patterns(u, WalkKind::cycle, l);
                });
            };
            name = "cycles+undirected";
        }
        else {
            oracle = [&](const DirectedGraph & g, int length) {
                ++calls;
                return count_walk_patterns(g, WalkKind::cycle, length);
            };
            name = "cycles+directed";
        }
        auto result = matchings_via_directed_cycles(host, options.k, oracle);
        if (options.verify)
            run.cross_check(result, count_k_matchings(host, options.k), "--verify");
        run.finish(run.count_record(result, name, calls));
    }

    auto model_json(const MinorModel & model) -> json
    {
        return json{{"branch", model.branch}, {"discard", model.discard}};
    }

    auto identity_colored(const Graph & graph) -> VertexColoredGraph
    {
        VertexColoredGraph result{graph, {}};
        for (int v = 0; v < graph.n(); ++v)
            result.color.push_back(v);
        return result;
    }

    auto make_bicubic_command(const Options & options) -> void
    {
        Run run{options};
        auto pattern = read_graph_file(options.pattern_path).graph();
        auto lift = make_bicubic(pattern);
        if (! options.output_path.empty())
            save_graph_file(options.output_path, to_graph_file(lift.graph));
        run.finish(json{{"n", lift.graph.n()}, {"m", lift.graph.m()}, {"model", model_json(lift.model)}});
    }

    auto grid_instance(const Options & options) -> void
    {
        Run run{options};
        auto graph = read_graph_file(options.host_path).graph();
        if (options.orientation != "increasing" && options.orientation != "both")
            throw ParseError{"--orientation must be increasing or both"};
        auto grid = build_grid_instance(graph, options.k,
            options.orientation == "both" ? GridOrientation::both : GridOrientation::increasing);
        if (! options.output_path.empty())
            save_graph_file(options.output_path, to_graph_file(grid.host));
        if (! options.lifted_path.empty())
            save_graph_file(options.lifted_path, to_graph_file(grid.pattern));
        json record{{"pattern_n", grid.pattern.n()}, {"host_n", grid.host.n()}, {"host_m", grid.host.graph.m()}};
        if (options.count) {
            record["count"] = to_string(count_colorpreserving_subgraphs(grid.pattern, grid.host));
            record["algorithm"] = "brute";
            record["oracle_calls"] = 0;
        }
        run.finish(record);
    }

    auto minor_lift(const Options & options) -> void
    {
        Run run{options};
        auto pattern = read_graph_file(options.pattern_path).vertex_colored();
        auto host = read_graph_file(options.host_path).vertex_colored();
        auto lift = make_bicubic(pattern.graph);
        auto lifted_host = minor_lift_instance(pattern, lift.graph, lift.model, host);
        if (! options.output_path.empty())
            save_graph_file(options.output_path, to_graph_file(lifted_host));
        if (! options.lifted_path.empty())
            save_graph_file(options.lifted_path, to_graph_file(identity_colored(lift.graph)));
        if (! options.model_out_path.empty()) {
            std::ofstream out{options.model_out_path};
            out << model_json(lift.model).dump() << '\n';
        }
        json record{{"lifted_pattern_n", lift.graph.n()}, {"lifted_host_n", lifted_host.n()},
            {"model", model_json(lift.model)}};
        if (options.count) {
            auto before = count_colorpreserving_subgraphs(pattern, host);
            auto after = count_colorpreserving_subgraphs(identity_colored(lift.graph), lifted_host);
            run.cross_check(before, after, "minor-lift");
            record["count"] = to_string(after);
            record["algorithm"] = "brute";
            record["oracle_calls"] = 0;
        }
        run.finish(record);
    }

    auto extract_command(const Options & options) -> void
    {
        Run run{options};
        auto graph = read_graph_file(options.host_path).graph();
        auto found = extract_clique_biclique_or_matching(graph, options.k);
        json record{{"found", found.has_value()}};
        if (found) {
            switch (found->kind) {
            case ExtractionKind::clique:
                record["kind"] = "clique";
                record["vertices"] = found->clique;
                break;
            case ExtractionKind::biclique:
                record["kind"] = "biclique";
                record["left"] = found->left;
                record["right"] = found->right;
                break;
            case ExtractionKind::induced_matching:
                record["kind"] = "induced-matching";
                record["edges"] = edges_json(found->matching);
                break;
            }
        }
        run.finish(record);
    }

    auto state_matrix_command(const Options & options) -> void
    {
        Run run{options};
        Integer extra;
        try {
            extra = Integer(options.n_value);
        }
        catch (const std::exception &) {
            throw ParseError{"--n must be an integer"};
        }
        if (extra < 0)
            throw PreconditionError{"--n must be nonnegative"};
        auto matrix = state_matrix(extra);
        json rows = json::array();
        for (auto & row : matrix.values) {
            json r = json::array();
            for (auto & x : row)
                r.push_back(to_string(x));
            rows.push_back(r);
        }
        run.finish(json{{"matrix", rows}, {"det", to_string(matrix.determinant)}});
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Exact subgraph counting and counting reductions"};
    app.require_subcommand(1);
    Options options;

    auto common = [&](CLI::App * sub) {
        sub->add_option("--algo", options.algo, "Counter: brute, vc or auto")
            ->check(CLI::IsMember({"brute", "vc", "auto"}));
        sub->add_option("--tau-max", options.tau_max, "Largest pattern vertex cover for which auto picks vc");
        sub->add_flag("--verify", options.verify, "Cross-check against an independent counter");
        sub->add_option("--threads", options.threads, "Worker threads (default: SUBCOUNT_THREADS or 1)");
    };
    auto pattern = [&](CLI::App * sub) { sub->add_option("-p,--pattern", options.pattern_path)->required(); };
    auto host = [&](CLI::App * sub) { sub->add_option("-H,--host", options.host_path)->required(); };
    auto k = [&](CLI::App * sub) { sub->add_option("-k", options.k)->required(); };

    std::vector<std::pair<CLI::App *, std::function<void()>>> commands;
    auto add = [&](const std::string & name, const std::string & help, std::function<void()> action) {
        auto * sub = app.add_subcommand(name, help);
        common(sub);
        commands.push_back({sub, std::move(action)});
        return sub;
    };

    auto * c = add("count-sub", "Count subgraphs isomorphic to the pattern", [&] { count_pattern(options, false); });
    pattern(c), host(c);
    c = add("count-emb", "Count embeddings of the pattern", [&] { count_pattern(options, true); });
    pattern(c), host(c);
    c = add("count-subpart", "Count color-preserving copies of a colorful pattern", [&] { count_subpart(options); });
    pattern(c), host(c);
    c = add("count-colorful-matchings", "Count matchings with one edge of each listed color",
        [&] { count_colorful(options); });
    host(c);
    c->add_option("--colors", options.colors_text, "Comma-separated edge colors")->required();
    c = add("count-matchings", "Count k-matchings", [&] { count_matchings(options); });
    host(c), k(c);
    c = add("count-cycles", "Count k-cycles (or k-edge paths) of a directed or undirected host",
        [&] { count_cycles(options); });
    host(c), k(c);
    c->add_flag("--paths", options.paths, "Count paths with k edges instead");
    c = add("verify-gadget", "Decide whether a matching makes the pattern a matching gadget",
        [&] { verify_gadget(options); });
    pattern(c);
    c->add_option("-m,--matching", options.matching_text, "Edges as u-v,u-v")->required();
    c->add_flag("--trust", options.trust, "Allow patterns with more than 12 vertices");
    c = add("search-gadget", "Find an induced k-matching that makes the pattern a gadget",
        [&] { search_gadget_command(options); });
    pattern(c), k(c);
    c->add_flag("--trust", options.trust, "Allow patterns with more than 12 vertices");
    c = add("reduce-matchings-via-gadget", "Count k-matchings of a bipartite host from pattern counts",
        [&] { reduce_via_gadget(options); });
    pattern(c), host(c);
    c->add_option("-m,--matching", options.matching_text, "Gadget matching as u-v,u-v")->required();
    c->add_flag("--trust", options.trust, "Skip the gadget check");
    c = add("reduce-subpart-via-colmatch", "Count copies of a colorful bicubic pattern from colorful matchings",
        [&] { reduce_via_colmatch(options); });
    pattern(c), host(c);
    c = add("reduce-matchings-via-cycles", "Count k-matchings of a bipartite host from directed cycle counts",
        [&] { reduce_via_cycles(options); });
    host(c), k(c);
    c->add_flag("--chain", options.chain, "Answer directed cycle queries from undirected cycle counts");
    c = add("make-bicubic", "Lift a pattern to a bicubic graph containing it as a minor",
        [&] { make_bicubic_command(options); });
    pattern(c);
    c->add_option("-o,--output", options.output_path, "Write the bicubic graph here");
    c = add("grid-instance", "Build the colored grid instance for k-cliques", [&] { grid_instance(options); });
    host(c), k(c);
    c->add_option("-o,--output", options.output_path, "Write the colored host here");
    c->add_option("--pattern-out", options.lifted_path, "Write the colored grid here");
    c->add_option("--orientation", options.orientation, "increasing (one copy per clique) or both");
    c->add_flag("--count", options.count, "Also count grid copies");
    c = add("minor-lift", "Lift a colored instance along a bicubic minor model", [&] { minor_lift(options); });
    pattern(c), host(c);
    c->add_option("-o,--output", options.output_path, "Write the lifted host here");
    c->add_option("--pattern-out", options.lifted_path, "Write the lifted pattern here");
    c->add_option("--model-out", options.model_out_path, "Write the minor model as JSON here");
    c->add_flag("--count", options.count, "Count copies on both sides and compare");
    c = add("extract", "Find a k-clique, k+k biclique or induced k-matching", [&] { extract_command(options); });
    host(c), k(c);
    c = add("state-matrix", "Print the type/state transfer matrix for n extra vertices",
        [&] { state_matrix_command(options); });
    c->add_option("--n", options.n_value, "Extra vertices per class");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return 1;
    }

    try {
        for (auto & [sub, action] : commands)
            if (sub->parsed())
                action();
    }
    catch (const ParseError & e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    }
    catch (const PreconditionError & e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return 2;
    }
    catch (const InconsistencyError & e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return 3;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
