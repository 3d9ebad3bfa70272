#include <subcount/brute.hh>
#include <subcount/hardness.hh>
#include <subcount/iex.hh>
#include <subcount/parallel.hh>

#include <algorithm>
#include <string>

namespace subcount
{
    namespace
    {
        // Color of the cycle edge starting at each slot: w1z1, z1w2, w2z2, z2w3, w3z3, z3w1.
        constexpr std::array<int, 6> slot_edge_color{1, 6, 5, 4, 3, 2};

        auto checked_state(int state) -> int
        {
            if (state < 1 || state > 5)
                throw PreconditionError{"state index must be in 1..5, got " + std::to_string(state)};
            return state;
        }
    }

    auto GadgetColorScheme::pattern_edge_colors() const -> std::vector<int>
    {
        std::vector<int> result(pattern_edges.size());
        for (std::size_t e = 0; e < result.size(); ++e)
            result[e] = static_cast<int>(e);
        return result;
    }

    auto gadget_color_scheme(const Graph & pattern) -> GadgetColorScheme
    {
        for (int v = 0; v < pattern.n(); ++v)
            if (pattern.degree(v) != 3)
                throw PreconditionError{"pattern is not 3-regular"};
        auto side = bipartition(pattern);
        if (! side)
            throw PreconditionError{"pattern is not bipartite"};

        GadgetColorScheme scheme;
        scheme.pattern_edges = pattern.edges();
        scheme.side = *side;
        scheme.incident.resize(pattern.n());
        for (int v = 0; v < pattern.n(); ++v) {
            const auto & nbrs = pattern.neighbors(v);
            for (int a = 0; a < 3; ++a) {
                auto e = make_edge(v, nbrs[a]);
                auto it = std::lower_bound(scheme.pattern_edges.begin(), scheme.pattern_edges.end(), e);
                scheme.incident[v][a] = static_cast<int>(it - scheme.pattern_edges.begin());
            }
        }
        return scheme;
    }

    auto pad_classes(const VertexColoredGraph & pattern, const VertexColoredGraph & host, int size)
        -> VertexColoredGraph
    {
        std::vector<int> colors = pattern.color;
        std::sort(colors.begin(), colors.end());
        auto kept = host.restricted_to_colors(colors);
        for (int c : colors) {
            int have = static_cast<int>(kept.vertices_with_color(c).size());
            if (have > size)
                throw PreconditionError{"class of color " + std::to_string(c) + " exceeds the padding size"};
            int first = kept.graph.add_vertices(size - have);
            for (int v = first; v < kept.graph.n(); ++v)
                kept.color.push_back(c);
        }
        return kept;
    }

    auto build_triangle_graph(const VertexColoredGraph & pattern, const VertexColoredGraph & host,
        const GadgetColorScheme & scheme) -> TriangleGraph
    {
        pattern.validate();
        host.validate();
        if (! pattern.is_colorful())
            throw PreconditionError{"pattern is not vertex-colorful"};
        if (scheme.k() != pattern.n())
            throw PreconditionError{"color scheme does not belong to the pattern"};

        std::map<int, int> owner;
        for (int i = 0; i < pattern.n(); ++i)
            owner[pattern.color[i]] = i;

        TriangleGraph result;
        result.graph.graph = Graph{6 * host.n()};
        result.side.assign(6 * host.n(), 0);
        std::vector<int> class_size(pattern.n(), 0);
        for (int v = 0; v < host.n(); ++v) {
            auto it = owner.find(host.color[v]);
            if (it == owner.end())
                throw PreconditionError{"host vertex " + std::to_string(v) + " has a color outside the pattern"};
            int i = it->second;
            ++class_size[i];
            result.pattern_vertex.push_back(i);
            std::array<int, 6> slots{};
            for (int p = 0; p < 6; ++p) {
                slots[p] = 6 * v + p;
                result.side[slots[p]] = p % 2 == 0 ? scheme.side[i] : 1 - scheme.side[i];
            }
            for (int p = 0; p < 6; ++p)
                result.graph.add_edge(slots[p], slots[(p + 1) % 6], scheme.cycle_color(i, slot_edge_color[p]));
            result.cycle.push_back(slots);
        }
        for (int size : class_size)
            if (size != class_size.front())
                throw PreconditionError{"host classes must have equal size; pad first"};

        auto slot_of = [&](int i, int edge) {
            const auto & inc = scheme.incident[i];
            return 2 * static_cast<int>(std::find(inc.begin(), inc.end(), edge) - inc.begin());
        };
        for (auto [u, v] : host.graph.edges()) {
            int i = result.pattern_vertex[u], j = result.pattern_vertex[v];
            auto e = make_edge(i, j);
            auto it = std::lower_bound(scheme.pattern_edges.begin(), scheme.pattern_edges.end(), e);
            if (i == j || it == scheme.pattern_edges.end() || *it != e)
                continue; // useless for color-preserving copies
            int color = static_cast<int>(it - scheme.pattern_edges.begin());
            result.graph.add_edge(result.cycle[u][slot_of(i, color)], result.cycle[v][slot_of(j, color)], color);
        }
        return result;
    }

    auto state_color_set(int state) -> std::vector<int>
    {
        static const std::array<std::vector<int>, 5> sets{
            std::vector<int>{4, 5}, {2, 3}, {1, 6}, {2, 3, 4, 5}, {1, 2, 3, 4, 5, 6}};
        return sets[checked_state(state) - 1];
    }

    auto residue_graph(int type, int extra) -> EdgeColoredGraph
    {
        checked_state(type);
        if (extra < 0)
            throw PreconditionError{"residue_graph: negative cycle count"};
        int cycles = 3 + extra;
        // removed[c] lists the w-slots deleted from damaged cycle c.
        std::array<std::vector<int>, 3> removed;
        if (type == 1)
            removed[0] = {0, 2, 4};
        else if (type == 5)
            removed = {std::vector<int>{0}, {2}, {4}};
        else {
            int alone = 2 * (type - 2);
            removed[0] = {alone};
            for (int slot : {0, 2, 4})
                if (slot != alone)
                    removed[1].push_back(slot);
        }

        std::vector<int> id(6 * cycles, -1);
        int next = 0;
        for (int c = 0; c < cycles; ++c)
            for (int p = 0; p < 6; ++p) {
                bool gone = c < 3 && std::find(removed[c].begin(), removed[c].end(), p) != removed[c].end();
                if (! gone)
                    id[6 * c + p] = next++;
            }
        EdgeColoredGraph result;
        result.graph = Graph{next};
        for (int c = 0; c < cycles; ++c)
            for (int p = 0; p < 6; ++p) {
                int a = id[6 * c + p], b = id[6 * c + (p + 1) % 6];
                if (a != -1 && b != -1)
                    result.add_edge(a, b, slot_edge_color[p]);
            }
        return result;
    }

    namespace
    {
        auto all_pst_polynomials() -> const std::array<std::array<IntPolynomial, 5>, 5> &
        {
            // [type - 1][state - 1]; at most six colors are queried, so degree <= 6.
            static const auto table = [] {
                std::array<std::array<IntPolynomial, 5>, 5> result;
                for (int s = 1; s <= 5; ++s)
                    for (int t = 1; t <= 5; ++t) {
                        std::vector<Integer> xs, ys;
                        for (int m = 0; m <= 6; ++m) {
                            xs.emplace_back(m);
                            ys.push_back(count_colorful_matchings(residue_graph(s, m), state_color_set(t)));
                        }
                        auto poly = to_int_polynomial(interpolate(xs, ys));
                        if (! poly)
                            throw InconsistencyError{"state polynomial has non-integer coefficients"};
                        result[s - 1][t - 1] = *poly;
                    }
                return result;
            }();
            return table;
        }
    }

    auto pst_polynomial(int type, int state) -> IntPolynomial
    {
        return all_pst_polynomials()[checked_state(type) - 1][checked_state(state) - 1];
    }

    auto state_matrix(const Integer & extra) -> StateMatrix
    {
        if (extra < 0)
            throw PreconditionError{"state_matrix: negative argument"};
        StateMatrix result;
        result.values.assign(5, std::vector<Integer>(5));
        for (int t = 1; t <= 5; ++t)
            for (int s = 1; s <= 5; ++s)
                result.values[t - 1][s - 1] = pst_polynomial(s, t)(extra);
        result.determinant = determinant(result.values);
        return result;
    }

    auto state_determinant_polynomial() -> IntPolynomial
    {
        static const IntPolynomial poly = [] {
            std::vector<Integer> xs, ys;
            for (int m = 0; m <= 30; ++m) {
                xs.emplace_back(m);
                ys.push_back(state_matrix(m).determinant);
            }
            auto result = to_int_polynomial(interpolate(xs, ys));
            if (! result)
                throw InconsistencyError{"state determinant is not an integer polynomial"};
            return *result;
        }();
        return poly;
    }

    auto state_nonsingular_from() -> Integer
    {
        auto poly = state_determinant_polynomial();
        if (poly.is_zero())
            throw InconsistencyError{"state determinant vanishes identically"};
        return nonvanishing_from(poly);
    }

    auto solve_theta_star(const std::vector<Count> & b, const Integer & class_size, int k) -> Count
    {
        if (k < 1)
            throw PreconditionError{"solve_theta_star: k must be positive"};
        std::size_t expected = 1;
        for (int i = 0; i < k; ++i)
            expected *= 5;
        if (b.size() != expected)
            throw PreconditionError{"solve_theta_star: expected 5^k right-hand sides"};
        if (class_size < 3)
            throw PreconditionError{"solve_theta_star: class size must be at least 3"};

        auto matrix = state_matrix(class_size - 3);
        auto inv = inverse(matrix.values);
        if (! inv)
            throw InconsistencyError{"state matrix singular at class size " + to_string(class_size)
                + "; increase padding n"};
        const auto & row = (*inv)[0];

        // Contract the least significant coordinate repeatedly.
        std::vector<Rational> current(b.begin(), b.end());
        while (current.size() > 1) {
            std::vector<Rational> next(current.size() / 5);
            for (std::size_t j = 0; j < next.size(); ++j)
                for (std::size_t x = 0; x < 5; ++x)
                    next[j] += row[x] * current[5 * j + x];
            current = std::move(next);
        }
        return to_count(current[0], "solve_theta_star");
    }

    auto query_colors(const GadgetColorScheme & scheme, const std::vector<int> & states) -> std::vector<int>
    {
        if (static_cast<int>(states.size()) != scheme.k())
            throw PreconditionError{"query_colors: one state per pattern vertex required"};
        auto colors = scheme.pattern_edge_colors();
        for (int i = 0; i < scheme.k(); ++i)
            for (int p : state_color_set(states[i]))
                colors.push_back(scheme.cycle_color(i, p));
        std::sort(colors.begin(), colors.end());
        return colors;
    }

    auto hardness_class_size(const VertexColoredGraph & pattern, const VertexColoredGraph & host) -> int
    {
        Integer bound = state_nonsingular_from() + 3;
        int size = 3;
        if (bound > size)
            size = static_cast<int>(bound);
        for (int c : pattern.color)
            size = std::max(size, static_cast<int>(host.vertices_with_color(c).size()));
        return size;
    }

    auto subpart_via_colmatch_oracle(const VertexColoredGraph & pattern, const VertexColoredGraph & host,
        const ColmatchOracle & oracle, unsigned threads, std::optional<int> class_size) -> Count
    {
        auto scheme = gadget_color_scheme(pattern.graph);
        if (! pattern.is_colorful())
            throw PreconditionError{"pattern is not vertex-colorful"};
        int k = pattern.n();
        if (k > 12)
            throw PreconditionError{"subpart_via_colmatch_oracle: too many pattern vertices"};

        auto pruned = prune_useless_edges(pattern, host);
        int size = class_size.value_or(hardness_class_size(pattern, pruned));
        if (size < hardness_class_size(pattern, pruned))
            throw PreconditionError{"class size " + std::to_string(size) + " is below the admissible padding"};
        if (state_matrix(size - 3).determinant == 0)
            throw InconsistencyError{"state matrix singular at class size " + std::to_string(size)};

        auto triangle = build_triangle_graph(pattern, pad_classes(pattern, pruned, size), scheme);

        std::size_t queries = 1;
        for (int i = 0; i < k; ++i)
            queries *= 5;
        std::vector<Count> b(queries);
        parallel_for(queries, threads, [&](std::size_t index) {
            std::vector<int> states(k);
            std::size_t rest = index;
            for (int i = k - 1; i >= 0; --i) {
                states[i] = static_cast<int>(rest % 5) + 1;
                rest /= 5;
            }
            b[index] = oracle(triangle.graph, query_colors(scheme, states));
        });
        return solve_theta_star(b, size, k);
    }
}
