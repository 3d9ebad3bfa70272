#include <subcount/brute.hh>
#include <subcount/gadget.hh>
#include <subcount/parallel.hh>
#include <subcount/polynomial.hh>

#include <algorithm>
#include <bit>
#include <string>

namespace subcount
{
    namespace
    {
        // Calls visit(subset) for every size-r subset of [0, n) in lexicographic order; stops on false.
        template <typename Visit>
        auto for_each_combination(int n, int r, Visit visit) -> void
        {
            if (r < 0 || r > n)
                return;
            std::vector<int> pick(r);
            for (int i = 0; i < r; ++i)
                pick[i] = i;
            while (true) {
                if (! visit(pick))
                    return;
                int i = r - 1;
                while (i >= 0 && pick[i] == n - r + i)
                    --i;
                if (i < 0)
                    return;
                ++pick[i];
                for (int j = i + 1; j < r; ++j)
                    pick[j] = pick[j - 1] + 1;
            }
        }

        auto complement_of(int n, const std::vector<int> & subset) -> std::vector<int>
        {
            std::vector<char> in(n, 0);
            for (int v : subset)
                in[v] = 1;
            std::vector<int> rest;
            for (int v = 0; v < n; ++v)
                if (! in[v])
                    rest.push_back(v);
            return rest;
        }

        auto boundary_labels(const Graph & graph, const std::vector<int> & subset) -> std::vector<int>
        {
            auto rim = boundary(graph, subset);
            std::vector<int> labels;
            for (int v : subset)
                labels.push_back(std::binary_search(rim.begin(), rim.end(), v) ? 1 : 0);
            return labels;
        }

        auto has_boundary_isomorphism(const Graph & pattern, const std::vector<int> & from, const std::vector<int> & to)
            -> bool
        {
            bool found = false;
            for_each_isomorphism(pattern.induced(from), pattern.induced(to), [&](const std::vector<int> &) {
                found = true;
                return false;
            }, boundary_labels(pattern, from), boundary_labels(pattern, to));
            return found;
        }

        auto is_perfect_matching_graph(const Graph & graph) -> bool
        {
            for (int v = 0; v < graph.n(); ++v)
                if (graph.degree(v) != 1)
                    return false;
            return true;
        }

        auto has_isolated_vertex(const Graph & graph) -> bool
        {
            for (int v = 0; v < graph.n(); ++v)
                if (graph.degree(v) == 0)
                    return true;
            return false;
        }

        auto matched_vertices(const std::vector<Edge> & matching) -> std::vector<int>
        {
            std::vector<int> result;
            for (auto [u, v] : matching) {
                result.push_back(u);
                result.push_back(v);
            }
            std::sort(result.begin(), result.end());
            return result;
        }
    }

    auto boundary(const Graph & graph, const std::vector<int> & subset) -> std::vector<int>
    {
        std::vector<char> in(graph.n(), 0);
        for (int v : subset)
            in[v] = 1;
        std::vector<int> result;
        for (int v : subset)
            for (int u : graph.neighbors(v))
                if (! in[u]) {
                    result.push_back(v);
                    break;
                }
        std::sort(result.begin(), result.end());
        return result;
    }

    auto make_gadget(const Graph & pattern, const std::vector<Edge> & matching) -> MatchingGadget
    {
        MatchingGadget gadget;
        gadget.pattern = pattern;
        for (auto [u, v] : matching) {
            if (u < 0 || v < 0 || u >= pattern.n() || v >= pattern.n() || ! pattern.adjacent(u, v))
                throw PreconditionError{"matching edge is not an edge of the pattern"};
            gadget.matching.push_back(make_edge(u, v));
        }
        std::sort(gadget.matching.begin(), gadget.matching.end());
        if (! is_matching(gadget.matching) || ! is_induced_matching(pattern, gadget.matching))
            throw PreconditionError{"gadget matching must be an induced matching"};
        gadget.complement = complement_of(pattern.n(), matched_vertices(gadget.matching));
        gadget.rim = boundary(pattern, gadget.complement);
        return gadget;
    }

    auto check_matching_gadget(const Graph & pattern, const std::vector<Edge> & matching) -> GadgetVerdict
    {
        auto gadget = make_gadget(pattern, matching);
        const auto & complement = gadget.complement;
        auto core = pattern.induced(complement);

        GadgetVerdict verdict;
        for_each_combination(pattern.n(), static_cast<int>(complement.size()), [&](const std::vector<int> & other) {
            auto image = pattern.induced(other);
            if (image.m() != core.m() || ! is_isomorphic(core, image))
                return true;
            auto rest = pattern.induced(complement_of(pattern.n(), other));
            CandidateReport report;
            report.replacement = other;
            report.no_isolated = ! has_isolated_vertex(rest);
            report.bipartite = is_bipartite(rest);
            report.is_matching = is_perfect_matching_graph(rest);
            report.boundary_isomorphic = has_boundary_isomorphism(pattern, complement, other);
            if (report.no_isolated && report.bipartite && report.boundary_isomorphic && ! report.is_matching
                && verdict.is_gadget) {
                verdict.is_gadget = false;
                verdict.counterexample = other;
            }
            verdict.candidates.push_back(std::move(report));
            return true;
        });
        return verdict;
    }

    auto is_matching_gadget(const Graph & pattern, const std::vector<Edge> & matching) -> bool
    {
        auto gadget = make_gadget(pattern, matching);
        const auto & complement = gadget.complement;
        auto core = pattern.induced(complement);
        bool ok = true;
        for_each_combination(pattern.n(), static_cast<int>(complement.size()), [&](const std::vector<int> & other) {
            auto rest = pattern.induced(complement_of(pattern.n(), other));
            if (is_perfect_matching_graph(rest) || has_isolated_vertex(rest) || ! is_bipartite(rest))
                return true;
            auto image = pattern.induced(other);
            if (image.m() == core.m() && has_boundary_isomorphism(pattern, complement, other))
                ok = false;
            return ok;
        });
        return ok;
    }

    auto nocommon_sufficient(const Graph & pattern, const std::vector<Edge> & matching) -> bool
    {
        auto gadget = make_gadget(pattern, matching);
        auto matched = matched_vertices(gadget.matching);
        for (int v : gadget.complement) {
            int seen = 0;
            for (int u : pattern.neighbors(v))
                seen += std::binary_search(matched.begin(), matched.end(), u) ? 1 : 0;
            if (seen > 1)
                return false;
        }
        return true;
    }

    auto restrict_gadget(const MatchingGadget & gadget, const std::vector<Edge> & sub_matching) -> MatchingGadget
    {
        for (auto e : sub_matching)
            if (! std::binary_search(gadget.matching.begin(), gadget.matching.end(), make_edge(e.first, e.second)))
                throw PreconditionError{"restrict_gadget: edge is not in the gadget matching"};
        return make_gadget(gadget.pattern, sub_matching);
    }

    auto is_strong_set(const Graph & pattern, const std::vector<int> & complement, const std::vector<int> & fixed)
        -> bool
    {
        std::vector<int> from = complement, target = fixed;
        std::sort(from.begin(), from.end());
        std::sort(target.begin(), target.end());
        if (! std::includes(from.begin(), from.end(), target.begin(), target.end()))
            throw PreconditionError{"is_strong_set: fixed set is not inside the complement"};
        auto core = pattern.induced(from);
        auto labels = boundary_labels(pattern, from);
        bool strong = true;
        for_each_combination(pattern.n(), static_cast<int>(from.size()), [&](const std::vector<int> & other) {
            auto image = pattern.induced(other);
            if (image.m() != core.m())
                return true;
            for_each_isomorphism(core, image, [&](const std::vector<int> & map) {
                std::vector<int> moved;
                for (std::size_t i = 0; i < from.size(); ++i)
                    if (std::binary_search(target.begin(), target.end(), from[i]))
                        moved.push_back(other[map[i]]);
                std::sort(moved.begin(), moved.end());
                strong = moved == target;
                return strong;
            }, labels, boundary_labels(pattern, other));
            return strong;
        });
        return strong;
    }

    auto build_G_ell(const MatchingGadget & gadget, const Graph & host, int padding) -> LiftedInstance
    {
        if (padding < 0)
            throw PreconditionError{"build_G_ell: negative padding"};
        LiftedInstance lifted;
        lifted.host_side = host.n() + padding;
        lifted.graph = Graph{lifted.host_side + static_cast<int>(gadget.complement.size())};
        for (auto [u, v] : host.edges())
            lifted.graph.add_edge(u, v);
        for (std::size_t i = 0; i < gadget.complement.size(); ++i)
            lifted.complement_copy.push_back(lifted.host_side + static_cast<int>(i));
        auto copy_of = [&](int v) {
            auto it = std::lower_bound(gadget.complement.begin(), gadget.complement.end(), v);
            return lifted.complement_copy[it - gadget.complement.begin()];
        };
        for (auto [u, v] : gadget.pattern.induced(gadget.complement).edges())
            lifted.graph.add_edge(lifted.complement_copy[u], lifted.complement_copy[v]);
        for (int r : gadget.rim) {
            lifted.boundary_copy.push_back(copy_of(r));
            for (int h = 0; h < lifted.host_side; ++h)
                lifted.graph.add_edge(copy_of(r), h);
        }
        return lifted;
    }

    auto count_T_ell(const MatchingGadget & gadget, const Graph & host, int padding, const SubOracle & oracle,
        unsigned threads) -> Count
    {
        auto lifted = build_G_ell(gadget, host, padding);
        auto core = gadget.pattern.induced(gadget.complement);
        auto core_edges = core.edges();
        std::vector<int> lone; // isolated vertices of H[C], by complement index
        for (int v = 0; v < core.n(); ++v)
            if (core.degree(v) == 0)
                lone.push_back(v);
        std::vector<int> rim_index;
        for (int r : gadget.rim)
            rim_index.push_back(static_cast<int>(
                std::lower_bound(gadget.complement.begin(), gadget.complement.end(), r) - gadget.complement.begin()));

        // Atoms: the copied H[C] edges, its isolated vertices, and the join at each boundary vertex.
        std::size_t atoms = core_edges.size() + lone.size() + rim_index.size();
        if (atoms > 24)
            throw PreconditionError{"count_T_ell: too many inclusion-exclusion atoms"};

        Count total = parallel_sum(std::size_t{1} << atoms, threads, [&](std::size_t subset) -> Count {
            std::size_t bit = 0;
            auto take = [&] { return (subset >> bit++) & 1U; };
            std::vector<char> keep_vertex(core.n(), 1), join(core.n(), 0);
            std::vector<Edge> kept_edges;
            for (auto e : core_edges)
                if (take())
                    kept_edges.push_back(e);
            for (int v : lone)
                keep_vertex[v] = static_cast<char>(take());
            for (int v : rim_index)
                join[v] = static_cast<char>(take());

            Graph g{lifted.host_side};
            for (auto [u, v] : host.edges())
                g.add_edge(u, v);
            std::vector<int> id(core.n(), -1);
            for (int v = 0; v < core.n(); ++v)
                if (keep_vertex[v])
                    id[v] = g.add_vertices(1);
            for (auto [u, v] : kept_edges)
                g.add_edge(id[u], id[v]);
            for (int v = 0; v < core.n(); ++v)
                if (join[v] && keep_vertex[v])
                    for (int h = 0; h < lifted.host_side; ++h)
                        g.add_edge(id[v], h);
            Count value = oracle(gadget.pattern, g);
            return (atoms - std::popcount(subset)) % 2 == 0 ? value : Count(-value);
        });
        if (total < 0)
            throw InconsistencyError{"count_T_ell: negative count"};
        return total;
    }

    auto residue_alpha(const MatchingGadget & gadget, const Graph & residue) -> Count
    {
        auto core = gadget.pattern.induced(gadget.complement);
        int c = core.n();
        int missing = gadget.pattern.m() - core.m() - residue.m();
        if (missing < 0 || residue.n() + c != gadget.pattern.n())
            return 0;
        Graph base{c + residue.n()};
        for (auto [u, v] : core.edges())
            base.add_edge(u, v);
        for (auto [u, v] : residue.edges())
            base.add_edge(c + u, c + v);

        std::vector<Edge> slots;
        std::vector<int> rim_index;
        for (int r : gadget.rim) {
            int i = static_cast<int>(
                std::lower_bound(gadget.complement.begin(), gadget.complement.end(), r) - gadget.complement.begin());
            rim_index.push_back(i);
            for (int w = 0; w < residue.n(); ++w)
                slots.emplace_back(i, c + w);
        }
        Count alpha = 0;
        for_each_combination(static_cast<int>(slots.size()), missing, [&](const std::vector<int> & pick) {
            Graph candidate = base;
            std::vector<char> touched(c, 0);
            for (int p : pick) {
                candidate.add_edge(slots[p].first, slots[p].second);
                touched[slots[p].first] = 1;
            }
            bool every_rim = std::all_of(rim_index.begin(), rim_index.end(), [&](int i) { return touched[i]; });
            if (every_rim && is_isomorphic(candidate, gadget.pattern))
                ++alpha;
            return true;
        });
        return alpha;
    }

    auto residue_classes_and_alphas(const MatchingGadget & gadget) -> std::vector<ResidueClass>
    {
        const auto & pattern = gadget.pattern;
        auto core = pattern.induced(gadget.complement);
        std::vector<ResidueClass> classes;
        for_each_combination(pattern.n(), static_cast<int>(gadget.complement.size()), [&](const std::vector<int> & other) {
            auto rest = pattern.induced(complement_of(pattern.n(), other));
            if (! is_bipartite(rest) || pattern.induced(other).m() != core.m()
                || ! has_boundary_isomorphism(pattern, gadget.complement, other))
                return true;
            for (auto & known : classes)
                if (is_isomorphic(known.residue, rest))
                    return true;
            ResidueClass entry;
            std::vector<int> busy;
            for (int v = 0; v < rest.n(); ++v) {
                if (rest.degree(v) == 0)
                    ++entry.isolated;
                else
                    busy.push_back(v);
            }
            entry.pure = rest.induced(busy);
            entry.alpha = residue_alpha(gadget, rest);
            entry.residue = std::move(rest);
            classes.push_back(std::move(entry));
            return true;
        });
        return classes;
    }

    auto count_matchings_via_gadget(const Graph & host, const MatchingGadget & gadget, const SubOracle & oracle,
        unsigned threads) -> Count
    {
        if (! is_bipartite(host))
            throw PreconditionError{"count_matchings_via_gadget: host must be bipartite"};
        int k = gadget.k();
        std::vector<Integer> xs, ys;
        for (int padding = 0; padding <= 2 * k; ++padding) {
            xs.emplace_back(host.n() + padding - 2 * k);
            ys.push_back(count_T_ell(gadget, host, padding, oracle, threads));
        }
        auto coefficients = binomial_basis(interpolate(xs, ys));
        Rational constant = coefficients.empty() ? Rational(0) : coefficients[0];
        Count alpha = residue_alpha(gadget, make_matching(k));
        if (alpha == 0)
            throw InconsistencyError{"count_matchings_via_gadget: matching residue has alpha 0"};
        return to_count(constant / Rational(alpha), "count_matchings_via_gadget");
    }

    auto search_gadget(const Graph & pattern, int k) -> std::optional<MatchingGadget>
    {
        if (k < 0)
            throw PreconditionError{"search_gadget: negative k"};
        auto edges = pattern.edges();
        std::optional<MatchingGadget> found;
        for_each_combination(static_cast<int>(edges.size()), k, [&](const std::vector<int> & pick) {
            std::vector<Edge> matching;
            for (int p : pick)
                matching.push_back(edges[p]);
            if (! is_matching(matching) || ! is_induced_matching(pattern, matching))
                return true;
            if (is_matching_gadget(pattern, matching))
                found = make_gadget(pattern, matching);
            return ! found;
        });
        return found;
    }
}
