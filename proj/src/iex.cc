#include <subcount/iex.hh>
#include <subcount/parallel.hh>

#include <algorithm>
#include <bit>
#include <set>

namespace subcount
{
    namespace
    {
        auto pattern_colors(const VertexColoredGraph & pattern) -> std::vector<int>
        {
            pattern.validate();
            if (! pattern.is_colorful())
                throw PreconditionError{"pattern is not vertex-colorful"};
            std::vector<int> colors = pattern.color;
            std::sort(colors.begin(), colors.end());
            return colors;
        }

        auto check_subset_count(std::size_t size) -> void
        {
            if (size > 24)
                throw PreconditionError{"inclusion-exclusion over more than 24 colors"};
        }

        auto signed_term(std::size_t universe, unsigned subset) -> int
        {
            return (universe - std::popcount(subset)) % 2 == 0 ? 1 : -1;
        }
    }

    auto prune_useless_edges(const VertexColoredGraph & pattern, const VertexColoredGraph & host) -> VertexColoredGraph
    {
        auto colors = pattern_colors(pattern);
        host.validate();
        std::set<std::pair<int, int>> allowed;
        for (auto [u, v] : pattern.graph.edges()) {
            int a = pattern.color[u], b = pattern.color[v];
            allowed.emplace(std::min(a, b), std::max(a, b));
        }
        auto kept = host.restricted_to_colors(colors);
        VertexColoredGraph result{Graph{kept.n()}, kept.color};
        for (auto [u, v] : kept.graph.edges()) {
            int a = kept.color[u], b = kept.color[v];
            if (allowed.contains({std::min(a, b), std::max(a, b)}))
                result.graph.add_edge(u, v);
        }
        return result;
    }

    auto subpart_via_sub_oracle(const VertexColoredGraph & pattern, const VertexColoredGraph & host,
        const SubOracle & oracle, unsigned threads) -> Count
    {
        auto colors = pattern_colors(pattern);
        check_subset_count(colors.size());
        auto pruned = prune_useless_edges(pattern, host);
        Count total = parallel_sum(std::size_t{1} << colors.size(), threads, [&](std::size_t subset) -> Count {
            std::vector<int> chosen;
            for (std::size_t i = 0; i < colors.size(); ++i)
                if ((subset >> i) & 1U)
                    chosen.push_back(colors[i]);
            auto part = pruned.restricted_to_colors(chosen);
            return signed_term(colors.size(), static_cast<unsigned>(subset)) * oracle(pattern.graph, part.graph);
        });
        if (total < 0)
            throw InconsistencyError{"subpart_via_sub_oracle: negative total " + to_string(total)};
        return total;
    }

    auto colmatch_via_match_oracle(const EdgeColoredGraph & host, const std::vector<int> & colors,
        const MatchOracle & oracle, unsigned threads) -> Count
    {
        std::vector<int> sorted = colors;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw PreconditionError{"colmatch_via_match_oracle: repeated color"};
        check_subset_count(sorted.size());
        int k = static_cast<int>(sorted.size());
        Count total = parallel_sum(std::size_t{1} << sorted.size(), threads, [&](std::size_t subset) -> Count {
            std::vector<int> chosen;
            for (std::size_t i = 0; i < sorted.size(); ++i)
                if ((subset >> i) & 1U)
                    chosen.push_back(sorted[i]);
            return signed_term(sorted.size(), static_cast<unsigned>(subset)) * oracle(host.restricted_to_colors(chosen), k);
        });
        if (total < 0)
            throw InconsistencyError{"colmatch_via_match_oracle: negative total " + to_string(total)};
        return total;
    }
}
