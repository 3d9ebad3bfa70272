#pragma once

#include <subcount/graph.hh>

#include <functional>
#include <vector>

namespace subcount
{
    // Oracles may be called from several threads at once when threads > 1.
    using SubOracle = std::function<Count(const Graph & pattern, const Graph & host)>;
    using MatchOracle = std::function<Count(const Graph & host, int k)>;

    // Drops host edges whose color pair is not an edge of the colorful pattern,
    // and host vertices whose color the pattern does not use.
    auto prune_useless_edges(const VertexColoredGraph & pattern, const VertexColoredGraph & host) -> VertexColoredGraph;

    // Color-preserving copies via uncolored subgraph counts on color-induced
    // subgraphs: sum over S of (-1)^{|colors \ S|} oracle(H, G[V_S]).
    auto subpart_via_sub_oracle(const VertexColoredGraph & pattern, const VertexColoredGraph & host,
        const SubOracle & oracle, unsigned threads = 1) -> Count;

    // Colorful matchings via uncolored |X|-matching counts on E_S for S within X.
    auto colmatch_via_match_oracle(const EdgeColoredGraph & host, const std::vector<int> & colors,
        const MatchOracle & oracle, unsigned threads = 1) -> Count;
}
