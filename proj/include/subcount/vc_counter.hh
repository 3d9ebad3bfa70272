#pragma once

#include <subcount/graph.hh>

#include <map>
#include <vector>

namespace subcount
{
    // Pattern split into a minimum vertex cover and the independent rest,
    // grouped by neighborhood inside the cover (bitmask over cover positions).
    struct DegreeClassProfile
    {
        std::vector<int> cover;
        std::vector<Edge> cover_edges; // pairs of cover positions
        std::map<unsigned, int> classes;
    };

    auto degree_class_profile(const Graph & pattern) -> DegreeClassProfile;

    // Bipartite transport instance: left nodes carry host supplies, right nodes
    // pattern demands, and arc (l, r) exists when right.mask is a subset of left.mask.
    struct FlowInstance
    {
        struct Node
        {
            unsigned mask;
            int size;
        };
        std::vector<Node> left, right;
        std::vector<std::pair<int, int>> arcs;
    };

    // Left nodes are the masks with nonzero supply, right nodes the pattern classes.
    auto make_flow_instance(const DegreeClassProfile & profile, const std::map<unsigned, int> & supplies)
        -> FlowInstance;

    // Every h over arcs meeting each demand exactly. Supplies are not capped.
    auto enumerate_flows(const FlowInstance & instance) -> std::vector<std::vector<int>>;

    // Number of ways to place the labelled non-cover vertices, summed over flows.
    auto count_flow_extensions(const FlowInstance & instance) -> Count;

    // Embeddings extending the cover assignment c_i -> tuple[i]; zero for
    // tuples with a repeated vertex.
    auto count_tuple_extensions(const DegreeClassProfile & profile, const Graph & host, const std::vector<int> & tuple)
        -> Count;

    auto count_emb_vc(const Graph & pattern, const Graph & host, unsigned threads = 1) -> Count;
    auto count_sub_vc(const Graph & pattern, const Graph & host, unsigned threads = 1) -> Count;
}
