#pragma once

#include <subcount/graph.hh>
#include <subcount/iex.hh>

#include <optional>
#include <vector>

namespace subcount
{
    // Vertices of `subset` with a neighbor outside it.
    auto boundary(const Graph & graph, const std::vector<int> & subset) -> std::vector<int>;

    struct MatchingGadget
    {
        Graph pattern;
        std::vector<Edge> matching;
        std::vector<int> complement; // sorted
        std::vector<int> rim;        // boundary of the complement, sorted

        auto k() const -> int { return static_cast<int>(matching.size()); }
    };

    // Rejects a matching that is not induced.
    auto make_gadget(const Graph & pattern, const std::vector<Edge> & matching) -> MatchingGadget;

    // One candidate replacement C' for the complement C.
    struct CandidateReport
    {
        std::vector<int> replacement;
        bool no_isolated = false;        // H - C' has no isolated vertex
        bool bipartite = false;          // H - C' is bipartite
        bool boundary_isomorphic = false; // some isomorphism H[C] -> H[C'] maps boundary onto boundary
        bool is_matching = false;        // H - C' is a k-matching
    };

    struct GadgetVerdict
    {
        bool is_gadget = true;
        std::optional<std::vector<int>> counterexample;
        std::vector<CandidateReport> candidates; // every C' of the right size with H[C'] ~ H[C]
    };

    // Exhaustive check over all C' of size |C|. The conclusion depends only on
    // C', so one boundary-preserving isomorphism per C' decides it.
    auto check_matching_gadget(const Graph & pattern, const std::vector<Edge> & matching) -> GadgetVerdict;
    auto is_matching_gadget(const Graph & pattern, const std::vector<Edge> & matching) -> bool;

    // Every complement vertex sees at most one matched vertex.
    auto nocommon_sufficient(const Graph & pattern, const std::vector<Edge> & matching) -> bool;

    auto restrict_gadget(const MatchingGadget & gadget, const std::vector<Edge> & sub_matching) -> MatchingGadget;

    // Every boundary-preserving isomorphism from H[C] onto any H[C'] maps `fixed` onto itself.
    auto is_strong_set(const Graph & pattern, const std::vector<int> & complement, const std::vector<int> & fixed)
        -> bool;

    // Host plus padding, a copy of H[C], and the complete join between the
    // copied boundary and all host-side vertices.
    struct LiftedInstance
    {
        Graph graph;
        int host_side = 0;                   // vertices [0, host_side) are the host plus padding
        std::vector<int> complement_copy;    // copy of complement[i]
        std::vector<int> boundary_copy;      // copies of the rim, sorted
    };

    auto build_G_ell(const MatchingGadget & gadget, const Graph & host, int padding) -> LiftedInstance;

    // Copies of H in the lifted instance that contain the whole H[C] copy and
    // give every copied boundary vertex a join edge.
    auto count_T_ell(const MatchingGadget & gadget, const Graph & host, int padding, const SubOracle & oracle,
        unsigned threads = 1) -> Count;

    struct ResidueClass
    {
        Graph residue;           // H - C' on 2k vertices
        int isolated = 0;        // its isolated vertices
        Graph pure;              // residue without them
        Count alpha;
    };

    // Ways to join the boundary of a copy of H[C] to the vertices of R, with
    // every boundary vertex receiving an edge, so the result is isomorphic to H.
    auto residue_alpha(const MatchingGadget & gadget, const Graph & residue) -> Count;

    // Residues H - C' over C' admitting a boundary-preserving isomorphism with
    // H - C' bipartite, up to isomorphism, with their alphas.
    auto residue_classes_and_alphas(const MatchingGadget & gadget) -> std::vector<ResidueClass>;

    // k-matchings of a bipartite host from 2k + 1 evaluations of count_T_ell.
    auto count_matchings_via_gadget(const Graph & host, const MatchingGadget & gadget, const SubOracle & oracle,
        unsigned threads = 1) -> Count;

    // First induced k-matching (edge combinations in lexicographic order) that makes a gadget.
    auto search_gadget(const Graph & pattern, int k) -> std::optional<MatchingGadget>;
}
