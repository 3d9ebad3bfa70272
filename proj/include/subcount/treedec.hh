#pragma once

#include <subcount/graph.hh>

#include <optional>
#include <string>
#include <vector>

namespace subcount
{
    // Rooted tree on nodes [0, size); parent[root] == -1. Bags are sorted.
    struct TreeDecomposition
    {
        std::vector<int> parent;
        std::vector<std::vector<int>> bags;
        int root = 0;

        auto size() const -> int { return static_cast<int>(bags.size()); }
        auto width() const -> int;
    };

    // Empty when td is a valid rooted tree decomposition of graph, else the
    // first failed condition.
    auto validate(const Graph & graph, const TreeDecomposition & td) -> std::optional<std::string>;

    // Decomposition from eliminating vertices in the given order.
    auto decomposition_from_order(const Graph & graph, const std::vector<int> & order) -> TreeDecomposition;

    // Optimal decomposition by dynamic programming over vertex subsets.
    inline constexpr int treewidth_exact_limit = 16;
    auto treewidth_exact(const Graph & graph) -> TreeDecomposition;

    struct NiceMatchingAudit
    {
        int iterations = 0;
        int case_one = 0;
        int case_two = 0;
    };

    // Induced k-matching whose endpoints all have psi <= 2(w + 1), built by
    // the bottom-up node-marking scheme. The three loop invariants are
    // checked every iteration (InconsistencyError on failure). Empty when
    // the vertex cover number is too small for the scheme to finish.
    auto nice_matching(const Graph & graph, const TreeDecomposition & td, int k, NiceMatchingAudit * audit = nullptr)
        -> std::optional<std::vector<Edge>>;
}
