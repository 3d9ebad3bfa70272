#pragma once

#include <subcount/graph.hh>

#include <memory>
#include <vector>

namespace subcount
{
    // Colorful-matching counter for hosts where a few "branch" colors tie
    // together many small components of the remaining colors, as in the
    // six-cycle construction. Branch-colored matchings are enumerated once;
    // the rest is factored per group of colors sharing components, and
    // repeated queries on the same host reuse all of it. Queries whose color
    // set misses a branch color, or hosts with a group of more than 12 colors,
    // go to the plain brancher.
    //
    // Copies share state, so the object can be passed by value as an oracle.
    // Calls are serialized internally.
    class FactoredColmatchCounter
    {
    public:
        explicit FactoredColmatchCounter(std::vector<int> branch_colors);

        auto operator()(const EdgeColoredGraph & host, const std::vector<int> & colors) -> Count;

        auto queries() const -> std::size_t;
        auto fallbacks() const -> std::size_t;

    private:
        struct State;
        std::shared_ptr<State> _state;
    };
}
