#include "oracles.hh"

#include <subcount/brute.hh>
#include <subcount/vc_counter.hh>

#include <doctest.h>

using namespace subcount;

TEST_CASE("cover-based embedding examples")
{
    CHECK(count_emb_vc(make_star(3), make_complete(4)) == 24);
    CHECK(count_emb_vc(make_matching(2), make_cycle(5)) == 40);
    CHECK(count_emb_vc(make_matching(1), make_complete(3)) == 6);
    CHECK(count_sub_vc(make_star(3), make_complete(4)) == 4);
    CHECK(count_sub_vc(make_matching(2), make_cycle(5)) == 5);
    CHECK(count_sub_vc(make_matching(1), make_matching(1)) == 1);
}

TEST_CASE("flow enumeration examples")
{
    using Node = FlowInstance::Node;
    FlowInstance single;
    single.left = {Node{1, 2}};
    single.right = {Node{1, 2}};
    single.arcs = {{0, 0}};
    auto flows = enumerate_flows(single);
    REQUIRE(flows.size() == 1);
    CHECK(flows[0] == std::vector<int>{2});

    FlowInstance blocked;
    blocked.left = {Node{1, 2}};
    blocked.right = {Node{2, 2}};
    CHECK(enumerate_flows(blocked).empty());

    FlowInstance split;
    split.left = {Node{1, 2}, Node{3, 2}};
    split.right = {Node{1, 2}};
    split.arcs = {{0, 0}, {1, 0}};
    auto three = enumerate_flows(split);
    std::sort(three.begin(), three.end());
    CHECK(three == std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("degree class profile")
{
    auto profile = degree_class_profile(make_star(3));
    CHECK(profile.cover.size() == 1);
    REQUIRE(profile.classes.size() == 1);
    CHECK(profile.classes.begin()->second == 3);
}

TEST_CASE("cover-based counter agrees with naive oracle")
{
    oracle::Random rng{31};
    for (int trial = 0; trial < 120; ++trial) {
        Graph pattern;
        do
            pattern = rng.graph(rng.between(1, 6), 0.4);
        while (oracle::vertex_cover_number(pattern) > 3);
        auto host = rng.graph(rng.between(1, 9), rng.chance(0.5) ? 0.3 : 0.7);
        CHECK(count_emb_vc(pattern, host) == oracle::embeddings(pattern, host));
        CHECK(count_sub_vc(pattern, host) == oracle::subgraphs(pattern, host));
    }
}

TEST_CASE("thread count does not change the result")
{
    oracle::Random rng{32};
    auto host = rng.graph(11, 0.5);
    CHECK(count_sub_vc(make_cycle(5), host, 1) == count_sub_vc(make_cycle(5), host, 4));
}
