#include "oracles.hh"

#include <subcount/structural.hh>
#include <subcount/treedec.hh>

#include <doctest.h>

using namespace subcount;

namespace
{
    auto subdivided_star(int legs) -> Graph
    {
        Graph g(1 + 2 * legs);
        for (int i = 0; i < legs; ++i) {
            g.add_edge(0, 1 + 2 * i);
            g.add_edge(1 + 2 * i, 2 + 2 * i);
        }
        return g;
    }
}

TEST_CASE("psi examples")
{
    CHECK(psi(subdivided_star(3), 0) == 3);
    CHECK(psi(make_star(3), 0) == 0);
    for (int v = 0; v < 6; ++v)
        CHECK(psi(make_cycle(6), v) == 2);
    // a middle vertex that is also a neighbor's endpoint
    CHECK(psi(make_complete(4), 0) == 1);
}

TEST_CASE("psi agrees with exhaustive search")
{
    oracle::Random rng{81};
    for (int trial = 0; trial < 200; ++trial) {
        auto g = rng.graph(rng.between(1, 9), rng.chance(0.5) ? 0.25 : 0.5);
        for (int v = 0; v < g.n(); ++v)
            CHECK(psi(g, v) == oracle::psi(g, v));
        CHECK(starneighbor_violations(g).empty());
    }
}

TEST_CASE("ramsey chain")
{
    EdgeColoring one{7, 1};
    auto first = ramsey_monochromatic_clique(one, 4);
    REQUIRE(first);
    CHECK(*first == std::vector<int>{0, 1, 2, 3});

    // every 2-coloring of K6 has a monochromatic triangle
    int pairs = 15;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
        EdgeColoring c{6, 2};
        int bit = 0;
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                c.set(u, v, (mask >> bit++) & 1);
        auto found = ramsey_monochromatic_clique(c, 3);
        REQUIRE(found);
        auto & t = *found;
        CHECK(c.color(t[0], t[1]) == c.color(t[0], t[2]));
        CHECK(c.color(t[0], t[1]) == c.color(t[1], t[2]));
    }

    // K5 with the pentagon coloring has none
    EdgeColoring pentagon{5, 2};
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            pentagon.set(u, v, (v - u == 1 || v - u == 4) ? 0 : 1);
    CHECK_FALSE(ramsey_monochromatic_clique(pentagon, 3));
}

TEST_CASE("ramsey threshold succeeds")
{
    oracle::Random rng{82};
    // (r + 1)^(r c) with r = 2, c = 2
    for (int trial = 0; trial < 20; ++trial) {
        EdgeColoring c{81, 2};
        for (int u = 0; u < 81; ++u)
            for (int v = u + 1; v < 81; ++v)
                c.set(u, v, rng.below(2));
        auto found = ramsey_monochromatic_clique(c, 2);
        REQUIRE(found);
        CHECK(found->size() == 2);
    }
}

TEST_CASE("extraction examples")
{
    auto clique = extract_clique_biclique_or_matching(make_complete(24), 3);
    REQUIRE(clique);
    CHECK(clique->kind == ExtractionKind::clique);
    CHECK(verify_extraction(make_complete(24), 3, *clique));

    auto matching = extract_clique_biclique_or_matching(make_matching(20), 3);
    REQUIRE(matching);
    CHECK(matching->kind == ExtractionKind::induced_matching);

    auto knn = make_complete_bipartite(20, 20);
    auto bi = extract_clique_biclique_or_matching(knn, 3);
    REQUIRE(bi);
    CHECK(bi->kind == ExtractionKind::biclique);
    CHECK(verify_extraction(knn, 3, *bi));

    Extraction bogus{ExtractionKind::clique, {0, 1, 2}, {}, {}, {}};
    CHECK_FALSE(verify_extraction(make_path(3), 3, bogus));
}

TEST_CASE("greedy induced matchings")
{
    auto p = make_path(2);
    CHECK(greedy_induced_matching(p, {{0, 1}}, MatchingMode::induced) == std::vector<Edge>{{0, 1}});
    auto m = make_matching(5);
    CHECK(greedy_induced_matching(m, m.edges(), MatchingMode::separated) == m.edges());

    oracle::Random rng{83};
    for (int trial = 0; trial < 100; ++trial) {
        Graph g(rng.between(2, 14));
        for (int tries = 0; tries < 3 * g.n(); ++tries) {
            int u = rng.below(g.n()), v = rng.below(g.n());
            if (u != v && g.degree(u) < 3 && g.degree(v) < 3)
                g.try_add_edge(u, v);
        }
        auto f = g.edges();
        if (f.empty())
            continue;
        long long d = std::max(1, g.max_degree());
        auto induced = greedy_induced_matching(g, f, MatchingMode::induced);
        CHECK(is_induced_matching(g, induced));
        CHECK(static_cast<long long>(induced.size()) * 2 * d * d >= static_cast<long long>(f.size()));
        auto separated = greedy_induced_matching(g, f, MatchingMode::separated);
        CHECK(is_separated_matching(g, separated));
        CHECK(static_cast<long long>(separated.size()) * 2 * d * d * d >= static_cast<long long>(f.size()));
    }
}

TEST_CASE("matching separated by stars")
{
    auto m = make_matching(6);
    auto all = induced_matching_separated_by_stars(m, m.edges(), 0, 4);
    REQUIRE(all);
    CHECK(all->size() == 4);

    // path 0-1-2-3-4-5-6-7-8-9-10: edges 0-1, 3-4, 6-7, 9-10 are induced but
    // consecutive ones share a neighbor
    auto path = make_path(11);
    std::vector<Edge> close{{0, 1}, {3, 4}, {6, 7}, {9, 10}};
    auto thinned = induced_matching_separated_by_stars(path, close, 2, 2);
    REQUIRE(thinned);
    CHECK(*thinned == std::vector<Edge>{{0, 1}, {6, 7}});
    CHECK(is_separated_matching(path, *thinned));
    CHECK_FALSE(induced_matching_separated_by_stars(path, close, 2, 3));
}

TEST_CASE("degree gap")
{
    auto m = make_matching(4);
    auto flat = degree_gap_filter(m, m.edges(), 2, 3, 0);
    CHECK(flat.kept == m.edges());
    CHECK(flat.gap_start == 2);

    // Two matching edges next to a vertex of degree 5, two others next to
    // a vertex of degree 8. L = 1: windows of width 1 start at 4.
    Graph g(4 * 2 + 2 + 20);
    int next = 10;
    for (int i = 0; i < 4; ++i)
        g.add_edge(2 * i, 2 * i + 1);
    g.add_edge(8, 0);
    g.add_edge(8, 2);
    while (g.degree(8) < 5)
        g.add_edge(8, next++);
    g.add_edge(9, 4);
    g.add_edge(9, 6);
    while (g.degree(9) < 8)
        g.add_edge(9, next++);
    REQUIRE(max_psi(g) <= 2);
    auto gap = degree_gap_filter(g, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}, 6, 1, 2);
    CHECK(gap.gap_start == 6);
    CHECK(gap.kept.size() == 4);
    // degree 8 is touched twice: fine for four edges, too often for three
    auto half = degree_gap_filter(g, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}, 8, 1, 3);
    CHECK(half.gap_start == 8);
    CHECK(half.kept == std::vector<Edge>{{0, 1}, {2, 3}});
    auto skip = degree_gap_filter(g, {{2, 3}, {4, 5}, {6, 7}}, 8, 1, 3);
    CHECK(skip.gap_start == 9);
    CHECK(skip.kept.size() == 3);
    CHECK_THROWS_AS(degree_gap_filter(g, g.edges(), 8, 1, 3), PreconditionError);
}

TEST_CASE("subcollections")
{
    std::vector<std::vector<int>> disjoint{{0}, {1}, {2}, {3}};
    CHECK(select_subcollection(disjoint, 2, 1, 1) == std::vector<int>{0, 1});
    CHECK(select_subcollection(disjoint, 1, 3, 1).size() == 1);
    CHECK_THROWS_AS(select_subcollection(disjoint, 3, 1, 1), PreconditionError);

    oracle::Random rng{84};
    for (int trial = 0; trial < 100; ++trial) {
        int k = rng.between(1, 3), z = rng.between(1, 3), r = rng.between(1, 3);
        int count = (1 + z * r) * k + rng.below(4);
        std::vector<std::vector<int>> sets(count);
        for (auto & s : sets)
            for (int i = rng.between(1, r); i > 0; --i)
                s.push_back(rng.below(5));
        auto chosen = select_subcollection(sets, k, z, r);
        REQUIRE(static_cast<int>(chosen.size()) == k);
        for (int x = 0; x < 5; ++x) {
            int inside = 0, outside = 0;
            for (int i = 0; i < count; ++i) {
                bool has = std::find(sets[i].begin(), sets[i].end(), x) != sets[i].end();
                bool picked = std::find(chosen.begin(), chosen.end(), i) != chosen.end();
                (picked ? inside : outside) += has;
            }
            CHECK((inside <= 1 || outside >= z));
        }
    }
}

TEST_CASE("tree decompositions")
{
    auto path = make_path(6);
    auto td = decomposition_from_order(path, {0, 1, 2, 3, 4, 5});
    CHECK_FALSE(validate(path, td));
    CHECK(td.width() == 1);
    CHECK(treewidth_exact(make_complete(5)).width() == 4);
    CHECK(treewidth_exact(make_cycle(7)).width() == 2);
    CHECK(treewidth_exact(make_complete_bipartite(3, 3)).width() == 3);

    auto broken = td;
    broken.bags[2] = {2};
    CHECK(validate(path, broken));

    oracle::Random rng{85};
    for (int trial = 0; trial < 60; ++trial) {
        auto g = rng.graph(rng.between(1, 10), 0.35);
        auto best = treewidth_exact(g);
        CHECK_FALSE(validate(g, best));
        auto any = decomposition_from_order(g, rng.permutation(g.n()));
        CHECK_FALSE(validate(g, any));
        CHECK(best.width() <= any.width());
    }
}

TEST_CASE("nice matchings")
{
    auto path = make_path(40);
    std::vector<int> order(40);
    std::iota(order.begin(), order.end(), 0);
    auto td = decomposition_from_order(path, order);
    NiceMatchingAudit audit;
    auto m = nice_matching(path, td, 2, &audit);
    REQUIRE(m);
    CHECK(m->size() == 2);
    CHECK(is_induced_matching(path, *m));
    CHECK(audit.iterations >= 1);

    auto mm = make_matching(5);
    auto trivial = decomposition_from_order(mm, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    auto any = nice_matching(mm, trivial, 3);
    REQUIRE(any);
    CHECK(is_induced_matching(mm, *any));

    CHECK_FALSE(nice_matching(make_star(6), decomposition_from_order(make_star(6), {1, 2, 3, 4, 5, 6, 0}), 2));
}
