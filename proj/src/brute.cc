#include <subcount/brute.hh>
#include <subcount/parallel.hh>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <string>

namespace subcount
{
    namespace
    {
        // Pattern vertices in an order where each vertex has as many earlier
        // neighbors as possible; back[i] lists positions of earlier neighbors.
        struct SearchPlan
        {
            std::vector<int> order;
            std::vector<std::vector<int>> back;
        };

        auto make_plan(const Graph & pattern, bool include_isolated) -> SearchPlan
        {
            SearchPlan plan;
            std::vector<int> position(pattern.n(), -1), placed_neighbors(pattern.n(), 0);
            std::vector<int> pending;
            for (int v = 0; v < pattern.n(); ++v)
                if (include_isolated || pattern.degree(v) > 0)
                    pending.push_back(v);
            while (! pending.empty()) {
                auto best = pending.begin();
                for (auto it = pending.begin(); it != pending.end(); ++it) {
                    auto key = [&](int v) { return std::pair{placed_neighbors[v], pattern.degree(v)}; };
                    if (key(*it) > key(*best))
                        best = it;
                }
                int v = *best;
                pending.erase(best);
                position[v] = static_cast<int>(plan.order.size());
                plan.order.push_back(v);
                std::vector<int> back;
                for (int u : pattern.neighbors(v))
                    if (position[u] != -1 && u != v)
                        back.push_back(position[u]);
                std::sort(back.begin(), back.end());
                plan.back.push_back(std::move(back));
                for (int u : pattern.neighbors(v))
                    ++placed_neighbors[u];
            }
            return plan;
        }

        auto all_vertices(int n) -> std::vector<int>
        {
            std::vector<int> result(n);
            for (int i = 0; i < n; ++i)
                result[i] = i;
            return result;
        }

        struct EmbeddingSearch
        {
            const Graph & host;
            const SearchPlan & plan;
            // Host vertices allowed for each plan position, or empty for "any".
            const std::vector<std::vector<int>> & allowed;
            std::vector<int> image;
            std::vector<char> used;
            std::vector<int> everything;
            std::uint64_t leaves = 0;

            EmbeddingSearch(const Graph & h, const SearchPlan & p, const std::vector<std::vector<int>> & a) :
                host(h), plan(p), allowed(a), image(p.order.size(), -1), used(h.n(), 0), everything(all_vertices(h.n()))
            {
            }

            auto candidates(std::size_t pos) const -> const std::vector<int> &
            {
                if (! plan.back[pos].empty())
                    return host.neighbors(image[plan.back[pos][0]]);
                return allowed[pos].empty() ? everything : allowed[pos];
            }

            auto fits(std::size_t pos, int w) const -> bool
            {
                if (used[w])
                    return false;
                if (! plan.back[pos].empty() && ! allowed[pos].empty()
                    && ! std::binary_search(allowed[pos].begin(), allowed[pos].end(), w))
                    return false;
                for (int b : plan.back[pos])
                    if (! host.adjacent(image[b], w))
                        return false;
                return true;
            }

            auto run(std::size_t pos) -> void
            {
                if (pos == plan.order.size()) {
                    ++leaves;
                    return;
                }
                for (int w : candidates(pos)) {
                    if (! fits(pos, w))
                        continue;
                    image[pos] = w;
                    used[w] = 1;
                    run(pos + 1);
                    used[w] = 0;
                }
            }

            auto run_from(int first) -> void
            {
                if (! fits(0, first))
                    return;
                image[0] = first;
                used[first] = 1;
                run(1);
                used[first] = 0;
            }
        };

        auto count_plan(const Graph & host, const SearchPlan & plan, const std::vector<std::vector<int>> & allowed,
            unsigned threads) -> Count
        {
            if (plan.order.empty())
                return 1;
            const auto & first = allowed[0];
            return parallel_sum(first.size(), threads, [&](std::size_t i) -> Count {
                EmbeddingSearch search{host, plan, allowed};
                search.run_from(first[i]);
                return Count{search.leaves};
            });
        }
    }

    auto count_embeddings(const Graph & pattern, const Graph & host, unsigned threads) -> Count
    {
        auto plan = make_plan(pattern, false);
        int isolated = pattern.n() - static_cast<int>(plan.order.size());
        std::vector<std::vector<int>> allowed(plan.order.size());
        if (! plan.order.empty())
            allowed[0] = all_vertices(host.n());
        Count core = count_plan(host, plan, allowed, threads);
        if (core == 0)
            return 0;
        return core * falling_factorial(host.n() - static_cast<int>(plan.order.size()), isolated);
    }

    auto count_automorphisms(const Graph & pattern) -> Count
    {
        return count_embeddings(pattern, pattern);
    }

    auto count_subgraphs(const Graph & pattern, const Graph & host, unsigned threads) -> Count
    {
        return exact_divide(count_embeddings(pattern, host, threads), count_automorphisms(pattern),
            "count_subgraphs");
    }

    auto count_k_matchings(const Graph & host, int k) -> Count
    {
        if (k < 0)
            throw PreconditionError{"count_k_matchings: negative k"};
        auto edges = host.edges();
        std::vector<char> used(host.n(), 0);
        std::uint64_t total = 0;
        auto rec = [&](auto & self, std::size_t start, int remaining) -> void {
            if (remaining == 0) {
                ++total;
                return;
            }
            for (std::size_t i = start; i + remaining <= edges.size(); ++i) {
                auto [u, v] = edges[i];
                if (used[u] || used[v])
                    continue;
                used[u] = used[v] = 1;
                self(self, i + 1, remaining - 1);
                used[u] = used[v] = 0;
            }
        };
        rec(rec, 0, k);
        return Count{total};
    }

    auto count_colorpreserving_subgraphs(const VertexColoredGraph & pattern, const VertexColoredGraph & host) -> Count
    {
        pattern.validate();
        host.validate();
        if (! pattern.is_colorful())
            throw PreconditionError{"count_colorpreserving_subgraphs: pattern is not colorful"};

        auto plan = make_plan(pattern.graph, false);
        std::vector<std::vector<int>> allowed;
        for (int v : plan.order)
            allowed.push_back(host.vertices_with_color(pattern.color[v]));
        // An empty list would mean "unrestricted" to the search.
        for (auto & list : allowed)
            if (list.empty())
                return 0;
        Count core = count_plan(host.graph, plan, allowed, 1);
        for (int v = 0; v < pattern.n(); ++v)
            if (pattern.graph.degree(v) == 0)
                core *= host.vertices_with_color(pattern.color[v]).size();
        return core;
    }

    auto count_colorful_matchings(const EdgeColoredGraph & host, const std::vector<int> & colors) -> Count
    {
        std::vector<int> wanted = colors;
        std::sort(wanted.begin(), wanted.end());
        if (std::adjacent_find(wanted.begin(), wanted.end()) != wanted.end())
            throw PreconditionError{"count_colorful_matchings: repeated color"};

        std::vector<std::vector<Edge>> classes(wanted.size());
        for (auto & [e, c] : host.color) {
            auto it = std::lower_bound(wanted.begin(), wanted.end(), c);
            if (it != wanted.end() && *it == c)
                classes[it - wanted.begin()].push_back(e);
        }
        std::sort(classes.begin(), classes.end(),
            [](const auto & a, const auto & b) { return a.size() < b.size(); });
        if (! classes.empty() && classes.front().empty())
            return 0;

        std::vector<char> used(host.n(), 0);
        std::uint64_t total = 0;
        auto rec = [&](auto & self, std::size_t depth) -> void {
            if (depth == classes.size()) {
                ++total;
                return;
            }
            for (auto [u, v] : classes[depth]) {
                if (used[u] || used[v])
                    continue;
                used[u] = used[v] = 1;
                self(self, depth + 1);
                used[u] = used[v] = 0;
            }
        };
        rec(rec, 0);
        return Count{total};
    }

    namespace
    {
        template <typename Next, typename Back>
        auto distances_to(int n, int target, int floor, Next, Back back) -> std::vector<int>
        {
            std::vector<int> dist(n, std::numeric_limits<int>::max());
            dist[target] = 0;
            std::deque<int> queue{target};
            while (! queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                for (int u : back(v))
                    if (u >= floor && dist[u] == std::numeric_limits<int>::max()) {
                        dist[u] = dist[v] + 1;
                        queue.push_back(u);
                    }
            }
            return dist;
        }

        // Cycles through `start` using only vertices >= start, closing via closes(v).
        template <typename Next, typename Closes>
        auto cycles_from(int n, int start, int k, Next next, Closes closes, const std::vector<int> & dist)
            -> std::uint64_t
        {
            std::vector<char> used(n, 0);
            used[start] = 1;
            std::uint64_t total = 0;
            auto rec = [&](auto & self, int v, int depth) -> void {
                if (depth == k - 1) {
                    if (closes(v))
                        ++total;
                    return;
                }
                for (int u : next(v)) {
                    if (u <= start || used[u] || dist[u] > k - depth - 1)
                        continue;
                    used[u] = 1;
                    self(self, u, depth + 1);
                    used[u] = 0;
                }
            };
            rec(rec, start, 0);
            return total;
        }

        template <typename Next>
        auto paths_from(int n, int start, int k, Next next) -> std::uint64_t
        {
            std::vector<char> used(n, 0);
            used[start] = 1;
            std::uint64_t total = 0;
            auto rec = [&](auto & self, int v, int depth) -> void {
                if (depth == k) {
                    ++total;
                    return;
                }
                for (int u : next(v)) {
                    if (used[u])
                        continue;
                    used[u] = 1;
                    self(self, u, depth + 1);
                    used[u] = 0;
                }
            };
            rec(rec, start, 0);
            return total;
        }
    }

    auto count_walk_patterns(const Graph & host, WalkKind kind, int k) -> Count
    {
        auto nbrs = [&](int v) -> const std::vector<int> & { return host.neighbors(v); };
        std::uint64_t total = 0;
        if (kind == WalkKind::cycle) {
            if (k < 3)
                throw PreconditionError{"undirected cycles need length >= 3, got " + std::to_string(k)};
            for (int s = 0; s < host.n(); ++s) {
                auto dist = distances_to(host.n(), s, s, nbrs, nbrs);
                total += cycles_from(host.n(), s, k, nbrs, [&](int v) { return host.adjacent(v, s); }, dist);
            }
            return Count{total / 2};
        }
        if (k < 1)
            throw PreconditionError{"paths need length >= 1, got " + std::to_string(k)};
        for (int s = 0; s < host.n(); ++s)
            total += paths_from(host.n(), s, k, nbrs);
        return Count{total / 2};
    }

    auto count_walk_patterns(const DirectedGraph & host, WalkKind kind, int k) -> Count
    {
        auto out = [&](int v) -> const std::vector<int> & { return host.out(v); };
        auto in = [&](int v) -> const std::vector<int> & { return host.in(v); };
        std::uint64_t total = 0;
        if (kind == WalkKind::cycle) {
            if (k < 2)
                throw PreconditionError{"directed cycles need length >= 2, got " + std::to_string(k)};
            for (int s = 0; s < host.n(); ++s) {
                auto dist = distances_to(host.n(), s, s, out, in);
                total += cycles_from(host.n(), s, k, out, [&](int v) { return host.has_arc(v, s); }, dist);
            }
            return Count{total};
        }
        if (k < 1)
            throw PreconditionError{"paths need length >= 1, got " + std::to_string(k)};
        for (int s = 0; s < host.n(); ++s)
            total += paths_from(host.n(), s, k, out);
        return Count{total};
    }

    auto for_each_isomorphism(const Graph & a, const Graph & b,
        const std::function<bool(const std::vector<int> &)> & visit, const std::vector<int> & label_a,
        const std::vector<int> & label_b) -> void
    {
        if (a.n() != b.n() || a.m() != b.m())
            return;
        bool labelled = ! label_a.empty() || ! label_b.empty();
        if (labelled && (static_cast<int>(label_a.size()) != a.n() || static_cast<int>(label_b.size()) != b.n()))
            throw PreconditionError{"for_each_isomorphism: label vectors must cover every vertex"};
        auto label = [&](const std::vector<int> & l, int v) { return labelled ? l[v] : 0; };
        std::vector<std::pair<int, int>> da, db;
        for (int v = 0; v < a.n(); ++v) {
            da.emplace_back(a.degree(v), label(label_a, v));
            db.emplace_back(b.degree(v), label(label_b, v));
        }
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db)
            return;

        auto plan = make_plan(a, true);
        std::vector<int> image(a.n(), -1);
        std::vector<char> used(b.n(), 0);
        bool stop = false;
        auto rec = [&](auto & self, std::size_t pos) -> void {
            if (stop)
                return;
            if (pos == plan.order.size()) {
                if (! visit(image))
                    stop = true;
                return;
            }
            int v = plan.order[pos];
            for (int w = 0; w < b.n() && ! stop; ++w) {
                if (used[w] || b.degree(w) != a.degree(v) || label(label_b, w) != label(label_a, v))
                    continue;
                bool ok = true;
                for (std::size_t p = 0; p < pos && ok; ++p)
                    ok = a.adjacent(v, plan.order[p]) == b.adjacent(w, image[plan.order[p]]);
                if (! ok)
                    continue;
                image[v] = w;
                used[w] = 1;
                self(self, pos + 1);
                used[w] = 0;
                image[v] = -1;
            }
        };
        rec(rec, 0);
    }

    auto is_isomorphic(const Graph & a, const Graph & b) -> bool
    {
        bool found = false;
        for_each_isomorphism(a, b, [&](const std::vector<int> &) {
            found = true;
            return false;
        });
        return found;
    }
}
