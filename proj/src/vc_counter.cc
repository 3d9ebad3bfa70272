#include <subcount/parallel.hh>
#include <subcount/vc_counter.hh>

#include <algorithm>

namespace subcount
{
    auto degree_class_profile(const Graph & pattern) -> DegreeClassProfile
    {
        DegreeClassProfile profile;
        profile.cover = min_vertex_cover(pattern).vertices;
        std::vector<int> position(pattern.n(), -1);
        for (std::size_t i = 0; i < profile.cover.size(); ++i)
            position[profile.cover[i]] = static_cast<int>(i);
        for (auto [u, v] : pattern.edges())
            if (position[u] != -1 && position[v] != -1)
                profile.cover_edges.emplace_back(position[u], position[v]);
        for (int v = 0; v < pattern.n(); ++v) {
            if (position[v] != -1)
                continue;
            unsigned mask = 0;
            for (int u : pattern.neighbors(v))
                mask |= 1U << position[u];
            ++profile.classes[mask];
        }
        return profile;
    }

    auto make_flow_instance(const DegreeClassProfile & profile, const std::map<unsigned, int> & supplies)
        -> FlowInstance
    {
        FlowInstance instance;
        for (auto [mask, size] : supplies)
            if (size > 0)
                instance.left.push_back({mask, size});
        for (auto [mask, size] : profile.classes)
            instance.right.push_back({mask, size});
        for (std::size_t r = 0; r < instance.right.size(); ++r)
            for (std::size_t l = 0; l < instance.left.size(); ++l)
                if ((instance.right[r].mask & ~instance.left[l].mask) == 0)
                    instance.arcs.emplace_back(static_cast<int>(l), static_cast<int>(r));
        return instance;
    }

    namespace
    {
        // Distributes each right node's demand over its arcs in turn. Arcs are
        // grouped by right node in make_flow_instance order, but any order works.
        template <typename Visit>
        auto for_each_flow(const FlowInstance & instance, bool cap_supplies, Visit visit) -> void
        {
            std::vector<std::vector<int>> arcs_of(instance.right.size());
            for (std::size_t a = 0; a < instance.arcs.size(); ++a)
                arcs_of[instance.arcs[a].second].push_back(static_cast<int>(a));

            std::vector<int> flow(instance.arcs.size(), 0), used(instance.left.size(), 0);
            auto rec = [&](auto & self, std::size_t right, std::size_t slot, int remaining) -> void {
                if (right == instance.right.size()) {
                    visit(flow, used);
                    return;
                }
                const auto & arcs = arcs_of[right];
                if (slot == arcs.size()) {
                    if (remaining == 0)
                        self(self, right + 1, 0,
                            right + 1 < instance.right.size() ? instance.right[right + 1].size : 0);
                    return;
                }
                int arc = arcs[slot];
                int left = instance.arcs[arc].first;
                int most = remaining;
                if (cap_supplies)
                    most = std::min(most, instance.left[left].size - used[left]);
                int least = slot + 1 == arcs.size() ? remaining : 0;
                for (int h = least; h <= most; ++h) {
                    flow[arc] = h;
                    used[left] += h;
                    self(self, right, slot + 1, remaining - h);
                    used[left] -= h;
                }
                flow[arc] = 0;
            };
            if (instance.right.empty())
                visit(flow, used);
            else
                rec(rec, 0, 0, instance.right[0].size);
        }
    }

    auto enumerate_flows(const FlowInstance & instance) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> result;
        for_each_flow(instance, false, [&](const std::vector<int> & flow, const std::vector<int> &) {
            result.push_back(flow);
        });
        return result;
    }

    auto count_flow_extensions(const FlowInstance & instance) -> Count
    {
        // Per flow: each right class X splits its labelled vertices among the
        // left nodes (multinomial), then each left node Y picks an ordered
        // sequence of distinct host vertices for everything routed to it.
        Count numerator_base = 1;
        for (auto & node : instance.right)
            numerator_base *= factorial(node.size);
        Count total = 0;
        for_each_flow(instance, true, [&](const std::vector<int> & flow, const std::vector<int> & used) {
            Count term = numerator_base;
            Count denominator = 1;
            for (int h : flow)
                denominator *= factorial(h);
            for (std::size_t l = 0; l < instance.left.size(); ++l)
                term *= falling_factorial(instance.left[l].size, used[l]);
            total += term / denominator;
        });
        return total;
    }

    namespace
    {
        auto supplies_for(const Graph & host, const std::vector<int> & tuple) -> std::map<unsigned, int>
        {
            std::vector<unsigned> mask(host.n(), 0);
            std::vector<char> in_tuple(host.n(), 0);
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                in_tuple[tuple[i]] = 1;
                for (int v : host.neighbors(tuple[i]))
                    mask[v] |= 1U << i;
            }
            std::map<unsigned, int> supplies;
            for (int v = 0; v < host.n(); ++v)
                if (! in_tuple[v])
                    ++supplies[mask[v]];
            return supplies;
        }
    }

    auto count_tuple_extensions(const DegreeClassProfile & profile, const Graph & host, const std::vector<int> & tuple)
        -> Count
    {
        if (tuple.size() != profile.cover.size())
            throw PreconditionError{"count_tuple_extensions: tuple length differs from cover size"};
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (tuple[i] < 0 || tuple[i] >= host.n())
                throw PreconditionError{"count_tuple_extensions: vertex out of range"};
            for (std::size_t j = 0; j < i; ++j)
                if (tuple[i] == tuple[j])
                    return 0;
        }
        for (auto [a, b] : profile.cover_edges)
            if (! host.adjacent(tuple[a], tuple[b]))
                return 0;
        return count_flow_extensions(make_flow_instance(profile, supplies_for(host, tuple)));
    }

    auto count_emb_vc(const Graph & pattern, const Graph & host, unsigned threads) -> Count
    {
        auto profile = degree_class_profile(pattern);
        int tau = static_cast<int>(profile.cover.size());
        if (tau > 30)
            throw PreconditionError{"count_emb_vc: vertex cover too large"};
        if (tau == 0)
            return count_tuple_extensions(profile, host, {});

        std::vector<std::vector<int>> earlier(tau);
        for (auto [a, b] : profile.cover_edges)
            earlier[std::max(a, b)].push_back(std::min(a, b));

        return parallel_sum(static_cast<std::size_t>(host.n()), threads, [&](std::size_t first) -> Count {
            std::map<std::map<unsigned, int>, Count> memo;
            std::vector<int> tuple(tau, -1);
            tuple[0] = static_cast<int>(first);
            Count sum = 0;
            auto rec = [&](auto & self, int pos) -> void {
                if (pos == tau) {
                    auto supplies = supplies_for(host, tuple);
                    auto it = memo.find(supplies);
                    if (it == memo.end())
                        it = memo.emplace(supplies, count_flow_extensions(make_flow_instance(profile, supplies))).first;
                    sum += it->second;
                    return;
                }
                for (int v = 0; v < host.n(); ++v) {
                    if (std::find(tuple.begin(), tuple.begin() + pos, v) != tuple.begin() + pos)
                        continue;
                    bool ok = true;
                    for (int e : earlier[pos])
                        ok = ok && host.adjacent(tuple[e], v);
                    if (! ok)
                        continue;
                    tuple[pos] = v;
                    self(self, pos + 1);
                }
                tuple[pos] = -1;
            };
            rec(rec, 1);
            return sum;
        });
    }

    auto count_sub_vc(const Graph & pattern, const Graph & host, unsigned threads) -> Count
    {
        return exact_divide(count_emb_vc(pattern, host, threads), count_emb_vc(pattern, pattern, threads),
            "count_sub_vc");
    }
}
