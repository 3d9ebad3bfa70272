#include <subcount/brute.hh>
#include <subcount/factored_matchings.hh>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <tuple>

namespace subcount
{
    namespace
    {
        constexpr std::size_t max_group_colors = 12;
        constexpr std::size_t max_dense_tensor = std::size_t{1} << 22;

        using MaskCounts = std::vector<Count>;

        // Disjoint-union product of two per-mask count vectors.
        auto convolve(const MaskCounts & a, const MaskCounts & b) -> MaskCounts
        {
            MaskCounts result(a.size(), 0);
            for (std::size_t mask = 0; mask < a.size(); ++mask) {
                if (a[mask] == 0)
                    continue;
                std::size_t rest = (a.size() - 1) & ~mask;
                for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
                    if (b[sub] != 0)
                        result[mask | sub] += a[mask] * b[sub];
                    if (sub == 0)
                        break;
                }
            }
            return result;
        }

        struct LocalEdge
        {
            int u, v, color;
            auto operator<=>(const LocalEdge &) const = default;
        };

        struct Component
        {
            int group = -1;
            int signature = -1;
        };

        struct Group
        {
            std::vector<int> colors;
            std::vector<int> components;
            std::map<std::vector<int>, int> key_ids; // sorted damaged component keys -> id
            std::vector<MaskCounts> key_values;
        };
    }

    struct FactoredColmatchCounter::State
    {
        std::vector<int> branch;
        std::mutex mutex;
        std::size_t queries = 0, fallbacks = 0;

        std::optional<EdgeColoredGraph> host;
        bool factorable = false;

        std::vector<Group> groups;
        std::map<int, std::pair<int, int>> color_slot; // color -> (group, bit)
        std::vector<Component> components;
        std::vector<int> vertex_component, vertex_local;
        std::vector<std::vector<LocalEdge>> signatures;
        std::map<std::pair<int, std::vector<int>>, int> component_key_ids;
        std::vector<std::pair<int, std::vector<int>>> component_keys;
        std::map<int, MaskCounts> component_values; // component key id -> counts

        // Histogram over per-group key tuples, as a dense tensor (group 0 most
        // significant) or, when too large, as a sparse list.
        std::vector<std::size_t> dims;
        std::vector<Count> tensor;
        std::vector<std::pair<std::vector<int>, Count>> sparse;
        bool dense = true;

        std::vector<unsigned> cached_masks;
        std::vector<std::vector<Count>> levels; // levels[j] has groups < j contracted; level 0 is the tensor
        std::size_t valid_levels = 0;

        auto reset(const EdgeColoredGraph & graph) -> void;
        auto intern_key(int signature, std::vector<int> damaged) -> int;
        auto component_counts(int key) -> const MaskCounts &;
        auto group_key(int g, const std::vector<int> & damaged_keys) -> int;
        auto evaluate(const std::vector<unsigned> & masks) -> Count;
    };

    auto FactoredColmatchCounter::State::intern_key(int signature, std::vector<int> damaged) -> int
    {
        std::sort(damaged.begin(), damaged.end());
        std::pair key{signature, std::move(damaged)};
        auto [it, inserted] = component_key_ids.emplace(key, static_cast<int>(component_keys.size()));
        if (inserted)
            component_keys.push_back(key);
        return it->second;
    }

    auto FactoredColmatchCounter::State::component_counts(int key) -> const MaskCounts &
    {
        auto found = component_values.find(key);
        if (found != component_values.end())
            return found->second;
        const auto & [signature, damaged] = component_keys[key];
        const auto & edges = signatures[signature];
        int size = 0;
        for (auto & e : edges)
            size = std::max({size, e.u + 1, e.v + 1});
        std::vector<char> used(size, 0);
        for (int v : damaged)
            used[v] = 1;
        int group_colors = 0;
        for (auto & e : edges)
            group_colors = std::max(group_colors, e.color + 1);

        MaskCounts counts;
        auto rec = [&](auto & self, std::size_t i, unsigned mask) -> void {
            if (i == edges.size()) {
                if (counts.size() <= mask)
                    counts.resize(mask + 1, 0);
                ++counts[mask];
                return;
            }
            self(self, i + 1, mask);
            const auto & e = edges[i];
            if (used[e.u] || used[e.v] || ((mask >> e.color) & 1U))
                return;
            used[e.u] = used[e.v] = 1;
            self(self, i + 1, mask | (1U << e.color));
            used[e.u] = used[e.v] = 0;
        };
        rec(rec, 0, 0);
        return component_values.emplace(key, std::move(counts)).first->second;
    }

    auto FactoredColmatchCounter::State::group_key(int g, const std::vector<int> & damaged_keys) -> int
    {
        auto & group = groups[g];
        auto found = group.key_ids.find(damaged_keys);
        if (found != group.key_ids.end())
            return found->second;

        std::size_t width = std::size_t{1} << group.colors.size();
        auto widen = [&](const MaskCounts & c) {
            MaskCounts result(width, 0);
            std::copy(c.begin(), c.end(), result.begin());
            return result;
        };

        // Undamaged components: the group's signatures minus one per damaged key.
        std::multiset<int> intact;
        for (int c : group.components)
            intact.insert(components[c].signature);
        for (int key : damaged_keys)
            intact.erase(intact.find(component_keys[key].first));

        MaskCounts total(width, 0);
        total[0] = 1;
        for (int signature : intact)
            total = convolve(total, widen(component_counts(intern_key(signature, {}))));
        for (int key : damaged_keys)
            total = convolve(total, widen(component_counts(key)));

        int id = static_cast<int>(group.key_values.size());
        group.key_ids.emplace(damaged_keys, id);
        group.key_values.push_back(std::move(total));
        return id;
    }

    auto FactoredColmatchCounter::State::reset(const EdgeColoredGraph & graph) -> void
    {
        host = graph;
        groups.clear();
        color_slot.clear();
        components.clear();
        signatures.clear();
        component_key_ids.clear();
        component_keys.clear();
        component_values.clear();
        dims.clear();
        tensor.clear();
        sparse.clear();
        cached_masks.clear();
        levels.clear();
        valid_levels = 0;
        factorable = false;

        int n = graph.n();
        auto is_branch = [&](int c) { return std::binary_search(branch.begin(), branch.end(), c); };

        // Components of the non-branch edges.
        Graph rest{n};
        for (auto & [e, c] : graph.color)
            if (! is_branch(c))
                rest.add_edge(e.first, e.second);
        vertex_component.assign(n, -1);
        vertex_local.assign(n, -1);
        std::vector<std::vector<int>> members;
        for (auto & comp : connected_components(rest)) {
            if (comp.size() < 2)
                continue;
            for (std::size_t i = 0; i < comp.size(); ++i) {
                vertex_component[comp[i]] = static_cast<int>(members.size());
                vertex_local[comp[i]] = static_cast<int>(i);
            }
            members.push_back(comp);
        }
        components.assign(members.size(), {});

        // Colors sharing a component form one group.
        std::vector<int> parent(members.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        std::map<int, int> color_component;
        for (auto & [e, c] : graph.color) {
            if (is_branch(c))
                continue;
            int comp = vertex_component[e.first];
            auto [it, inserted] = color_component.emplace(c, comp);
            if (! inserted)
                parent[find(comp)] = find(it->second);
        }
        std::map<int, std::vector<int>> root_colors;
        for (auto [c, comp] : color_component)
            root_colors[find(comp)].push_back(c);
        std::vector<std::vector<int>> group_colors;
        for (auto & [root, colors] : root_colors)
            group_colors.push_back(colors);
        std::sort(group_colors.begin(), group_colors.end());
        for (auto & colors : group_colors)
            if (colors.size() > max_group_colors)
                return;
        for (std::size_t g = 0; g < group_colors.size(); ++g) {
            Group group;
            group.colors = group_colors[g];
            for (std::size_t bit = 0; bit < group.colors.size(); ++bit)
                color_slot[group.colors[bit]] = {static_cast<int>(g), static_cast<int>(bit)};
            groups.push_back(std::move(group));
        }

        // Translation-free signatures of each component's colored edges.
        std::vector<std::vector<LocalEdge>> local(members.size());
        for (auto & [e, c] : graph.color) {
            if (is_branch(c))
                continue;
            int comp = vertex_component[e.first];
            auto [g, bit] = color_slot.at(c);
            components[comp].group = g;
            local[comp].push_back({vertex_local[e.first], vertex_local[e.second], bit});
        }
        std::map<std::vector<LocalEdge>, int> signature_ids;
        for (std::size_t comp = 0; comp < members.size(); ++comp) {
            std::sort(local[comp].begin(), local[comp].end());
            auto [it, inserted] = signature_ids.emplace(local[comp], static_cast<int>(signatures.size()));
            if (inserted)
                signatures.push_back(local[comp]);
            components[comp].signature = it->second;
            groups[components[comp].group].components.push_back(static_cast<int>(comp));
        }

        // Branch-colorful matchings, bucketed by the damage they do per group.
        std::vector<std::vector<Edge>> classes;
        for (int c : branch) {
            classes.emplace_back();
            for (auto & [e, color] : graph.color)
                if (color == c)
                    classes.back().push_back(e);
        }
        std::map<std::vector<int>, Count> histogram;
        std::vector<char> used(n, 0);
        std::vector<int> touched;
        auto record = [&] {
            std::map<int, std::vector<int>> damage; // component -> local vertices
            for (int v : touched)
                if (vertex_component[v] != -1)
                    damage[vertex_component[v]].push_back(vertex_local[v]);
            std::vector<std::vector<int>> per_group(groups.size());
            for (auto & [comp, locals] : damage)
                per_group[components[comp].group].push_back(intern_key(components[comp].signature, locals));
            std::vector<int> tuple(groups.size());
            for (std::size_t g = 0; g < groups.size(); ++g) {
                std::sort(per_group[g].begin(), per_group[g].end());
                tuple[g] = group_key(static_cast<int>(g), per_group[g]);
            }
            ++histogram[tuple];
        };
        auto rec = [&](auto & self, std::size_t depth) -> void {
            if (depth == classes.size()) {
                record();
                return;
            }
            for (auto [u, v] : classes[depth]) {
                if (used[u] || used[v])
                    continue;
                used[u] = used[v] = 1;
                touched.push_back(u);
                touched.push_back(v);
                self(self, depth + 1);
                touched.resize(touched.size() - 2);
                used[u] = used[v] = 0;
            }
        };
        rec(rec, 0);

        std::size_t size = 1;
        for (auto & group : groups) {
            dims.push_back(group.key_values.size());
            size = size > max_dense_tensor ? size : size * dims.back();
        }
        dense = ! histogram.empty() && size <= max_dense_tensor;
        if (dense) {
            tensor.assign(size, 0);
            for (auto & [tuple, count] : histogram) {
                std::size_t index = 0;
                for (std::size_t g = 0; g < groups.size(); ++g)
                    index = index * dims[g] + tuple[g];
                tensor[index] = count;
            }
        }
        else
            sparse.assign(histogram.begin(), histogram.end());
        factorable = true;
    }

    auto FactoredColmatchCounter::State::evaluate(const std::vector<unsigned> & masks) -> Count
    {
        if (! dense) {
            Count total = 0;
            for (auto & [tuple, count] : sparse) {
                Count term = count;
                for (std::size_t g = 0; g < groups.size() && term != 0; ++g)
                    term *= groups[g].key_values[tuple[g]][masks[g]];
                total += term;
            }
            return total;
        }

        std::size_t start = 0;
        if (cached_masks.size() == masks.size())
            while (start < valid_levels && cached_masks[start] == masks[start])
                ++start;
        else {
            cached_masks.assign(masks.size(), 0);
            valid_levels = 0;
        }
        levels.resize(groups.size() + 1);
        for (std::size_t g = start; g < groups.size(); ++g) {
            const auto & current = g == 0 ? tensor : levels[g];
            std::size_t stride = current.size() / dims[g];
            std::vector<Count> next(stride, 0);
            for (std::size_t x = 0; x < dims[g]; ++x) {
                const Count & weight = groups[g].key_values[x][masks[g]];
                if (weight == 0)
                    continue;
                for (std::size_t r = 0; r < stride; ++r)
                    if (current[x * stride + r] != 0)
                        next[r] += weight * current[x * stride + r];
            }
            levels[g + 1] = std::move(next);
            cached_masks[g] = masks[g];
        }
        valid_levels = groups.size();
        return levels[groups.size()][0];
    }

    FactoredColmatchCounter::FactoredColmatchCounter(std::vector<int> branch_colors) :
        _state(std::make_shared<State>())
    {
        std::sort(branch_colors.begin(), branch_colors.end());
        branch_colors.erase(std::unique(branch_colors.begin(), branch_colors.end()), branch_colors.end());
        _state->branch = std::move(branch_colors);
    }

    auto FactoredColmatchCounter::operator()(const EdgeColoredGraph & host, const std::vector<int> & colors) -> Count
    {
        std::lock_guard lock{_state->mutex};
        auto & s = *_state;
        ++s.queries;

        std::vector<int> wanted = colors;
        std::sort(wanted.begin(), wanted.end());
        if (std::adjacent_find(wanted.begin(), wanted.end()) != wanted.end())
            throw PreconditionError{"colorful matching query with a repeated color"};

        if (! s.host || ! (s.host->graph == host.graph) || s.host->color != host.color)
            s.reset(host);
        bool covers_branch = std::includes(wanted.begin(), wanted.end(), s.branch.begin(), s.branch.end());
        if (! s.factorable || ! covers_branch) {
            ++s.fallbacks;
            return count_colorful_matchings(host, wanted);
        }
        if (s.tensor.empty() && s.sparse.empty())
            return 0;

        std::vector<unsigned> masks(s.groups.size(), 0);
        for (int c : wanted) {
            if (std::binary_search(s.branch.begin(), s.branch.end(), c))
                continue;
            auto it = s.color_slot.find(c);
            if (it == s.color_slot.end())
                return 0; // no edge carries this color
            masks[it->second.first] |= 1U << it->second.second;
        }
        return s.evaluate(masks);
    }

    auto FactoredColmatchCounter::queries() const -> std::size_t
    {
        std::lock_guard lock{_state->mutex};
        return _state->queries;
    }

    auto FactoredColmatchCounter::fallbacks() const -> std::size_t
    {
        std::lock_guard lock{_state->mutex};
        return _state->fallbacks;
    }
}
