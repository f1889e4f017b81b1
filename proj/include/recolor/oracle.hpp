#pragma once

// Breadth-first search over the color graph C(G, L): vertices are the proper
// L-colorings, edges join colorings that differ on exactly one vertex.
// Small and unclever on purpose; every other solver is checked against it.

#include <recolor/coloring.hpp>
#include <recolor/graph.hpp>
#include <recolor/limits.hpp>

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <variant>
#include <vector>

namespace recolor {

/// Canonical key of a coloring: packed into one word when it fits,
/// otherwise the raw color tuple.
using ColorGraphKey = std::variant<std::uint64_t, std::vector<Color>>;

class ColoringCodec {
public:
    ColoringCodec(std::size_t n, Color palette)
        : n_(n), bits_(palette <= 1 ? 0u : static_cast<unsigned>(std::bit_width(palette - 1)))
    {
        packed_ = n_ * bits_ <= 64;
    }

    bool packed() const { return packed_; }
    unsigned bits_per_vertex() const { return bits_; }

    std::uint64_t pack(std::span<const Color> colors) const
    {
        std::uint64_t key = 0;
        for (std::size_t v = 0; v < n_; ++v)
            key |= static_cast<std::uint64_t>(colors[v] - 1) << (v * bits_);
        return key;
    }

    void unpack(std::uint64_t key, std::span<Color> out) const
    {
        const std::uint64_t mask = bits_ == 0 ? 0 : (bits_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits_) - 1);
        for (std::size_t v = 0; v < n_; ++v)
            out[v] = static_cast<Color>((bits_ == 0 ? 0 : (key >> (v * bits_)) & mask) + 1);
    }

    ColorGraphKey encode(const Coloring & gamma) const
    {
        if (packed_)
            return pack(gamma.values());
        return std::vector<Color>(gamma.values().begin(), gamma.values().end());
    }

    Coloring decode(const ColorGraphKey & key) const
    {
        if (const auto * word = std::get_if<std::uint64_t>(&key)) {
            std::vector<Color> colors(n_);
            unpack(*word, colors);
            return Coloring(std::move(colors));
        }
        return Coloring(std::get<std::vector<Color>>(key));
    }

private:
    std::size_t n_;
    unsigned bits_;
    bool packed_;
};

struct OracleResult {
    SearchStatus status = SearchStatus::not_found;
    std::optional<std::size_t> distance;
    std::optional<RecolorSequence> witness;
    std::size_t explored = 0;
};

struct ReachableSet {
    SearchStatus status = SearchStatus::found; // budget_exhausted if truncated
    std::vector<ColorGraphKey> keys;            // discovery order
    std::size_t explored = 0;
};

struct SeparatorResult {
    std::optional<bool> holds; // absent when the budget ran out
    std::size_t explored = 0;
};

namespace detail {

struct PackedKeys {
    using key_type = std::uint64_t;
    using hash_type = std::hash<std::uint64_t>;

    const ColoringCodec & codec;

    key_type make(std::span<const Color> colors) const { return codec.pack(colors); }
    void load(const key_type & key, std::vector<Color> & out) const { codec.unpack(key, out); }
    ColorGraphKey publish(const key_type & key) const { return key; }
};

struct TupleHash {
    std::size_t operator()(const std::vector<Color> & colors) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ull;
        for (Color c : colors)
            h = (h ^ c) * 0x100000001b3ull;
        return h;
    }
};

struct TupleKeys {
    using key_type = std::vector<Color>;
    using hash_type = TupleHash;

    key_type make(std::span<const Color> colors) const { return {colors.begin(), colors.end()}; }
    void load(const key_type & key, std::vector<Color> & out) const { out = key; }
    ColorGraphKey publish(const key_type & key) const { return key; }
};

template <typename Key>
struct BfsNode {
    Key key;
    std::size_t parent;
    RecolorStep step;
};

template <typename Key>
struct BfsRun {
    SearchStatus status = SearchStatus::not_found;
    std::vector<BfsNode<Key>> nodes;
    std::optional<std::size_t> goal;

    RecolorSequence path_to(std::size_t index) const
    {
        RecolorSequence out;
        while (index != 0) {
            out.push_back(nodes[index].step);
            index = nodes[index].parent;
        }
        return {out.rbegin(), out.rend()};
    }
};

/// BFS from alpha over colorings accepted by `allowed`, stopping at the first
/// coloring satisfying `is_goal`. Neighbor order: vertex ascending, then color
/// ascending.
template <typename Keys, typename Allowed, typename Goal>
BfsRun<typename Keys::key_type> bfs(const Graph & graph, const ColorLists & lists, const Coloring & alpha,
                                    const Keys & keys, Allowed && allowed, Goal && is_goal,
                                    const SearchLimits & limits)
{
    using Key = typename Keys::key_type;
    BfsRun<Key> run;
    const std::size_t cap = limits.node_cap.value_or(static_cast<std::size_t>(-1));

    std::vector<Color> gamma(alpha.values().begin(), alpha.values().end());
    if (!allowed(std::span<const Color>(gamma)))
        return run;

    std::unordered_map<Key, std::size_t, typename Keys::hash_type> seen;
    run.nodes.push_back({keys.make(gamma), 0, {0, 0}});
    seen.emplace(run.nodes.back().key, 0);
    if (is_goal(std::span<const Color>(gamma))) {
        run.status = SearchStatus::found;
        run.goal = 0;
        return run;
    }
    if (cap == 0) {
        run.status = SearchStatus::budget_exhausted;
        return run;
    }

    for (std::size_t head = 0; head < run.nodes.size(); ++head) {
        if ((head & 0xfff) == 0xfff && limits.past_deadline()) {
            run.status = SearchStatus::budget_exhausted;
            return run;
        }
        keys.load(run.nodes[head].key, gamma);
        for (Vertex v = 0; v < graph.size(); ++v) {
            const Color old = gamma[v];
            bool stop = false;
            lists[v].for_each([&](Color c) {
                if (stop || c == old)
                    return;
                for (Vertex w : graph.neighbors(v))
                    if (gamma[w] == c)
                        return;
                gamma[v] = c;
                if (allowed(std::span<const Color>(gamma))) {
                    Key key = keys.make(gamma);
                    if (!seen.contains(key)) {
                        if (run.nodes.size() >= cap) {
                            run.status = SearchStatus::budget_exhausted;
                            stop = true;
                        } else {
                            seen.emplace(key, run.nodes.size());
                            run.nodes.push_back({std::move(key), head, {v, c}});
                            if (is_goal(std::span<const Color>(gamma))) {
                                run.status = SearchStatus::found;
                                run.goal = run.nodes.size() - 1;
                                stop = true;
                            }
                        }
                    }
                }
                gamma[v] = old;
            });
            if (stop)
                return run;
        }
    }
    return run;
}

template <typename F>
decltype(auto) with_keys(const ColoringCodec & codec, F && f)
{
    if (codec.packed())
        return f(PackedKeys{codec});
    return f(TupleKeys{});
}

inline void require_proper(const Graph & graph, const ColorLists & lists, const Coloring & gamma, const char * name)
{
    require_length(graph, gamma, name);
    require_lists(graph, lists);
    if (auto bad = check_coloring(graph, lists, gamma); !bad.empty())
        throw DomainError(std::string(name) + " is not a proper list-coloring: " + bad.front().describe());
}

inline SearchLimits oracle_defaults(SearchLimits limits)
{
    if (!limits.node_cap)
        limits.node_cap = default_oracle_node_cap;
    return limits;
}

} // namespace detail

/// Exact distance from alpha to beta in C(G, L) with a shortest witness.
inline OracleResult oracle_distance(const Graph & graph, const ColorLists & lists, const Coloring & alpha,
                                    const Coloring & beta, SearchLimits limits = {})
{
    detail::require_proper(graph, lists, alpha, "alpha");
    detail::require_proper(graph, lists, beta, "beta");
    limits = detail::oracle_defaults(limits);
    const ColoringCodec codec(graph.size(), lists.palette());
    return detail::with_keys(codec, [&](const auto & keys) {
        const auto target = keys.make(beta.values());
        auto run = detail::bfs(
            graph, lists, alpha, keys, [](std::span<const Color>) { return true; },
            [&](std::span<const Color> g) { return keys.make(g) == target; }, limits);
        OracleResult out;
        out.status = run.status;
        out.explored = run.nodes.size();
        if (run.goal) {
            out.witness = run.path_to(*run.goal);
            out.distance = out.witness->size();
        }
        return out;
    });
}

inline OracleResult oracle_distance(const Graph & graph, Color k, const Coloring & alpha, const Coloring & beta,
                                    SearchLimits limits = {})
{
    return oracle_distance(graph, ColorLists::full(graph.size(), k), alpha, beta, limits);
}

/// Every L-coloring in the connected component of alpha.
inline ReachableSet reachable_set(const Graph & graph, const ColorLists & lists, const Coloring & alpha,
                                  SearchLimits limits = {})
{
    detail::require_proper(graph, lists, alpha, "alpha");
    limits = detail::oracle_defaults(limits);
    const ColoringCodec codec(graph.size(), lists.palette());
    return detail::with_keys(codec, [&](const auto & keys) {
        auto run = detail::bfs(
            graph, lists, alpha, keys, [](std::span<const Color>) { return true; },
            [](std::span<const Color>) { return false; }, limits);
        ReachableSet out;
        out.status = run.status == SearchStatus::budget_exhausted ? SearchStatus::budget_exhausted
                                                                  : SearchStatus::found;
        out.explored = run.nodes.size();
        out.keys.reserve(run.nodes.size());
        for (const auto & node : run.nodes)
            out.keys.push_back(keys.publish(node.key));
        return out;
    });
}

/// True iff beta cannot be reached from alpha in C_k(G) once every coloring
/// satisfying `forbidden` is deleted. `forbidden` receives the color tuple.
template <typename Predicate>
SeparatorResult separator_holds(const Graph & graph, Color k, const Coloring & alpha, const Coloring & beta,
                                Predicate && forbidden, SearchLimits limits = {})
{
    const ColorLists lists = ColorLists::full(graph.size(), k);
    detail::require_proper(graph, lists, alpha, "alpha");
    detail::require_proper(graph, lists, beta, "beta");
    limits = detail::oracle_defaults(limits);
    const ColoringCodec codec(graph.size(), k);
    return detail::with_keys(codec, [&](const auto & keys) {
        const auto target = keys.make(beta.values());
        auto run = detail::bfs(
            graph, lists, alpha, keys, [&](std::span<const Color> g) { return !forbidden(g); },
            [&](std::span<const Color> g) { return keys.make(g) == target; }, limits);
        SeparatorResult out;
        out.explored = run.nodes.size();
        if (run.status != SearchStatus::budget_exhausted)
            out.holds = run.status == SearchStatus::not_found;
        return out;
    });
}

/// Predicate "uses at least q distinct colors", the usual separator.
inline auto uses_at_least(std::size_t q)
{
    return [q](std::span<const Color> colors) { return ColorSet::from(colors).size() >= q; };
}

} // namespace recolor
