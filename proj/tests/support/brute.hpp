#pragma once

// Test-only reference implementations. Deliberately naive and independent of
// the library's search code: exhaustive enumeration, Floyd-Warshall over the
// whole color graph, and plain backtracking for list-coloring extension.

#include <recolor/coloring.hpp>
#include <recolor/graph.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace brute {

using namespace recolor;

/// Every proper L-coloring, in lexicographic order.
inline std::vector<std::vector<Color>> colorings(const Graph & g, const ColorLists & lists)
{
    std::vector<std::vector<Color>> out;
    std::vector<Color> cur(g.size(), 0);
    std::function<void(Vertex)> go = [&](Vertex v) {
        if (v == g.size()) {
            out.push_back(cur);
            return;
        }
        lists[v].for_each([&](Color c) {
            for (Vertex w : g.neighbors(v))
                if (w < v && cur[w] == c)
                    return;
            cur[v] = c;
            go(v + 1);
        });
        cur[v] = 0;
    };
    go(0);
    return out;
}

inline std::vector<std::vector<Color>> colorings(const Graph & g, Color k)
{
    return colorings(g, ColorLists::full(g.size(), k));
}

inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

/// All-pairs distances in C(G,L) by Floyd-Warshall. Index order matches
/// colorings(g, lists).
struct Distances {
    std::vector<std::vector<Color>> nodes;
    std::vector<std::vector<std::size_t>> d;

    std::size_t index(const std::vector<Color> & c) const
    {
        return static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), c) - nodes.begin());
    }

    std::size_t between(const std::vector<Color> & a, const std::vector<Color> & b) const
    {
        return d[index(a)][index(b)];
    }
};

inline Distances all_distances(const Graph & g, const ColorLists & lists)
{
    Distances out;
    out.nodes = colorings(g, lists);
    const std::size_t m = out.nodes.size();
    out.d.assign(m, std::vector<std::size_t>(m, unreachable));
    for (std::size_t i = 0; i < m; ++i) {
        out.d[i][i] = 0;
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t diff = 0;
            for (std::size_t v = 0; v < g.size(); ++v)
                diff += out.nodes[i][v] != out.nodes[j][v];
            if (diff == 1)
                out.d[i][j] = 1;
        }
    }
    for (std::size_t via = 0; via < m; ++via)
        for (std::size_t i = 0; i < m; ++i) {
            if (out.d[i][via] == unreachable)
                continue;
            for (std::size_t j = 0; j < m; ++j)
                if (out.d[via][j] != unreachable)
                    out.d[i][j] = std::min(out.d[i][j], out.d[i][via] + out.d[via][j]);
        }
    return out;
}

/// Every simple graph on n labeled vertices.
inline std::vector<Graph> all_graphs(std::size_t n)
{
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            slots.push_back({u, v});
    std::vector<Graph> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1)
                edges.push_back(slots[i]);
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

/// Can `fixed` (0 = free) be extended to a proper L-coloring? Backtracking.
inline bool extendable(const Graph & g, const ColorLists & lists, std::vector<Color> fixed)
{
    for (Vertex v = 0; v < g.size(); ++v) {
        if (!fixed[v])
            continue;
        if (!lists[v].contains(fixed[v]))
            return false;
        for (Vertex w : g.neighbors(v))
            if (fixed[w] == fixed[v])
                return false;
    }
    std::vector<Vertex> order;
    for (Vertex v = 0; v < g.size(); ++v)
        if (!fixed[v])
            order.push_back(v);
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
        if (i == order.size())
            return true;
        const Vertex v = order[i];
        bool ok = false;
        lists[v].for_each([&](Color c) {
            if (ok)
                return;
            for (Vertex w : g.neighbors(v))
                if (fixed[w] == c)
                    return;
            fixed[v] = c;
            ok = go(i + 1);
            fixed[v] = 0;
        });
        return ok;
    };
    return go(0);
}

/// Seeded random graph with edge probability p.
inline Graph random_graph(std::mt19937 & rng, std::size_t n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

/// Nonempty random subset of {1..k}.
inline ColorSet random_list(std::mt19937 & rng, Color k)
{
    std::uniform_int_distribution<unsigned> pick(1, (1u << k) - 1);
    const unsigned mask = pick(rng);
    ColorSet s;
    for (Color c = 1; c <= k; ++c)
        if (mask >> (c - 1) & 1)
            s.insert(c);
    return s;
}

/// Distinct colors over the coloring reached after each prefix, the start included.
inline std::vector<std::size_t> distinct_per_prefix(const Coloring & alpha, const RecolorSequence & seq)
{
    std::vector<std::size_t> out{alpha.distinct_colors()};
    Coloring cur = alpha;
    for (const auto & step : seq) {
        cur = apply_step(cur, step);
        out.push_back(cur.distinct_colors());
    }
    return out;
}

} // namespace brute
