#pragma once

// (a,b)-forbidding paths: a list-colored path of length six between u and v
// that acts like an edge forbidding exactly the endpoint combination
// u = a, v = b. Every other endpoint pair is realizable, and can be reached
// from any coloring that already agrees on one endpoint by recoloring each
// internal vertex at most once before the endpoint moves.

#include <recolor/coloring.hpp>
#include <recolor/graph.hpp>

#include <array>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace recolor::gadgets {

struct ForbiddingPath {
    static constexpr std::size_t length = 6;
    static constexpr Vertex u = 0;
    static constexpr Vertex v = 6;

    Graph path;       // 0 - 1 - ... - 6
    ColorLists lists; // palette {1,2,3,4}
    Color a = 0;
    Color b = 0;
    bool shift_complete = true; // false: some shifts are impossible (see build_forbidding_path)

    bool admissible(Color x, Color y) const
    {
        return lists[u].contains(x) && lists[v].contains(y) && (x != a || y != b);
    }
};

inline Graph path_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
    return Graph(n, std::move(edges));
}

/// Lists along the path: L_u, {a,c}, {c,e}, {e,f}, {f,d}, {d,b}, L_v with
/// c not in L_u, d not in L_v, e not in {a,c}, f not in {b,d}, e != f.
/// Additionally c != f and d != e: otherwise two adjacent internal vertices
/// share a two-color list and freeze when colored the wrong way round. The
/// lexicographically smallest (c,d,e,f) is used. When a = b the extra
/// conditions can be unsatisfiable (no length-six path exists then); the
/// smallest choice without them is returned with `shift_complete` false.
inline ForbiddingPath build_forbidding_path(const ColorSet & lu, const ColorSet & lv, Color a, Color b)
{
    const ColorSet all = ColorSet::range(4);
    for (const ColorSet * l : {&lu, &lv}) {
        if (l->empty() || !l->is_subset_of(all))
            throw DomainError("endpoint list " + to_string(*l) + " must be a nonempty subset of {1,2,3,4}");
        if (*l == all)
            throw DomainError("endpoint list must be a proper subset of {1,2,3,4}");
    }
    if (!lu.contains(a))
        throw DomainError("forbidden color a=" + std::to_string(a) + " is not in L(u)");
    if (!lv.contains(b))
        throw DomainError("forbidden color b=" + std::to_string(b) + " is not in L(v)");

    std::optional<std::array<Color, 4>> strict, loose;
    for (Color c = 1; c <= 4; ++c)
        for (Color d = 1; d <= 4; ++d)
            for (Color e = 1; e <= 4; ++e)
                for (Color f = 1; f <= 4; ++f) {
                    if (lu.contains(c) || lv.contains(d) || e == a || e == c || f == b || f == d || e == f)
                        continue;
                    if (!loose)
                        loose = {c, d, e, f};
                    if (!strict && c != f && d != e)
                        strict = {c, d, e, f};
                }
    const auto [c, d, e, f] = strict.value_or(*loose);

    ForbiddingPath fp;
    fp.shift_complete = strict.has_value();
    fp.path = path_graph(ForbiddingPath::length + 1);
    fp.lists = ColorLists(4, {lu, {a, c}, {c, e}, {e, f}, {f, d}, {d, b}, lv});
    fp.a = a;
    fp.b = b;
    return fp;
}

/// An L-coloring of the path with endpoints (x, y): each internal vertex,
/// from u towards v, takes the smallest list color that still admits a
/// completion. Throws DomainError for inadmissible pairs.
inline Coloring extend_along_path(const Graph & path, const ColorLists & lists, Color x, Color y)
{
    const std::size_t n = path.size();
    // completable[i] = colors of vertex i that extend to i+1..n-1 ending in y
    std::vector<ColorSet> completable(n);
    if (lists[static_cast<Vertex>(n - 1)].contains(y))
        completable[n - 1].insert(y);
    for (std::size_t i = n - 1; i-- > 0;)
        lists[static_cast<Vertex>(i)].for_each([&](Color c) {
            const ColorSet & next = completable[i + 1];
            if (!next.empty() && !(next.size() == 1 && next.contains(c)))
                completable[i].insert(c);
        });
    if (!completable[0].contains(x))
        throw DomainError("endpoint pair (" + std::to_string(x) + "," + std::to_string(y)
                          + ") does not extend along the path");

    std::vector<Color> out(n);
    out[0] = x;
    for (std::size_t i = 1; i < n; ++i) {
        Color pick = 0;
        completable[i].for_each([&](Color c) {
            if (pick == 0 && c != out[i - 1])
                pick = c;
        });
        out[i] = pick;
    }
    return Coloring(std::move(out));
}

inline Coloring extend_along_path(const ForbiddingPath & fp, Color x, Color y)
{
    if (!fp.admissible(x, y))
        throw DomainError("endpoint pair (" + std::to_string(x) + "," + std::to_string(y) + ") is not admissible");
    return extend_along_path(fp.path, fp.lists, x, y);
}

/// Recoloring sequence on the path from `current` to a coloring with endpoint
/// pair `target`. Internal vertices are recolored at most once each; the one
/// endpoint that changes (if any) moves in the final step. Shortest such
/// sequence, found by breadth-first search.
inline RecolorSequence shift_path(const ForbiddingPath & fp, const Coloring & current, std::pair<Color, Color> target)
{
    const auto [x, y] = target;
    if (!is_proper(fp.path, fp.lists, current))
        throw DomainError("current coloring is not a proper L-coloring of the path");
    if (!fp.admissible(x, y))
        throw DomainError("target pair (" + std::to_string(x) + "," + std::to_string(y) + ") is not admissible");
    const bool move_u = current[ForbiddingPath::u] != x;
    const bool move_v = current[ForbiddingPath::v] != y;
    if (move_u && move_v)
        throw DomainError("target pair must agree with the current coloring on one endpoint");
    if (!move_u && !move_v)
        return {};

    const Vertex endpoint = move_u ? ForbiddingPath::u : ForbiddingPath::v;
    const Color endpoint_color = move_u ? x : y;
    const Vertex inner = move_u ? ForbiddingPath::u + 1 : ForbiddingPath::v - 1;

    using State = std::pair<std::vector<Color>, unsigned>; // coloring, recolored-internal mask
    struct Parent {
        std::optional<State> from;
        RecolorStep step;
    };
    std::map<State, Parent> parents;
    std::deque<State> queue;
    State start{{current.values().begin(), current.values().end()}, 0u};
    parents.emplace(start, Parent{std::nullopt, {0, 0}});
    queue.push_back(start);

    while (!queue.empty()) {
        State state = std::move(queue.front());
        queue.pop_front();
        if (state.first[inner] != endpoint_color) {
            RecolorSequence seq{{endpoint, endpoint_color}};
            for (const State * s = &state;;) {
                const Parent & p = parents.at(*s);
                if (!p.from)
                    break;
                seq.push_back(p.step);
                s = &parents.find(*p.from)->first;
            }
            return {seq.rbegin(), seq.rend()};
        }
        for (Vertex w = ForbiddingPath::u + 1; w < ForbiddingPath::v; ++w) {
            const unsigned bit = 1u << w;
            if (state.second & bit)
                continue;
            fp.lists[w].for_each([&](Color c) {
                if (c == state.first[w] || state.first[w - 1] == c || state.first[w + 1] == c)
                    return;
                State next = state;
                next.first[w] = c;
                next.second |= bit;
                if (parents.contains(next))
                    return;
                parents.emplace(next, Parent{state, {w, c}});
                queue.push_back(std::move(next));
            });
        }
    }
    throw DomainError("no shift sequence exists; the path is not a forbidding path");
}

} // namespace recolor::gadgets
