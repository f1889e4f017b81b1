#pragma once

// List-recoloring instance built from a graph G such that alpha reaches beta
// iff G is 3-colorable. Source vertices start at color 1 and form an
// independent set. Each edge uv gets terminals x, y, z wired to u and v by
// forbidding paths so that z can leave color 4 only while u and v differ.
// Four special vertices a, b, c, d can swap a and b only after c moves to 4,
// which requires every z off color 4 at once.

#include <recolor/coloring.hpp>
#include <recolor/gadgets/forbidding_path.hpp>
#include <recolor/instance.hpp>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace recolor::gadgets {

/// A forbidding path placed in a host graph: vertices[0] is its first
/// endpoint, vertices[6] the second.
struct EmbeddedPath {
    ForbiddingPath shape;
    std::array<Vertex, ForbiddingPath::length + 1> vertices;
};

inline constexpr std::size_t paths_per_edge = 8;

struct EdgeGadget {
    Vertex u, v; // source endpoints, u < v
    Vertex x, y, z;
    std::array<std::size_t, paths_per_edge> paths; // indices into NpInstance::paths
};

struct NpInstance {
    Instance instance; // list instance over {1,2,3,4}
    Graph source;
    std::vector<EdgeGadget> gadgets; // one per source edge, in edge order
    std::vector<EmbeddedPath> paths;
    Vertex a = 0, b = 0, c = 0, d = 0;
};

namespace detail {

enum class Terminal { u, v, x, y, z };

struct PathSpec {
    Terminal from, to;
    Color a, b;
};

// Forbidden endpoint pairs per edge gadget.
inline constexpr std::array<PathSpec, paths_per_edge> gadget_paths{{
    {Terminal::u, Terminal::x, 1, 2},
    {Terminal::u, Terminal::x, 3, 1},
    {Terminal::u, Terminal::y, 2, 3},
    {Terminal::v, Terminal::x, 2, 1},
    {Terminal::v, Terminal::x, 3, 2},
    {Terminal::v, Terminal::y, 1, 3},
    {Terminal::x, Terminal::z, 4, 1},
    {Terminal::y, Terminal::z, 4, 2},
}};

inline const ColorSet & terminal_list(Terminal t)
{
    static const ColorSet source{1, 2, 3}, xz{1, 2, 4}, y{3, 4};
    switch (t) {
    case Terminal::u:
    case Terminal::v: return source;
    case Terminal::x:
    case Terminal::z: return xz;
    case Terminal::y: return y;
    }
    return source;
}

inline Vertex terminal_vertex(const EdgeGadget & g, Terminal t)
{
    switch (t) {
    case Terminal::u: return g.u;
    case Terminal::v: return g.v;
    case Terminal::x: return g.x;
    case Terminal::y: return g.y;
    case Terminal::z: return g.z;
    }
    return g.u;
}

} // namespace detail

/// Builds the reduction instance. Vertex layout: source vertices first, then
/// per source edge x, y, z followed by the internal vertices of its paths,
/// then a, b, c, d. ell is 4 |V(G')|.
inline NpInstance np_reduce(const Graph & source)
{
    NpInstance np;
    np.source = source;
    const std::size_t n = source.size();
    const std::size_t m = source.edge_count();
    const std::size_t total = n + m * (3 + paths_per_edge * (ForbiddingPath::length - 1)) + 4;

    std::vector<Edge> edges;
    std::vector<ColorSet> lists(total);
    std::vector<Color> alpha(total, 0);
    auto & roles = np.instance.roles;

    for (Vertex w = 0; w < n; ++w) {
        lists[w] = {1, 2, 3};
        alpha[w] = 1;
        roles[w] = "source:" + std::to_string(w + 1);
    }

    Vertex next = static_cast<Vertex>(n);
    for (const Edge & e : source.edges()) {
        EdgeGadget g{};
        g.u = e.u;
        g.v = e.v;
        g.x = next++;
        g.y = next++;
        g.z = next++;
        const std::string tag = std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1);
        for (auto [vertex, name, list] : {std::tuple{g.x, "x:", ColorSet{1, 2, 4}},
                                          std::tuple{g.y, "y:", ColorSet{3, 4}},
                                          std::tuple{g.z, "z:", ColorSet{1, 2, 4}}}) {
            lists[vertex] = list;
            alpha[vertex] = 4;
            roles[vertex] = name + tag;
        }
        edges.emplace_back(g.u, g.x);
        edges.emplace_back(g.u, g.y);

        for (std::size_t p = 0; p < paths_per_edge; ++p) {
            const auto & kind = detail::gadget_paths[p];
            EmbeddedPath placed;
            placed.shape = build_forbidding_path(detail::terminal_list(kind.from), detail::terminal_list(kind.to),
                                                 kind.a, kind.b);
            placed.vertices.front() = detail::terminal_vertex(g, kind.from);
            placed.vertices.back() = detail::terminal_vertex(g, kind.to);
            for (std::size_t i = 1; i < ForbiddingPath::length; ++i) {
                placed.vertices[i] = next++;
                lists[placed.vertices[i]] = placed.shape.lists[static_cast<Vertex>(i)];
                roles[placed.vertices[i]] = "path:" + std::to_string(np.paths.size() + 1) + ":" + std::to_string(i);
            }
            for (std::size_t i = 0; i < ForbiddingPath::length; ++i)
                edges.emplace_back(placed.vertices[i], placed.vertices[i + 1]);
            g.paths[p] = np.paths.size();
            np.paths.push_back(std::move(placed));
        }
        np.gadgets.push_back(g);
    }

    np.a = next++;
    np.b = next++;
    np.c = next++;
    np.d = next++;
    const std::array<std::tuple<Vertex, ColorSet, Color, const char *>, 4> special{{
        {np.a, {1, 2, 3}, 1, "special:a"},
        {np.b, {1, 2}, 2, "special:b"},
        {np.c, {3, 4}, 3, "special:c"},
        {np.d, {4}, 4, "special:d"},
    }};
    for (const auto & [vertex, list, color, name] : special) {
        lists[vertex] = list;
        alpha[vertex] = color;
        roles[vertex] = name;
    }
    for (Vertex s : {np.a, np.b, np.c, np.d})
        for (Vertex t : {np.a, np.b, np.c, np.d})
            if (s < t && !(s == np.c && t == np.d))
                edges.emplace_back(s, t);
    for (const auto & g : np.gadgets)
        edges.emplace_back(g.z, np.c);

    // alpha on path internals: extend each path from its endpoints
    for (const auto & placed : np.paths) {
        const Coloring local = extend_along_path(placed.shape, alpha[placed.vertices.front()],
                                                 alpha[placed.vertices.back()]);
        for (std::size_t i = 1; i < ForbiddingPath::length; ++i)
            alpha[placed.vertices[i]] = local[static_cast<Vertex>(i)];
    }

    std::vector<Color> beta = alpha;
    beta[np.a] = 2;
    beta[np.b] = 1;

    np.instance.graph = Graph(total, std::move(edges));
    np.instance.k = 4;
    np.instance.lists = ColorLists(4, std::move(lists));
    np.instance.ell = 4 * total;
    np.instance.alpha = Coloring(std::move(alpha));
    np.instance.beta = Coloring(std::move(beta));
    return np;
}

/// Colors of the five role vertices of one edge gadget.
struct GadgetAssignment {
    Color u, v, x, y, z;
};

/// Whether the assignment extends to an L-coloring of the edge gadget,
/// treating every forbidding path as the constraint "endpoint pair != (a,b)"
/// alongside the direct edges u-x and u-y.
inline bool gadget_abstraction_check(const NpInstance & np, std::size_t edge_index, const GadgetAssignment & q)
{
    if (edge_index >= np.gadgets.size())
        throw StructuralError("edge index " + std::to_string(edge_index) + " out of range");
    const EdgeGadget & g = np.gadgets[edge_index];
    const ColorLists & lists = *np.instance.lists;
    const std::array<std::pair<Vertex, Color>, 5> roles{{{g.u, q.u}, {g.v, q.v}, {g.x, q.x}, {g.y, q.y}, {g.z, q.z}}};
    std::vector<Color> color(np.instance.graph.size(), 0);
    for (auto [vertex, c] : roles) {
        if (!lists[vertex].contains(c))
            throw DomainError("color " + std::to_string(c) + " is not in the list of vertex " + std::to_string(vertex));
        color[vertex] = c;
    }
    if (q.u == q.x || q.u == q.y)
        return false;
    for (std::size_t p : g.paths) {
        const EmbeddedPath & placed = np.paths[p];
        if (!placed.shape.admissible(color[placed.vertices.front()], color[placed.vertices.back()]))
            return false;
    }
    return true;
}

namespace detail {

class NpWitnessBuilder {
public:
    explicit NpWitnessBuilder(const NpInstance & np)
        : np_(np), graph_(np.instance.graph), lists_(*np.instance.lists),
          current_(np.instance.alpha.values().begin(), np.instance.alpha.values().end()),
          incident_(graph_.size()), internal_(graph_.size(), 0)
    {
        for (std::size_t p = 0; p < np.paths.size(); ++p) {
            const auto & vs = np.paths[p].vertices;
            incident_[vs.front()].push_back(p);
            incident_[vs.back()].push_back(p);
            for (std::size_t i = 1; i + 1 < vs.size(); ++i)
                internal_[vs[i]] = 1;
        }
    }

    /// Recolor terminal t to c after shifting every incident forbidding path.
    /// Leaves everything untouched and returns false if some direct neighbor
    /// holds c or some incident path would reach its forbidden pair.
    bool move(Vertex t, Color c)
    {
        if (current_[t] == c)
            return true;
        if (!lists_[t].contains(c))
            return false;
        for (Vertex w : graph_.neighbors(t))
            if (!internal_[w] && current_[w] == c)
                return false;
        for (std::size_t p : incident_[t]) {
            const auto [x, y] = shifted_pair(np_.paths[p], t, c);
            if (!np_.paths[p].shape.admissible(x, y))
                return false;
        }
        for (std::size_t p : incident_[t]) {
            const EmbeddedPath & placed = np_.paths[p];
            std::vector<Color> local;
            for (Vertex w : placed.vertices)
                local.push_back(current_[w]);
            const auto seq = shift_path(placed.shape, Coloring(std::move(local)), shifted_pair(placed, t, c));
            for (std::size_t i = 0; i + 1 < seq.size(); ++i)
                push(placed.vertices[seq[i].vertex], seq[i].new_color);
        }
        push(t, c);
        return true;
    }

    void require(bool ok, const std::string & what)
    {
        if (!ok)
            throw std::logic_error("np_witness: could not " + what);
    }

    const RecolorSequence & steps() const { return steps_; }

private:
    std::pair<Color, Color> shifted_pair(const EmbeddedPath & placed, Vertex t, Color c) const
    {
        const Vertex first = placed.vertices.front();
        const Vertex last = placed.vertices.back();
        return {first == t ? c : current_[first], last == t ? c : current_[last]};
    }

    void push(Vertex v, Color c)
    {
        steps_.push_back({v, c});
        current_[v] = c;
    }

    const NpInstance & np_;
    const Graph & graph_;
    const ColorLists & lists_;
    std::vector<Color> current_;
    std::vector<std::vector<std::size_t>> incident_;
    std::vector<char> internal_;
    RecolorSequence steps_;
};

} // namespace detail

/// Recoloring sequence from alpha to beta built from a proper 3-coloring of
/// the source graph: move the source vertices to the 3-coloring, push every
/// z off color 4, move c to 4, swap a and b through color 3, then undo
/// everything except the swap.
inline RecolorSequence np_witness(const NpInstance & np, const Coloring & three_coloring)
{
    if (three_coloring.size() != np.source.size())
        throw DomainError("3-coloring has length " + std::to_string(three_coloring.size()) + ", source graph has "
                          + std::to_string(np.source.size()) + " vertices");
    if (auto bad = check_coloring(np.source, 3, three_coloring); !bad.empty())
        throw DomainError("not a proper 3-coloring: " + bad.front().describe());

    detail::NpWitnessBuilder builder(np);
    for (Vertex w = 0; w < np.source.size(); ++w)
        builder.require(builder.move(w, three_coloring[w]), "move source vertex " + std::to_string(w));
    for (const auto & g : np.gadgets) {
        const std::string at = " of gadget " + std::to_string(g.u) + "-" + std::to_string(g.v);
        builder.require(builder.move(g.x, 1) || builder.move(g.x, 2) || builder.move(g.y, 3), "free x or y" + at);
        builder.require(builder.move(g.z, 1) || builder.move(g.z, 2), "move z" + at);
    }
    builder.require(builder.move(np.c, 4), "move c to 4");
    const RecolorSequence forward = builder.steps();

    builder.require(builder.move(np.a, 3), "park a on 3");
    builder.require(builder.move(np.b, 1), "move b to 1");
    builder.require(builder.move(np.a, 2), "move a to 2");

    RecolorSequence out = builder.steps();
    const auto undo = reverse_sequence(np.instance.alpha, forward);
    out.insert(out.end(), undo.begin(), undo.end());
    return out;
}

} // namespace recolor::gadgets
