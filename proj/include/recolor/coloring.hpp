#pragma once

#include <recolor/graph.hpp>
#include <recolor/types.hpp>

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace recolor {

/// A total assignment vertex -> color. Value type; never mutated in place.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {}
    Coloring(std::initializer_list<Color> colors) : colors_(colors) {}

    std::size_t size() const { return colors_.size(); }
    Color operator[](Vertex v) const { return colors_[v]; }
    std::span<const Color> values() const { return colors_; }

    /// Copy of this coloring with v set to c.
    Coloring with(Vertex v, Color c) const
    {
        auto copy = colors_;
        copy[v] = c;
        return Coloring(std::move(copy));
    }

    std::size_t distinct_colors() const
    {
        return ColorSet::from(colors_).size();
    }

    friend bool operator==(const Coloring &, const Coloring &) = default;

private:
    std::vector<Color> colors_;
};

inline std::string to_string(const Coloring & c)
{
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(c[static_cast<Vertex>(i)]);
    }
    return out + ")";
}

/// Per-vertex color lists over the palette {1..k}.
class ColorLists {
public:
    ColorLists() = default;

    /// Throws StructuralError when a list is empty or leaves the palette.
    ColorLists(Color palette, std::vector<ColorSet> lists) : palette_(palette), lists_(std::move(lists))
    {
        const ColorSet all = ColorSet::range(palette_);
        for (std::size_t v = 0; v < lists_.size(); ++v) {
            if (lists_[v].empty())
                throw StructuralError("empty color list at vertex " + std::to_string(v));
            if (!lists_[v].is_subset_of(all))
                throw StructuralError("color list " + to_string(lists_[v]) + " of vertex "
                                      + std::to_string(v) + " leaves the palette 1.."
                                      + std::to_string(palette_));
        }
    }

    /// Every vertex gets {1..k}.
    static ColorLists full(std::size_t n, Color k)
    {
        return ColorLists(k, std::vector<ColorSet>(n, ColorSet::range(k)));
    }

    Color palette() const { return palette_; }
    std::size_t size() const { return lists_.size(); }
    const ColorSet & operator[](Vertex v) const { return lists_[v]; }

    bool is_full() const
    {
        const ColorSet all = ColorSet::range(palette_);
        for (const auto & l : lists_)
            if (!(l == all))
                return false;
        return true;
    }

    friend bool operator==(const ColorLists &, const ColorLists &) = default;

private:
    Color palette_ = 0;
    std::vector<ColorSet> lists_;
};

struct RecolorStep {
    Vertex vertex;
    Color new_color;

    friend bool operator==(const RecolorStep &, const RecolorStep &) = default;
};

using RecolorSequence = std::vector<RecolorStep>;

/// A single reason why an assignment is not a proper (list-)coloring.
struct Violation {
    enum class Kind { conflict, out_of_range, out_of_list };

    Kind kind;
    Vertex u;
    Vertex v; // second endpoint for conflicts, equal to u otherwise
    Color color;

    std::string describe() const
    {
        switch (kind) {
        case Kind::conflict:
            return "conflict on edge " + std::to_string(u) + "-" + std::to_string(v)
                   + " (both colored " + std::to_string(color) + ")";
        case Kind::out_of_range:
            return "vertex " + std::to_string(u) + " has color " + std::to_string(color)
                   + " outside the palette";
        case Kind::out_of_list:
            return "vertex " + std::to_string(u) + " has color " + std::to_string(color)
                   + " outside its list";
        }
        return {};
    }

    friend bool operator==(const Violation &, const Violation &) = default;
};

namespace detail {

inline void require_length(const Graph & graph, const Coloring & gamma, const char * what)
{
    if (gamma.size() != graph.size())
        throw StructuralError(std::string(what) + " has length " + std::to_string(gamma.size())
                              + " but the graph has " + std::to_string(graph.size()) + " vertices");
}

inline void require_lists(const Graph & graph, const ColorLists & lists)
{
    if (lists.size() != graph.size())
        throw StructuralError("color lists cover " + std::to_string(lists.size())
                              + " vertices but the graph has " + std::to_string(graph.size()));
}

} // namespace detail

/// Every conflicting edge and every palette/list violation of gamma.
inline std::vector<Violation> check_coloring(const Graph & graph, const ColorLists & lists, const Coloring & gamma)
{
    detail::require_length(graph, gamma, "coloring");
    detail::require_lists(graph, lists);
    std::vector<Violation> out;
    for (Vertex v = 0; v < graph.size(); ++v) {
        const Color c = gamma[v];
        if (c == 0 || c > lists.palette())
            out.push_back({Violation::Kind::out_of_range, v, v, c});
        else if (!lists[v].contains(c))
            out.push_back({Violation::Kind::out_of_list, v, v, c});
    }
    for (const Edge & e : graph.edges())
        if (gamma[e.u] == gamma[e.v])
            out.push_back({Violation::Kind::conflict, e.u, e.v, gamma[e.u]});
    return out;
}

inline std::vector<Violation> check_coloring(const Graph & graph, Color k, const Coloring & gamma)
{
    return check_coloring(graph, ColorLists::full(graph.size(), k), gamma);
}

inline bool is_proper(const Graph & graph, const ColorLists & lists, const Coloring & gamma)
{
    return gamma.size() == graph.size() && check_coloring(graph, lists, gamma).empty();
}

/// gamma with one vertex recolored. Rejects out-of-range vertices and no-op steps.
inline Coloring apply_step(const Coloring & gamma, const RecolorStep & step)
{
    if (step.vertex >= gamma.size())
        throw StructuralError("step vertex " + std::to_string(step.vertex) + " out of range");
    if (step.new_color == 0)
        throw DomainError("color 0 is not a color");
    if (gamma[step.vertex] == step.new_color)
        throw DomainError("step recolors vertex " + std::to_string(step.vertex) + " to its current color "
                          + std::to_string(step.new_color));
    return gamma.with(step.vertex, step.new_color);
}

inline Coloring final_coloring(const Coloring & alpha, const RecolorSequence & seq)
{
    Coloring gamma = alpha;
    for (const auto & step : seq)
        gamma = apply_step(gamma, step);
    return gamma;
}

/// The sequence that undoes `seq`: same vertices in reverse order, each
/// step restoring the color held before the corresponding forward step.
inline RecolorSequence reverse_sequence(const Coloring & alpha, const RecolorSequence & seq)
{
    std::vector<Color> before;
    before.reserve(seq.size());
    Coloring gamma = alpha;
    for (const auto & step : seq) {
        before.push_back(gamma[step.vertex]);
        gamma = apply_step(gamma, step);
    }
    RecolorSequence out;
    out.reserve(seq.size());
    for (std::size_t i = seq.size(); i-- > 0;)
        out.push_back({seq[i].vertex, before[i]});
    return out;
}

struct SequenceVerdict {
    bool valid = false;
    std::optional<std::size_t> failing_step; // 0-based index of the first bad step
    std::string reason;

    explicit operator bool() const { return valid; }
};

/// VALID iff |seq| <= ell, every prefix yields a proper list-coloring, and
/// the final coloring is beta.
inline SequenceVerdict verify_sequence(const Graph & graph, const ColorLists & lists, const Coloring & alpha,
                                       const Coloring & beta, std::size_t ell, const RecolorSequence & seq)
{
    detail::require_length(graph, alpha, "start coloring");
    detail::require_length(graph, beta, "target coloring");
    detail::require_lists(graph, lists);

    if (auto bad = check_coloring(graph, lists, alpha); !bad.empty())
        return {false, std::nullopt, "start coloring is not proper: " + bad.front().describe()};
    if (auto bad = check_coloring(graph, lists, beta); !bad.empty())
        return {false, std::nullopt, "target coloring is not proper: " + bad.front().describe()};

    std::vector<Color> gamma(alpha.values().begin(), alpha.values().end());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const auto [v, c] = seq[i];
        const std::string at = "step " + std::to_string(i + 1) + ": ";
        if (i >= ell)
            return {false, i, at + "budget of " + std::to_string(ell) + " steps exceeded"};
        if (v >= graph.size())
            return {false, i, at + "vertex " + std::to_string(v) + " out of range"};
        if (c == gamma[v])
            return {false, i, at + "vertex " + std::to_string(v) + " already has color " + std::to_string(c)};
        if (c == 0 || c > lists.palette())
            return {false, i, at + "color " + std::to_string(c) + " outside the palette"};
        if (!lists[v].contains(c))
            return {false, i, at + "color " + std::to_string(c) + " not in the list of vertex " + std::to_string(v)};
        for (Vertex w : graph.neighbors(v))
            if (gamma[w] == c)
                return {false, i, at + "conflict on edge " + std::to_string(std::min(v, w)) + "-"
                                      + std::to_string(std::max(v, w)) + " (both colored " + std::to_string(c) + ")"};
        gamma[v] = c;
    }
    if (Coloring(std::move(gamma)) != beta)
        return {false, std::nullopt, "final coloring differs from the target"};
    return {true, std::nullopt, {}};
}

inline SequenceVerdict verify_sequence(const Graph & graph, Color k, const Coloring & alpha, const Coloring & beta,
                                       std::size_t ell, const RecolorSequence & seq)
{
    return verify_sequence(graph, ColorLists::full(graph.size(), k), alpha, beta, ell, seq);
}

/// Colors each vertex holds at some point while applying seq from alpha.
struct UsedColorLists {
    std::vector<ColorSet> used;

    /// Sum over vertices of (|U(v)| - 1); never exceeds the sequence length.
    std::size_t weight() const
    {
        std::size_t w = 0;
        for (const auto & u : used)
            w += u.size() - 1;
        return w;
    }
};

inline UsedColorLists used_color_lists(const Coloring & alpha, const RecolorSequence & seq)
{
    UsedColorLists out;
    out.used.resize(alpha.size());
    for (Vertex v = 0; v < alpha.size(); ++v)
        out.used[v].insert(alpha[v]);
    Coloring gamma = alpha;
    for (const auto & step : seq) {
        gamma = apply_step(gamma, step);
        out.used[step.vertex].insert(step.new_color);
    }
    return out;
}

/// Vertices on which alpha and beta differ, ascending.
inline std::vector<Vertex> diff_set(const Coloring & alpha, const Coloring & beta)
{
    if (alpha.size() != beta.size())
        throw StructuralError("colorings have different lengths");
    std::vector<Vertex> out;
    for (Vertex v = 0; v < alpha.size(); ++v)
        if (alpha[v] != beta[v])
            out.push_back(v);
    return out;
}

} // namespace recolor
