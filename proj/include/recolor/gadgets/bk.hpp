#pragma once

// B_k: vertices b(i,j) for i, j in 1..k, adjacent iff they differ in both
// row and column (the complement of the k x k rook's graph). Turning the row
// coloring into the column coloring needs 2k-1 colors.

#include <recolor/coloring.hpp>
#include <recolor/graph.hpp>

#include <span>
#include <string>
#include <vector>

namespace recolor::gadgets {

struct BkInstance {
    std::size_t k = 0;
    Graph graph;
    Coloring alpha; // b(i,j) -> i
    Coloring beta;  // b(i,j) -> j

    /// Vertex id of b(i,j), 1-based row and column.
    Vertex vertex(std::size_t row, std::size_t column) const
    {
        return static_cast<Vertex>((row - 1) * k + (column - 1));
    }
    std::size_t row(Vertex v) const { return v / k + 1; }
    std::size_t column(Vertex v) const { return v % k + 1; }
};

inline Graph bk_graph(std::size_t k)
{
    std::vector<Edge> edges;
    const auto id = [k](std::size_t i, std::size_t j) { return static_cast<Vertex>(i * k + j); };
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i2 = i + 1; i2 < k; ++i2)
                for (std::size_t j2 = 0; j2 < k; ++j2)
                    if (j2 != j)
                        edges.emplace_back(id(i, j), id(i2, j2));
    return Graph(k * k, std::move(edges));
}

/// Row i gets colors[i-1].
inline Coloring bk_row_coloring(std::size_t k, std::span<const Color> colors)
{
    std::vector<Color> out(k * k);
    for (std::size_t v = 0; v < k * k; ++v)
        out[v] = colors[v / k];
    return Coloring(std::move(out));
}

/// Column j gets colors[j-1].
inline Coloring bk_column_coloring(std::size_t k, std::span<const Color> colors)
{
    std::vector<Color> out(k * k);
    for (std::size_t v = 0; v < k * k; ++v)
        out[v] = colors[v % k];
    return Coloring(std::move(out));
}

inline BkInstance build_bk(std::size_t k)
{
    if (k == 0)
        throw DomainError("B_k needs k >= 1");
    std::vector<Color> identity(k);
    for (std::size_t i = 0; i < k; ++i)
        identity[i] = static_cast<Color>(i + 1);
    BkInstance out;
    out.k = k;
    out.graph = bk_graph(k);
    out.alpha = bk_row_coloring(k, identity);
    out.beta = bk_column_coloring(k, identity);
    return out;
}

/// Recoloring sequence on B_k from the row coloring by `base` to the column
/// coloring by `base`, using only base and spare colors. Every vertex of the
/// first k-1 columns first moves to its column's spare color; then column k,
/// then columns 1..k-1 move to their base color. Length 2k^2 - k - 1.
inline RecolorSequence bk_sequence(std::size_t k, std::span<const Color> base, std::span<const Color> spare)
{
    if (k == 0)
        throw DomainError("B_k needs k >= 1");
    if (base.size() != k || spare.size() != k - 1)
        throw DomainError("bk_sequence needs " + std::to_string(k) + " base and " + std::to_string(k - 1)
                          + " spare colors");
    ColorSet seen;
    for (auto group : {base, spare})
        for (Color c : group) {
            if (c == 0)
                throw DomainError("color 0 is not a color");
            if (seen.contains(c))
                throw DomainError("color " + std::to_string(c) + " repeated among base/spare colors");
            seen.insert(c);
        }

    const auto id = [k](std::size_t i, std::size_t j) { return static_cast<Vertex>((i - 1) * k + (j - 1)); };
    RecolorSequence seq;
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = 1; j + 1 <= k; ++j)
            seq.push_back({id(i, j), spare[j - 1]});
    for (std::size_t i = 1; i <= k; ++i)
        if (i != k)
            seq.push_back({id(i, k), base[k - 1]});
    for (std::size_t j = 1; j + 1 <= k; ++j)
        for (std::size_t i = 1; i <= k; ++i)
            seq.push_back({id(i, j), base[j - 1]});
    return seq;
}

} // namespace recolor::gadgets
