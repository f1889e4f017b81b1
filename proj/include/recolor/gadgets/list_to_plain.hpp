#pragma once

#include <recolor/instance.hpp>

#include <string>
#include <vector>

namespace recolor::gadgets {

/// Replaces color lists by anchor vertices: a clique x_1..x_k colored
/// x_i = i in both alpha and beta (frozen, since each anchor sees every other
/// color), plus an edge v - x_i for every color i missing from L(v). Distances
/// are unchanged. With k = 4 this is the usual K_4 construction.
inline Instance list_to_plain(const Instance & in, Color k)
{
    if (k < 4)
        throw DomainError("list_to_plain needs k >= 4");
    const ColorLists lists = in.effective_lists();
    const ColorSet four = ColorSet::range(4);
    for (Vertex v = 0; v < in.graph.size(); ++v)
        if (!lists[v].is_subset_of(four))
            throw DomainError("list " + to_string(lists[v]) + " of vertex " + std::to_string(v)
                              + " is not a subset of {1,2,3,4}");

    const std::size_t n = in.graph.size();
    std::vector<Edge> edges = in.graph.edges();
    const auto anchor = [n](Color i) { return static_cast<Vertex>(n + i - 1); };
    for (Color i = 1; i <= k; ++i)
        for (Color j = i + 1; j <= k; ++j)
            edges.emplace_back(anchor(i), anchor(j));
    for (Vertex v = 0; v < n; ++v)
        for (Color i = 1; i <= k; ++i)
            if (!lists[v].contains(i))
                edges.emplace_back(v, anchor(i));

    std::vector<Color> alpha(in.alpha.values().begin(), in.alpha.values().end());
    std::vector<Color> beta(in.beta.values().begin(), in.beta.values().end());
    for (Color i = 1; i <= k; ++i) {
        alpha.push_back(i);
        beta.push_back(i);
    }

    Instance out;
    out.graph = Graph(n + k, std::move(edges));
    out.k = k;
    out.ell = in.ell;
    out.alpha = Coloring(std::move(alpha));
    out.beta = Coloring(std::move(beta));
    out.roles = in.roles;
    for (Color i = 1; i <= k; ++i)
        out.roles[anchor(i)] = "anchor:" + std::to_string(i);
    return out;
}

} // namespace recolor::gadgets
