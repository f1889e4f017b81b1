#pragma once

#include <recolor/types.hpp>

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace recolor {

/// Undirected edge, normalized so that u < v.
struct Edge {
    Vertex u;
    Vertex v;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t n) : adjacency_(n) {}

    /// Throws StructuralError on loops, duplicate edges or endpoints >= n.
    Graph(std::size_t n, std::vector<Edge> edges) : adjacency_(n), edges_(std::move(edges))
    {
        for (const Edge & e : edges_) {
            if (e.u == e.v)
                throw StructuralError("self-loop at vertex " + std::to_string(e.u));
            if (e.v >= n)
                throw StructuralError("edge endpoint " + std::to_string(e.v) + " out of range for "
                                      + std::to_string(n) + " vertices");
        }
        std::sort(edges_.begin(), edges_.end());
        auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        if (dup != edges_.end())
            throw StructuralError("duplicate edge " + std::to_string(dup->u) + "-"
                                  + std::to_string(dup->v));
        for (const Edge & e : edges_) {
            adjacency_[e.u].push_back(e.v);
            adjacency_[e.v].push_back(e.u);
        }
        for (auto & nbrs : adjacency_)
            std::sort(nbrs.begin(), nbrs.end());
    }

    std::size_t size() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    /// Sorted, normalized edge list.
    const std::vector<Edge> & edges() const { return edges_; }

    /// Neighbors of v in ascending order.
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }

    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

    bool adjacent(Vertex a, Vertex b) const
    {
        const auto & nbrs = adjacency_[a];
        return std::binary_search(nbrs.begin(), nbrs.end(), b);
    }

    /// Subgraph induced by `keep` (which must be sorted and duplicate-free).
    /// Vertex keep[i] of this graph becomes vertex i of the result.
    Graph induced(std::span<const Vertex> keep) const
    {
        std::vector<Vertex> index(size(), static_cast<Vertex>(-1));
        for (std::size_t i = 0; i < keep.size(); ++i)
            index[keep[i]] = static_cast<Vertex>(i);
        std::vector<Edge> sub;
        for (const Edge & e : edges_)
            if (index[e.u] != static_cast<Vertex>(-1) && index[e.v] != static_cast<Vertex>(-1))
                sub.emplace_back(index[e.u], index[e.v]);
        return Graph(keep.size(), std::move(sub));
    }

    friend bool operator==(const Graph & a, const Graph & b)
    {
        return a.size() == b.size() && a.edges_ == b.edges_;
    }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
};

} // namespace recolor
