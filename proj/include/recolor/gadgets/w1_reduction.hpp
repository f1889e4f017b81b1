#pragma once

// Reduction from (t-1)-independent set: a copy of G joined completely to a
// copy of B_t, plus n+t+1 color-guard sets. Guard set C_i is an independent
// set of 2t+2t^2 vertices all colored i; it is too large to drain within the
// budget, so color i stays blocked on all of its neighbors. The row-to-column
// swap on B_t needs t-1 extra colors, which can only be borrowed from the
// colors of an independent set of G parked on color n+t+1.

#include <recolor/coloring.hpp>
#include <recolor/gadgets/bk.hpp>
#include <recolor/instance.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace recolor::gadgets {

struct W1Instance {
    Instance instance; // plain, k = n+t+1, ell = 2t+2t^2
    Graph source;
    std::size_t t = 0;
    std::vector<Vertex> g;                   // g_i, i = 1..n
    std::vector<Vertex> b;                   // b(i,j) at index (i-1)t + (j-1)
    std::vector<std::vector<Vertex>> guards; // C_1..C_{n+t+1}

    std::size_t n() const { return source.size(); }
    Color parking_color() const { return static_cast<Color>(n() + t + 1); }
    std::size_t guard_size() const { return 2 * t + 2 * t * t; }
};

/// Vertex layout: V_G (n), then V_B row by row (t^2), then C_1..C_{n+t+1}.
inline W1Instance w1_reduce(const Graph & source, std::size_t t)
{
    if (t == 0)
        throw DomainError("w1_reduce needs t >= 1");
    W1Instance w;
    w.source = source;
    w.t = t;
    const std::size_t n = source.size();
    const std::size_t k = n + t + 1;
    const std::size_t guard = w.guard_size();
    const std::size_t total = n + t * t + k * guard;

    Vertex next = 0;
    for (std::size_t i = 0; i < n; ++i)
        w.g.push_back(next++);
    for (std::size_t i = 0; i < t * t; ++i)
        w.b.push_back(next++);
    w.guards.resize(k);
    for (auto & set : w.guards)
        for (std::size_t i = 0; i < guard; ++i)
            set.push_back(next++);

    std::vector<Edge> edges;
    for (const Edge & e : source.edges())
        edges.emplace_back(w.g[e.u], w.g[e.v]);
    const Graph square = bk_graph(t);
    for (const Edge & e : square.edges())
        edges.emplace_back(w.b[e.u], w.b[e.v]);
    for (Vertex gv : w.g)
        for (Vertex bv : w.b)
            edges.emplace_back(gv, bv);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j + 1 < k; ++j)
            if (j != i)
                for (Vertex c : w.guards[j])
                    edges.emplace_back(w.g[i], c);
    for (Vertex bv : w.b)
        for (Vertex c : w.guards[k - 1])
            edges.emplace_back(bv, c);

    std::vector<Color> alpha(total), beta(total);
    auto & roles = w.instance.roles;
    for (std::size_t i = 0; i < n; ++i) {
        alpha[w.g[i]] = beta[w.g[i]] = static_cast<Color>(i + 1);
        roles[w.g[i]] = "g:" + std::to_string(i + 1);
    }
    for (std::size_t i = 1; i <= t; ++i)
        for (std::size_t j = 1; j <= t; ++j) {
            const Vertex v = w.b[(i - 1) * t + (j - 1)];
            alpha[v] = static_cast<Color>(n + i);
            beta[v] = static_cast<Color>(n + j);
            roles[v] = "b:" + std::to_string(i) + "," + std::to_string(j);
        }
    for (std::size_t i = 0; i < k; ++i)
        for (Vertex c : w.guards[i]) {
            alpha[c] = beta[c] = static_cast<Color>(i + 1);
            roles[c] = "guard:" + std::to_string(i + 1);
        }

    w.instance.graph = Graph(total, std::move(edges));
    w.instance.k = static_cast<Color>(k);
    w.instance.ell = guard;
    w.instance.alpha = Coloring(std::move(alpha));
    w.instance.beta = Coloring(std::move(beta));
    return w;
}

/// Witness from an independent set S of size t-1 (0-based source vertices):
/// park S on color n+t+1, swap B_t from rows to columns borrowing the colors
/// of S as spares, then bring S back.
inline RecolorSequence w1_witness(const W1Instance & w, std::vector<Vertex> independent)
{
    std::sort(independent.begin(), independent.end());
    if (independent.size() != w.t - 1)
        throw DomainError("independent set must have exactly t-1 = " + std::to_string(w.t - 1) + " vertices");
    if (std::adjacent_find(independent.begin(), independent.end()) != independent.end())
        throw DomainError("independent set has repeated vertices");
    for (Vertex s : independent)
        if (s >= w.n())
            throw DomainError("vertex " + std::to_string(s) + " is not a source vertex");
    for (std::size_t i = 0; i < independent.size(); ++i)
        for (std::size_t j = i + 1; j < independent.size(); ++j)
            if (w.source.adjacent(independent[i], independent[j]))
                throw DomainError("vertices " + std::to_string(independent[i] + 1) + " and "
                                  + std::to_string(independent[j] + 1) + " are adjacent");

    RecolorSequence seq;
    for (Vertex s : independent)
        seq.push_back({w.g[s], w.parking_color()});

    std::vector<Color> base, spare;
    for (std::size_t i = 1; i <= w.t; ++i)
        base.push_back(static_cast<Color>(w.n() + i));
    for (Vertex s : independent)
        spare.push_back(static_cast<Color>(s + 1));
    for (const auto & step : bk_sequence(w.t, base, spare))
        seq.push_back({w.b[step.vertex], step.new_color});

    for (Vertex s : independent)
        seq.push_back({w.g[s], static_cast<Color>(s + 1)});
    return seq;
}

/// Whether every coloring along seq keeps g_i in {i, n+t+1} and keeps V_B
/// off n+t+1. Throws DomainError when seq is longer than the budget or has a
/// malformed step (vertex out of range, color outside 1..k, no-op). Conflicts
/// are not checked here; use verify_sequence for that.
inline bool colorguard_check(const W1Instance & w, const RecolorSequence & seq)
{
    const Instance & inst = w.instance;
    if (seq.size() > inst.ell)
        throw DomainError("sequence of length " + std::to_string(seq.size()) + " exceeds the budget "
                          + std::to_string(inst.ell));
    try {
        Coloring gamma = inst.alpha;
        for (const auto & step : seq) {
            if (step.new_color > inst.k)
                throw DomainError("color " + std::to_string(step.new_color) + " outside the palette");
            gamma = apply_step(gamma, step);
        }
    } catch (const StructuralError & e) {
        throw DomainError(std::string("sequence does not apply: ") + e.what());
    }

    std::vector<Color> gamma(inst.alpha.values().begin(), inst.alpha.values().end());
    const auto ok = [&] {
        for (std::size_t i = 0; i < w.n(); ++i) {
            const Color c = gamma[w.g[i]];
            if (c != static_cast<Color>(i + 1) && c != w.parking_color())
                return false;
        }
        for (Vertex bv : w.b)
            if (gamma[bv] == w.parking_color())
                return false;
        return true;
    };
    if (!ok())
        return false;
    for (const auto & step : seq) {
        gamma[step.vertex] = step.new_color;
        if (!ok())
            return false;
    }
    return true;
}

} // namespace recolor::gadgets
