#pragma once

// Subcommand bodies for the `recolor` tool. Exit codes: 0 = YES/VALID,
// 1 = NO/INVALID, 2 = error or budget exhausted.

#include <recolor/gadgets/bk.hpp>
#include <recolor/gadgets/forbidding_path.hpp>
#include <recolor/gadgets/list_to_plain.hpp>
#include <recolor/gadgets/np_reduction.hpp>
#include <recolor/gadgets/w1_reduction.hpp>
#include <recolor/io.hpp>
#include <recolor/solve.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace recolor::cli {

inline constexpr int exit_yes = 0;
inline constexpr int exit_no = 1;
inline constexpr int exit_error = 2;

inline int run_solve(const Instance & inst, const SolveOptions & options, bool emit_witness, std::ostream & out,
                     std::ostream & err)
{
    const SolveOutcome outcome = solve(inst, options);
    switch (outcome.status) {
    case SearchStatus::budget_exhausted:
        err << "budget exhausted after " << outcome.counter << " units of work\n";
        return exit_error;
    case SearchStatus::not_found:
        out << "NO\n";
        return exit_no;
    case SearchStatus::found:
        out << "YES\n";
        if (emit_witness)
            out << io::serialize_sequence(*outcome.witness);
        return exit_yes;
    }
    return exit_error;
}

inline int run_solve(std::string_view instance_text, const SolveOptions & options, bool emit_witness,
                     std::ostream & out, std::ostream & err)
{
    try {
        return run_solve(io::parse_instance(instance_text), options, emit_witness, out, err);
    } catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
}

inline int run_verify(const Instance & inst, const RecolorSequence & seq, std::ostream & out)
{
    const auto verdict =
        verify_sequence(inst.graph, inst.effective_lists(), inst.alpha, inst.beta, inst.ell, seq);
    if (verdict) {
        out << "VALID (" << seq.size() << " steps, budget " << inst.ell << ")\n";
        return exit_yes;
    }
    out << "INVALID: " << verdict.reason << '\n';
    return exit_no;
}

inline int run_verify(std::string_view instance_text, std::string_view sequence_text, std::ostream & out,
                      std::ostream & err)
{
    try {
        const Instance inst = io::parse_instance(instance_text);
        const RecolorSequence seq = io::parse_sequence(sequence_text);
        return run_verify(inst, seq, out);
    } catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
}

struct Generated {
    Instance instance;
    std::optional<RecolorSequence> witness;
};

/// B_k with palette `colors` (default 2k-1) and budget `ell` (default 2k^2).
/// The witness uses base colors 1..k and spare colors k+1..2k-1.
inline Generated gen_bk(std::size_t k, std::optional<Color> colors, std::optional<std::size_t> ell)
{
    const auto bk = gadgets::build_bk(k);
    Generated g;
    g.instance.graph = bk.graph;
    g.instance.k = colors.value_or(static_cast<Color>(2 * k - 1));
    g.instance.ell = ell.value_or(2 * k * k);
    g.instance.alpha = bk.alpha;
    g.instance.beta = bk.beta;
    for (Vertex v = 0; v < bk.graph.size(); ++v)
        g.instance.roles[v] = "b:" + std::to_string(bk.row(v)) + "," + std::to_string(bk.column(v));
    validate(g.instance);

    std::vector<Color> base, spare;
    for (std::size_t i = 1; i <= k; ++i)
        base.push_back(static_cast<Color>(i));
    for (std::size_t i = 1; i < k; ++i)
        spare.push_back(static_cast<Color>(k + i));
    g.witness = gadgets::bk_sequence(k, base, spare);
    return g;
}

/// A forbidding path as a list instance over {1,2,3,4}. alpha and beta
/// extend the endpoint pairs `from` and `to` (default: the smallest
/// admissible pair, for both).
inline Generated gen_forbid(const ColorSet & lu, const ColorSet & lv, Color a, Color b,
                            std::optional<std::pair<Color, Color>> from, std::optional<std::pair<Color, Color>> to,
                            std::size_t ell)
{
    const auto fp = gadgets::build_forbidding_path(lu, lv, a, b);
    std::optional<std::pair<Color, Color>> smallest;
    lu.for_each([&](Color x) {
        lv.for_each([&](Color y) {
            if (!smallest && fp.admissible(x, y))
                smallest = std::pair{x, y};
        });
    });
    const auto start = from.value_or(*smallest);
    const auto goal = to.value_or(start);

    Generated g;
    g.instance.graph = fp.path;
    g.instance.k = 4;
    g.instance.lists = fp.lists;
    g.instance.ell = ell;
    g.instance.alpha = gadgets::extend_along_path(fp, start.first, start.second);
    g.instance.beta = gadgets::extend_along_path(fp, goal.first, goal.second);
    g.instance.roles[gadgets::ForbiddingPath::u] = "u";
    g.instance.roles[gadgets::ForbiddingPath::v] = "v";
    return g;
}

/// NP reduction; witness when a proper 3-coloring (1-based colors) is given.
/// `plain` replaces lists by anchor vertices (k = 4).
inline Generated gen_np(const Graph & source, const std::optional<Coloring> & three_coloring, bool plain)
{
    const auto np = gadgets::np_reduce(source);
    Generated g;
    g.instance = plain ? gadgets::list_to_plain(np.instance, 4) : np.instance;
    if (three_coloring)
        g.witness = gadgets::np_witness(np, *three_coloring);
    return g;
}

/// W[1] reduction; witness when an independent set of size t-1 is given.
inline Generated gen_w1(const Graph & source, std::size_t t, const std::optional<std::vector<Vertex>> & independent)
{
    const auto w = gadgets::w1_reduce(source, t);
    Generated g;
    g.instance = w.instance;
    if (independent)
        g.witness = gadgets::w1_witness(w, *independent);
    return g;
}

} // namespace recolor::cli
