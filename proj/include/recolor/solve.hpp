#pragma once

// One entry point over the three decision procedures.

#include <recolor/fpt.hpp>
#include <recolor/instance.hpp>
#include <recolor/oracle.hpp>
#include <recolor/xp.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace recolor {

enum class Algorithm { oracle, xp, fpt };

inline const char * to_string(Algorithm a)
{
    switch (a) {
    case Algorithm::oracle: return "oracle";
    case Algorithm::xp: return "xp";
    case Algorithm::fpt: return "fpt";
    }
    return "?";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view name)
{
    if (name == "oracle")
        return Algorithm::oracle;
    if (name == "xp")
        return Algorithm::xp;
    if (name == "fpt")
        return Algorithm::fpt;
    return std::nullopt;
}

struct SolveOptions {
    Algorithm algorithm = Algorithm::fpt;
    SearchLimits limits;        // node_cap applies to oracle and xp
    bool xp_pruning = false;
    SubsetBound subset_bound = default_subset_bound;
};

struct SolveOutcome {
    SearchStatus status = SearchStatus::not_found;
    std::optional<RecolorSequence> witness;
    std::size_t counter = 0; // oracle: states explored; xp: colorings generated; fpt: recursive calls
};

/// Decides the instance with the chosen algorithm. For the oracle, a shortest
/// sequence longer than ell counts as not found.
inline SolveOutcome solve(const Instance & inst, const SolveOptions & options)
{
    const ColorLists lists = inst.effective_lists();
    SolveOutcome out;
    switch (options.algorithm) {
    case Algorithm::oracle: {
        auto r = oracle_distance(inst.graph, lists, inst.alpha, inst.beta, options.limits);
        out.counter = r.explored;
        out.status = r.status;
        if (r.distance && *r.distance <= inst.ell)
            out.witness = std::move(r.witness);
        else if (r.status == SearchStatus::found)
            out.status = SearchStatus::not_found;
        break;
    }
    case Algorithm::xp: {
        XpOptions xo;
        xo.visited_pruning = options.xp_pruning;
        xo.limits = options.limits;
        auto r = solve_xp(inst.graph, lists, inst.alpha, inst.beta, inst.ell, xo);
        out.counter = r.total_generated;
        out.status = r.status;
        out.witness = std::move(r.witness);
        break;
    }
    case Algorithm::fpt: {
        FptOptions fo;
        fo.subset_bound = options.subset_bound;
        fo.limits = options.limits;
        auto r = recolor(inst.graph, lists, inst.alpha, inst.beta, inst.ell, fo);
        out.counter = r.stats.recursive_calls;
        out.status = r.status;
        out.witness = std::move(r.witness);
        break;
    }
    }
    return out;
}

} // namespace recolor
