#pragma once

// Two-stage branching for bounded-length recoloring, FPT in k + ell.
//
// Stage one guesses, vertex by vertex, the set of colors each recolored
// vertex will use (its used-color list). A vertex has to be recolored when
// alpha and beta disagree on it, or when a neighbor's guessed list contains
// its current color. Branches whose guessed lists already account for more
// than ell recolorings are dropped. Once no vertex is pending, the guessed
// lists are handed to a plain list-recoloring search on the induced subgraph
// of guessed vertices; every other vertex keeps its color throughout.

#include <recolor/coloring.hpp>
#include <recolor/graph.hpp>
#include <recolor/limits.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace recolor {

struct ListRecolorResult {
    SearchStatus status = SearchStatus::not_found;
    std::optional<RecolorSequence> witness;
    std::size_t calls = 0; // recursive calls, root included
};

namespace detail {

class ListRecolorSearch {
public:
    ListRecolorSearch(const Graph & graph, const ColorLists & lists, const Coloring & alpha, const Coloring & beta,
                      const SearchLimits & limits)
        : graph_(graph), lists_(lists), beta_(beta), limits_(limits),
          current_(alpha.values().begin(), alpha.values().end())
    {
        for (Vertex v = 0; v < graph.size(); ++v)
            mismatches_ += current_[v] != beta[v];
    }

    bool run(std::size_t budget) { return descend(budget); }

    bool aborted() const { return aborted_; }
    std::size_t calls() const { return calls_; }
    const RecolorSequence & path() const { return path_; }

private:
    bool descend(std::size_t budget)
    {
        ++calls_;
        if (limits_.node_cap && calls_ > *limits_.node_cap)
            aborted_ = true;
        if ((calls_ & 0xffff) == 0 && limits_.past_deadline())
            aborted_ = true;
        if (aborted_)
            return false;

        if (mismatches_ == 0)
            return true;
        if (budget == 0)
            return false;
        for (Vertex x = 0; x < graph_.size(); ++x) {
            const Color old = current_[x];
            bool done = false;
            lists_[x].for_each([&](Color c) {
                if (done || aborted_ || c == old)
                    return;
                for (Vertex w : graph_.neighbors(x))
                    if (current_[w] == c)
                        return;
                set(x, c);
                path_.push_back({x, c});
                if (descend(budget - 1)) {
                    done = true;
                    return;
                }
                path_.pop_back();
                set(x, old);
            });
            if (done)
                return true;
            if (aborted_)
                return false;
        }
        return false;
    }

    void set(Vertex v, Color c)
    {
        mismatches_ -= current_[v] != beta_[v];
        current_[v] = c;
        mismatches_ += current_[v] != beta_[v];
    }

    const Graph & graph_;
    const ColorLists & lists_;
    const Coloring & beta_;
    const SearchLimits & limits_;
    std::vector<Color> current_;
    std::size_t mismatches_ = 0;
    RecolorSequence path_;
    std::size_t calls_ = 0;
    bool aborted_ = false;
};

} // namespace detail

/// Is there an L-recoloring sequence of length <= ell from alpha to beta?
/// Plain depth-ell branching over single-vertex recolorings within the lists,
/// no memoization. The witness is the first one found, not necessarily shortest.
/// `limits.node_cap` bounds the number of recursive calls.
inline ListRecolorResult list_recolor(const Graph & graph, const ColorLists & lists, const Coloring & alpha,
                                      const Coloring & beta, std::size_t ell, const SearchLimits & limits = {})
{
    detail::require_length(graph, alpha, "alpha");
    detail::require_length(graph, beta, "beta");
    detail::require_lists(graph, lists);

    detail::ListRecolorSearch search(graph, lists, alpha, beta, limits);
    ListRecolorResult out;
    const bool hit = search.run(ell);
    out.calls = search.calls();
    if (search.aborted())
        out.status = SearchStatus::budget_exhausted;
    else if (hit) {
        out.status = SearchStatus::found;
        out.witness = search.path();
    }
    return out;
}

/// Upper bound of the subset guess |U| in the branching step.
enum class SubsetBound {
    corrected, // 2 <= |U| <= ell + 1
    literal,   // 2 <= |U| <= ell, which misses single-vertex instances
};

#ifdef RECOLOR_LITERAL_SUBSET_BOUND
inline constexpr SubsetBound default_subset_bound = SubsetBound::literal;
#else
inline constexpr SubsetBound default_subset_bound = SubsetBound::corrected;
#endif

struct FptOptions {
    SubsetBound subset_bound = default_subset_bound;
    /// Check the pending/guessed-set invariants on every recursive call and
    /// throw std::logic_error when one fails.
    bool check_invariants = false;
    SearchLimits limits; // deadline only; node_cap is ignored
};

struct FptStats {
    std::size_t recursive_calls = 0;      // guessing-stage calls, root included
    std::size_t list_recolor_calls = 0;   // base cases reached
    std::size_t list_recolor_nodes = 0;   // recursive calls inside list_recolor
    std::size_t max_depth = 0;            // guessing-stage depth, root = 0
    std::size_t max_base_weight = 0;      // max sum(|L(v)|-1) at a base case
    bool weight_monotone = true;          // every branch increased sum(|L(v)|-1)
};

struct FptResult {
    SearchStatus status = SearchStatus::not_found;
    std::optional<RecolorSequence> witness;
    FptStats stats;
};

/// Pending set A, guessed set B and the guessed used-color lists.
struct GuessState {
    std::vector<char> pending; // A
    std::vector<char> guessed; // B
    std::vector<ColorSet> lists; // meaningful on B only

    std::size_t weight() const
    {
        std::size_t w = 0;
        for (std::size_t v = 0; v < guessed.size(); ++v)
            if (guessed[v])
                w += lists[v].size() - 1;
        return w;
    }
};

/// Throws std::logic_error unless: A and B are disjoint; a vertex outside B
/// is pending exactly when alpha and beta disagree on it or a guessed
/// neighbor's list holds its alpha color; every guessed list contains both
/// endpoint colors and has at least two members.
inline void check_guess_invariants(const Graph & graph, const Coloring & alpha, const Coloring & beta,
                                   const GuessState & state)
{
    for (Vertex u = 0; u < graph.size(); ++u) {
        if (state.pending[u] && state.guessed[u])
            throw std::logic_error("vertex " + std::to_string(u) + " is both pending and guessed");
        if (state.guessed[u]) {
            const ColorSet & l = state.lists[u];
            if (!l.contains(alpha[u]) || !l.contains(beta[u]) || l.size() < 2)
                throw std::logic_error("guessed list of vertex " + std::to_string(u) + " is malformed");
            continue;
        }
        bool forced = alpha[u] != beta[u];
        for (Vertex w : graph.neighbors(u))
            if (state.guessed[w] && state.lists[w].contains(alpha[u]))
                forced = true;
        if (forced != static_cast<bool>(state.pending[u]))
            throw std::logic_error("vertex " + std::to_string(u) + (forced ? " must be" : " must not be")
                                   + " pending");
    }
}

/// 2^{k(ell+1)}, saturating; the bound on guessing-stage calls.
inline double fpt_call_bound(Color k, std::size_t ell)
{
    return std::pow(2.0, static_cast<double>(k) * static_cast<double>(ell + 1));
}

namespace detail {

class FptSearch {
public:
    FptSearch(const Graph & graph, const ColorLists & lists, const Coloring & alpha, const Coloring & beta,
              std::size_t ell, const FptOptions & options)
        : graph_(graph), lists_(lists), alpha_(alpha), beta_(beta), ell_(ell), options_(options)
    {
    }

    std::optional<RecolorSequence> run(const std::vector<Vertex> & differing)
    {
        GuessState state;
        state.pending.assign(graph_.size(), 0);
        state.guessed.assign(graph_.size(), 0);
        state.lists.assign(graph_.size(), ColorSet{});
        for (Vertex v : differing)
            state.pending[v] = 1;
        return recurse(state, 0, 0);
    }

    const FptStats & stats() const { return stats_; }
    bool aborted() const { return aborted_; }

private:
    std::optional<RecolorSequence> recurse(const GuessState & state, std::size_t depth, std::size_t parent_weight)
    {
        ++stats_.recursive_calls;
        stats_.max_depth = std::max(stats_.max_depth, depth);
        if (options_.check_invariants)
            check_guess_invariants(graph_, alpha_, beta_, state);
        if ((stats_.recursive_calls & 0x3ff) == 0 && options_.limits.past_deadline())
            aborted_ = true;
        if (aborted_)
            return std::nullopt;

        const std::size_t weight = state.weight();
        if (depth > 0 && weight <= parent_weight)
            stats_.weight_monotone = false;
        if (weight > ell_)
            return std::nullopt;

        const auto chosen = std::find(state.pending.begin(), state.pending.end(), 1);
        if (chosen == state.pending.end())
            return base_case(state, weight);

        const auto v = static_cast<Vertex>(chosen - state.pending.begin());
        for (const ColorSet & u : candidate_lists(v)) {
            GuessState next = state;
            next.lists[v] = u;
            next.guessed[v] = 1;
            next.pending[v] = 0;
            for (Vertex w : graph_.neighbors(v))
                if (!state.pending[w] && !state.guessed[w] && u.contains(alpha_[w]))
                    next.pending[w] = 1;
            if (auto found = recurse(next, depth + 1, weight))
                return found;
            if (aborted_)
                return std::nullopt;
        }
        return std::nullopt;
    }

    /// Subsets U of L(v) with {alpha(v), beta(v)} in U and 2 <= |U| <= bound,
    /// ordered by size, then lexicographically.
    std::vector<ColorSet> candidate_lists(Vertex v) const
    {
        const std::size_t bound = options_.subset_bound == SubsetBound::corrected ? ell_ + 1 : ell_;
        ColorSet base{alpha_[v], beta_[v]};
        std::vector<Color> extras;
        lists_[v].for_each([&](Color c) {
            if (!base.contains(c))
                extras.push_back(c);
        });

        std::vector<std::vector<Color>> subsets;
        const std::size_t max_extra = bound >= base.size() ? std::min(extras.size(), bound - base.size()) : 0;
        if (bound >= base.size()) {
            // every subset of `extras` with at most max_extra members
            std::vector<Color> pick;
            auto grow = [&](auto && self, std::size_t from) -> void {
                ColorSet u = base;
                for (Color c : pick)
                    u.insert(c);
                if (u.size() >= 2)
                    subsets.push_back(u.to_vector());
                if (pick.size() == max_extra)
                    return;
                for (std::size_t i = from; i < extras.size(); ++i) {
                    pick.push_back(extras[i]);
                    self(self, i + 1);
                    pick.pop_back();
                }
            };
            grow(grow, 0);
        }
        std::sort(subsets.begin(), subsets.end(), [](const auto & a, const auto & b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        std::vector<ColorSet> out;
        out.reserve(subsets.size());
        for (const auto & s : subsets)
            out.push_back(ColorSet::from(s));
        return out;
    }

    std::optional<RecolorSequence> base_case(const GuessState & state, std::size_t weight)
    {
        ++stats_.list_recolor_calls;
        stats_.max_base_weight = std::max(stats_.max_base_weight, weight);

        std::vector<Vertex> members;
        for (Vertex v = 0; v < graph_.size(); ++v)
            if (state.guessed[v])
                members.push_back(v);

        const Graph sub = graph_.induced(members);
        std::vector<ColorSet> sub_lists;
        std::vector<Color> sub_alpha, sub_beta;
        for (Vertex v : members) {
            sub_lists.push_back(state.lists[v]);
            sub_alpha.push_back(alpha_[v]);
            sub_beta.push_back(beta_[v]);
        }
        SearchLimits inner;
        inner.deadline = options_.limits.deadline;
        auto result = list_recolor(sub, ColorLists(lists_.palette(), std::move(sub_lists)),
                                   Coloring(std::move(sub_alpha)), Coloring(std::move(sub_beta)), ell_, inner);
        stats_.list_recolor_nodes += result.calls;
        if (result.status == SearchStatus::budget_exhausted)
            aborted_ = true;
        if (!result.witness)
            return std::nullopt;
        RecolorSequence lifted;
        lifted.reserve(result.witness->size());
        for (const auto & step : *result.witness)
            lifted.push_back({members[step.vertex], step.new_color});
        return lifted;
    }

    const Graph & graph_;
    const ColorLists & lists_;
    const Coloring & alpha_;
    const Coloring & beta_;
    std::size_t ell_;
    const FptOptions & options_;
    FptStats stats_;
    bool aborted_ = false;
};

} // namespace detail

/// A recoloring sequence of length <= ell from alpha to beta, if one exists,
/// found by guessing used-color lists and then ordering the recolorings.
/// Guessed lists are drawn from each vertex's own list, so list instances are
/// handled as well as plain k-colorings.
inline FptResult recolor(const Graph & graph, const ColorLists & lists, const Coloring & alpha,
                         const Coloring & beta, std::size_t ell, const FptOptions & options = {})
{
    detail::require_length(graph, alpha, "alpha");
    detail::require_length(graph, beta, "beta");
    detail::require_lists(graph, lists);

    FptResult out;
    const auto differing = diff_set(alpha, beta);
    if (differing.size() > ell)
        return out;
    if (differing.empty()) {
        out.status = SearchStatus::found;
        out.witness = RecolorSequence{};
        return out;
    }
    detail::FptSearch search(graph, lists, alpha, beta, ell, options);
    auto found = search.run(differing);
    out.stats = search.stats();
    if (found) {
        out.status = SearchStatus::found;
        out.witness = std::move(found);
    } else if (search.aborted()) {
        out.status = SearchStatus::budget_exhausted;
    }
    return out;
}

inline FptResult recolor(const Graph & graph, Color k, std::size_t ell, const Coloring & alpha,
                         const Coloring & beta, const FptOptions & options = {})
{
    return recolor(graph, ColorLists::full(graph.size(), k), alpha, beta, ell, options);
}

} // namespace recolor
