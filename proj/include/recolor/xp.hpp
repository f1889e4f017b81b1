#pragma once

// Depth-bounded branching: from the current coloring try every proper
// single-vertex recoloring and recurse, up to the length budget. At most
// sum_{d<=ell} (kn)^d colorings are generated, polynomial for fixed ell.

#include <recolor/coloring.hpp>
#include <recolor/graph.hpp>
#include <recolor/limits.hpp>

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace recolor {

struct XpOptions {
    /// Skip colorings already expanded in the current pass with at least as
    /// much remaining depth. Off keeps the plain memo-free recursion.
    bool visited_pruning = false;
    /// `node_cap` bounds the colorings generated over all passes.
    SearchLimits limits;
};

struct XpResult {
    SearchStatus status = SearchStatus::not_found;
    std::optional<RecolorSequence> witness;
    std::size_t generated = 0;       // colorings generated in the last pass, root included
    std::size_t total_generated = 0; // over every deepening pass
};

namespace detail {

class XpSearch {
public:
    XpSearch(const Graph & graph, const ColorLists & lists, const Coloring & alpha, const Coloring & beta,
             const XpOptions & options)
        : graph_(graph), lists_(lists), beta_(beta), options_(options),
          current_(alpha.values().begin(), alpha.values().end())
    {
        for (Vertex v = 0; v < graph.size(); ++v)
            mismatches_ += current_[v] != beta[v];
    }

    /// One depth-limited pass; true when beta was reached.
    bool pass(std::size_t depth)
    {
        generated_ = 1;
        ++total_;
        path_.clear();
        memo_.clear();
        cut_ = false;
        return descend(depth);
    }

    bool aborted() const { return aborted_; }
    /// False when the last pass never hit its depth bound: deeper passes
    /// would explore the same tree.
    bool cut() const { return cut_; }
    std::size_t generated() const { return generated_; }
    std::size_t total() const { return total_; }
    const RecolorSequence & path() const { return path_; }

private:
    bool descend(std::size_t depth)
    {
        if (mismatches_ == 0)
            return true;
        if (depth == 0) {
            cut_ = true;
            return false;
        }
        if (options_.visited_pruning) {
            std::string key(reinterpret_cast<const char *>(current_.data()), current_.size() * sizeof(Color));
            auto [it, inserted] = memo_.emplace(std::move(key), depth);
            if (!inserted) {
                if (it->second >= depth)
                    return false;
                it->second = depth;
            }
        }
        for (Vertex v = 0; v < graph_.size(); ++v) {
            const Color old = current_[v];
            bool done = false;
            lists_[v].for_each([&](Color c) {
                if (done || aborted_ || c == old)
                    return;
                for (Vertex w : graph_.neighbors(v))
                    if (current_[w] == c)
                        return;
                if (!count_node()) {
                    aborted_ = true;
                    return;
                }
                set(v, c);
                path_.push_back({v, c});
                if (descend(depth - 1)) {
                    done = true;
                    return;
                }
                path_.pop_back();
                set(v, old);
            });
            if (done)
                return true;
            if (aborted_)
                return false;
        }
        return false;
    }

    bool count_node()
    {
        ++generated_;
        ++total_;
        if (options_.limits.node_cap && total_ > *options_.limits.node_cap)
            return false;
        if ((total_ & 0xffff) == 0 && options_.limits.past_deadline())
            return false;
        return true;
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
    const XpOptions & options_;
    std::vector<Color> current_;
    std::size_t mismatches_ = 0;
    RecolorSequence path_;
    std::size_t generated_ = 0;
    std::size_t total_ = 0;
    bool aborted_ = false;
    bool cut_ = false;
    std::unordered_map<std::string, std::size_t> memo_;
};

} // namespace detail

/// A recoloring sequence of length <= ell if one exists. Iterative deepening
/// over the depth bound, so the witness found is a shortest one.
inline XpResult solve_xp(const Graph & graph, const ColorLists & lists, const Coloring & alpha,
                         const Coloring & beta, std::size_t ell, const XpOptions & options = {})
{
    detail::require_length(graph, alpha, "alpha");
    detail::require_length(graph, beta, "beta");
    detail::require_lists(graph, lists);

    detail::XpSearch search(graph, lists, alpha, beta, options);
    XpResult out;
    for (std::size_t depth = 0; depth <= ell; ++depth) {
        const bool hit = search.pass(depth);
        out.generated = search.generated();
        out.total_generated = search.total();
        if (search.aborted()) {
            out.status = SearchStatus::budget_exhausted;
            return out;
        }
        if (hit) {
            out.status = SearchStatus::found;
            out.witness = search.path();
            return out;
        }
        if (!search.cut())
            break;
    }
    return out;
}

inline XpResult solve_xp(const Graph & graph, Color k, const Coloring & alpha, const Coloring & beta,
                         std::size_t ell, const XpOptions & options = {})
{
    return solve_xp(graph, ColorLists::full(graph.size(), k), alpha, beta, ell, options);
}

} // namespace recolor
