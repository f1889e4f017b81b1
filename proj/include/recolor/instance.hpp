#pragma once

#include <recolor/coloring.hpp>
#include <recolor/graph.hpp>

#include <map>
#include <optional>
#include <string>

namespace recolor {

/// A bounded-length recoloring question: can alpha reach beta in at most
/// `ell` single-vertex recolorings, staying a proper (list-)coloring?
struct Instance {
    Graph graph;
    Color k = 0;
    std::optional<ColorLists> lists; // absent: every vertex may use 1..k
    std::size_t ell = 0;
    Coloring alpha;
    Coloring beta;
    std::map<Vertex, std::string> roles; // generator metadata, optional

    ColorLists effective_lists() const
    {
        return lists ? *lists : ColorLists::full(graph.size(), k);
    }

    friend bool operator==(const Instance &, const Instance &) = default;
};

/// Throws StructuralError/DomainError unless alpha and beta are proper
/// list-respecting colorings of the right length.
inline void validate(const Instance & inst)
{
    if (inst.lists && inst.lists->palette() != inst.k)
        throw StructuralError("list palette does not match k");
    const ColorLists lists = inst.effective_lists();
    detail::require_lists(inst.graph, lists);
    for (auto [gamma, name] : {std::pair{&inst.alpha, "alpha"}, std::pair{&inst.beta, "beta"}}) {
        detail::require_length(inst.graph, *gamma, name);
        if (auto bad = check_coloring(inst.graph, lists, *gamma); !bad.empty())
            throw DomainError(std::string(name) + ": " + bad.front().describe());
    }
}

} // namespace recolor
