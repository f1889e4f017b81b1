#pragma once

#include <chrono>
#include <cstddef>
#include <optional>

namespace recolor {

using Clock = std::chrono::steady_clock;

enum class SearchStatus {
    found,            // a witness exists within the requested bound
    not_found,        // exhaustive search proved no witness exists
    budget_exhausted, // node cap or deadline hit before a verdict
};

inline const char * to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::not_found: return "not_found";
    case SearchStatus::budget_exhausted: return "budget_exhausted";
    }
    return "?";
}

/// Resource guard shared by the searches. A missing field means unlimited.
struct SearchLimits {
    std::optional<std::size_t> node_cap;
    std::optional<Clock::time_point> deadline;

    bool past_deadline() const { return deadline && Clock::now() >= *deadline; }
};

inline constexpr std::size_t default_oracle_node_cap = 10'000'000;

} // namespace recolor
