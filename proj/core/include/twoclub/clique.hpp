#pragma once

#include <chrono>
#include <optional>

#include "twoclub/graph.hpp"

namespace twoclub {

/// Exact maximum clique (branch and bound with a greedy coloring bound).
VertexSet clique_max(const Graph& g);

/// Deadline-aware variant: on expiry returns the best clique found so far and
/// sets timed_out.
VertexSet clique_max(const Graph& g,
                     std::optional<std::chrono::steady_clock::time_point> deadline,
                     bool& timed_out);

} // namespace twoclub
