#pragma once

#include <optional>

#include "twoclub/graph.hpp"
#include "twoclub/solution.hpp"

namespace twoclub {
namespace oracle {

/// Reference predicate check: does s induce a valid solution for the given
/// model? Robust and connected additionally require |s| >= t+1. For
/// hereditary sets of at most 12 vertices the common-neighbor
/// characterization is double-checked against the literal definition (every
/// deletion of at most t vertices leaves a subgraph of diameter two).
bool check_solution(const Graph& g, const VertexSet& s, ModelSpec spec);

/// Maximum solution by subset enumeration (descending size, first hit wins,
/// so ties resolve to the lexicographically smallest set). Guarded to n <= 16.
std::optional<Solution> brute_force_max(const Graph& g, ModelSpec spec);

} // namespace oracle
} // namespace twoclub
