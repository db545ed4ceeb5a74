#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

#include "twoclub/graph.hpp"
#include "twoclub/reductions.hpp"
#include "twoclub/solution.hpp"

namespace twoclub {

struct Limits {
    std::optional<double> time_limit_s;
    std::optional<std::uint64_t> node_limit;

    void validate() const {
        if (time_limit_s && *time_limit_s < 0)
            throw std::invalid_argument("time limit must be nonnegative");
    }
};

struct SolveCounters {
    std::uint64_t kernels_total = 0;
    std::uint64_t kernels_skipped = 0; // discarded by size before the heavy init
    std::uint64_t kernels_built = 0;   // full state initialized
    std::uint64_t kernels_pruned = 0;  // reduced away before the first branch
    std::uint64_t branch_nodes = 0;
    std::uint64_t flow_calls = 0;
    RuleStats rules;
};

struct SolveReport {
    std::optional<Solution> best;
    SolveCounters counters;
    double wall_time_s = 0.0;
    /// Set when the search stopped on the time or node limit; best is then a
    /// verified incumbent, not claimed optimal.
    bool timed_out = false;

    int best_size() const { return best ? best->size() : 0; }
};

/// Seed incumbent: closed neighborhood of a maximum-degree vertex for the
/// base case (robust/connected t=1, hereditary t=0), nothing otherwise.
std::pair<int, VertexSet> initial_lower_bound(const Graph& g, ModelSpec spec);

/// Exact maximum t-robust / t-hereditary / t-connected 2-club. One kernel
/// (closed 2-neighborhood) per vertex, processed in nondecreasing size order
/// with incremental data reduction and branch-and-reduce inside each kernel;
/// hereditary falls back to a maximum clique when the kernel search cannot
/// reach size t+1.
SolveReport solve(const Graph& g, ModelSpec spec, const Limits& limits = {});

} // namespace twoclub
