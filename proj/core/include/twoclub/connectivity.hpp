#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "twoclub/graph.hpp"

namespace twoclub {

/// Reusable buffers for the unit-capacity flow network (vertex splitting:
/// node 2v is v_in, node 2v+1 is v_out). Keeping one scratch per caller
/// avoids reallocating on every query.
struct FlowScratch {
    std::vector<int> head, next_arc, arc_to;
    std::vector<signed char> arc_cap;
    std::vector<int> parent_arc;
    std::vector<int> queue;
};

/// Number of internally vertex-disjoint u-v paths in the subgraph induced by
/// the alive vertices, computed as unit-capacity max flow and capped at
/// `cap` (augmentation stops as soon as cap paths are found). For adjacent
/// pairs the direct edge counts as one path and is excluded from the flow
/// network. `flow_calls`, when given, is incremented once per invocation.
int internally_disjoint_paths(const Graph& g, std::span<const std::uint8_t> alive, Vertex u,
                              Vertex v, int cap, FlowScratch& scratch,
                              std::uint64_t* flow_calls = nullptr);

/// Convenience overload treating every vertex as alive.
int internally_disjoint_paths(const Graph& g, Vertex u, Vertex v, int cap);

} // namespace twoclub
