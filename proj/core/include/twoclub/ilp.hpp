#pragma once

#include <string>
#include <vector>

#include "twoclub/graph.hpp"

namespace twoclub {

/// One constraint per nonadjacent pair {u,w}:
///   (t+1) x_u + (t+1) x_w - sum_{v in N(u) cap N(w)} x_v <= t+1
/// i.e. take at most one of the two vertices or at least t+1 of their common
/// neighbors as well.
struct IlpConstraint {
    Vertex u = 0, w = 0;
    VertexSet common; // common neighbors of u and w
};

struct IlpModel {
    int n = 0;
    int t = 0;
    std::vector<IlpConstraint> constraints; // nonadjacent pairs in lexicographic order
};

IlpModel build_hereditary_model(const Graph& g, int t);

/// Renders the model in LP file format (Maximize / Subject To / Binary /
/// End), variables x{vertex_id}, constraints c{i}; byte-stable for a fixed
/// input.
std::string emit_hereditary_lp(const Graph& g, int t);

/// Exact optimum of the emitted model by enumerating all 0/1 assignments.
/// Guarded to n <= 16.
int evaluate_small(const Graph& g, int t);

} // namespace twoclub
