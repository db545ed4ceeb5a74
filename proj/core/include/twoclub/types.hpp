#pragma once

#include <vector>

namespace twoclub {

using Vertex = int;

// Strictly ascending list of vertex identifiers.
using VertexSet = std::vector<Vertex>;

bool is_strictly_sorted(const VertexSet& s);
bool set_contains(const VertexSet& s, Vertex v);

} // namespace twoclub
