#pragma once

#include "twoclub/model.hpp"
#include "twoclub/types.hpp"

namespace twoclub {

/// A candidate or proven solution, in the identifiers of the graph it was
/// found in. `verified` is set once the oracle predicate check has passed.
struct Solution {
    VertexSet vertices;
    ModelSpec spec;
    bool verified = false;

    int size() const { return static_cast<int>(vertices.size()); }
};

} // namespace twoclub
