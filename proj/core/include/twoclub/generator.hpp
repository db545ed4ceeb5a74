#pragma once

#include <cstdint>
#include <stdexcept>

#include "twoclub/graph.hpp"

namespace twoclub {

/// Random instance family with tunable density spread: every vertex draws its
/// own edge affinity p_v uniformly from [a,b], and each pair {u,v} becomes an
/// edge with probability (p_u + p_v)/2, so the expected density is (a+b)/2.
struct GenParams {
    int n = 0;
    double a = 0.0;
    double b = 0.0;
    std::uint64_t seed = 0;

    void validate() const {
        if (n < 1) throw std::invalid_argument("n must be at least 1");
        if (!(0.0 <= a && a <= b && b <= 1.0))
            throw std::invalid_argument("parameters must satisfy 0 <= a <= b <= 1");
    }
};

/// Deterministic for a fixed seed on every platform: the stream comes from
/// std::mt19937_64 (whose output is pinned by the standard) mapped to [0,1)
/// with the usual 53-bit construction. Draw order: p_0..p_{n-1}, then one
/// draw per pair (u,v), u ascending, v ascending.
Graph generate(const GenParams& params);

} // namespace twoclub
