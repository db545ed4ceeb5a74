#pragma once

#include <cstdint>
#include <vector>

#include "twoclub/graph.hpp"

namespace twoclub::fixtures {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);

/// Six blocks of block_size vertices arranged in a ring (consecutive blocks
/// joined completely) plus one hub adjacent to everything. The hub makes it a
/// 2-club; the ring makes it block_size-connected; with the hub gone,
/// opposite blocks sit at distance three.
Graph hubbed_block_ring(int block_size);

/// Random connected graphs for sweeps: cycles deterministically through
/// sizes in [min_n, max_n] and densities 0.1..0.9 until `count` connected
/// instances are found.
std::vector<Graph> connected_sample(int count, int min_n, int max_n, std::uint64_t seed);

} // namespace twoclub::fixtures
