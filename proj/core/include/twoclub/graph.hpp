#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "twoclub/types.hpp"

namespace twoclub {

/// Simple undirected graph with dense 0-based vertex identifiers and sorted
/// adjacency lists. Immutable after construction; safe to share across
/// threads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on n vertices from an edge list. Self-loops and
    /// duplicate edges are dropped; the counts of dropped items are reported
    /// through the optional out-parameters.
    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                            int* dropped_loops = nullptr, int* dropped_duplicates = nullptr);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return m_; }

    const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(Vertex u, Vertex v) const;

    int max_degree() const;
    int isolated_vertex_count() const;

    /// All edges as (u,v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Checks all representation invariants (sorted symmetric loop-free
    /// adjacency, degree sum = 2m). Intended for tests.
    bool check_invariants() const;

private:
    std::vector<VertexSet> adj_;
    long long m_ = 0;
};

/// Subgraph induced by a vertex set, with the mapping from local identifiers
/// (0..k-1, in parent-sorted order) back to the parent graph.
struct InducedSubgraph {
    Graph graph;
    VertexSet to_parent;

    VertexSet map_to_parent(const VertexSet& local) const;
};

/// N2[v] = {v} plus everything within distance two of v.
VertexSet closed_two_neighborhood(const Graph& g, Vertex v);

/// Partition of the vertex set into connected components (each sorted; the
/// list is ordered by smallest member).
std::vector<VertexSet> connected_components(const Graph& g);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Induce on an already induced subgraph; to_parent is composed so it still
/// points into the original graph.
InducedSubgraph induced_subgraph(const InducedSubgraph& sub, const VertexSet& local_s);

} // namespace twoclub
