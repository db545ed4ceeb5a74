#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "twoclub/connectivity.hpp"
#include "twoclub/graph.hpp"
#include "twoclub/model.hpp"

namespace twoclub {

/// Opaque rollback token; only valid for the state that produced it and only
/// while that position has not been undone past.
struct Checkpoint {
    std::size_t log_size = 0;
    std::uint64_t owner = 0;
};

/// Cached vertex-cover information for the Vertex Cover Rule: the bound from
/// the last maximal matching of the incompatibility graph, the matched
/// vertices, and how many incompatibilities have appeared since that are not
/// covered by them.
struct VcrCache {
    bool valid = false;
    int last_bound = 0;
    int new_conflicts = 0;
    std::vector<std::pair<Vertex, Vertex>> matching;
    std::vector<std::uint8_t> covered;
};

/// Mutable per-kernel search state: alive/marked flags, the common neighbor
/// matrix, the incompatibility graph, per-vertex compatibility counts, and a
/// log making every mutation reversible.
///
/// All identifiers are local to the kernel subgraph. The structures always
/// describe the subgraph induced by the alive vertices: common_neighbors(u,v)
/// counts alive common neighbors, incompatible(u,v) holds exactly when the
/// alive pair fails the model predicate evaluated on the alive subgraph, and
/// compat_count(v) = 1 + number of alive vertices compatible with v.
class KernelState {
public:
    KernelState(InducedSubgraph kernel, ModelSpec spec, Vertex seed_local);

    KernelState(const KernelState&) = delete;
    KernelState& operator=(const KernelState&) = delete;
    KernelState(KernelState&&) = default;
    KernelState& operator=(KernelState&&) = default;

    const InducedSubgraph& kernel() const { return kernel_; }
    const Graph& graph() const { return kernel_.graph; }
    const ModelSpec& spec() const { return spec_; }
    Vertex seed() const { return seed_; }

    int size() const { return n_; }
    int alive_count() const { return alive_count_; }
    bool alive(Vertex v) const { return alive_[v] != 0; }
    bool marked(Vertex v) const { return marked_[v] != 0; }
    const std::vector<Vertex>& marked_vertices() const { return marked_stack_; }
    int degree(Vertex v) const { return deg_[v]; }
    bool adjacent(Vertex u, Vertex v) const { return adj_[idx(u, v)] != 0; }
    int common_neighbors(Vertex u, Vertex v) const { return cn_[idx(u, v)]; }
    bool incompatible(Vertex u, Vertex v) const { return incompat_[idx(u, v)] != 0; }
    int incompat_degree(Vertex v) const { return incompat_deg_[v]; }
    long long incompat_edge_count() const { return incompat_edges_; }
    int compat_count(Vertex v) const { return alive_count_ - incompat_deg_[v]; }

    /// Evaluates the model predicate for an alive pair from the current
    /// structures (for the connected model this runs a fresh flow query).
    bool compatible(Vertex u, Vertex v);

    Checkpoint checkpoint() const { return {log_.size(), owner_}; }

    /// Removes v from the alive subgraph and updates all structures: common
    /// neighbor counts of v's neighbor pairs drop, pairs that now fail the
    /// predicate become incompatible (for the connected model every
    /// previously compatible pair is re-checked, pairs at distance > 2
    /// without a flow run). v must be alive and unmarked; deleting a marked
    /// vertex is the caller's abort path, never allowed here.
    void delete_vertex(Vertex v);

    void mark_vertex(Vertex v);

    /// Restores the state bit-exactly to the checkpoint.
    void undo_to(const Checkpoint& cp);

    /// An incompatible alive pair (u,v) where u has the minimum compatibility
    /// count among all endpoints of incompatible pairs (ties by smaller
    /// identifier, then v likewise among u's partners). Empty exactly when no
    /// alive pair is incompatible, i.e. the alive set is a solution modulo
    /// the minimum-size convention.
    std::optional<std::pair<Vertex, Vertex>> find_incompatible_pair() const;

    VertexSet alive_vertices() const;

    const VcrCache& vcr() const { return vcr_; }
    /// Installs a freshly computed matching (Vertex Cover Rule); the previous
    /// cache is pushed to the undo log.
    void set_vcr(int bound, std::vector<std::pair<Vertex, Vertex>> matching);

    std::uint64_t flow_calls() const { return flow_calls_; }

private:
    std::size_t idx(Vertex u, Vertex v) const {
        return static_cast<std::size_t>(u) * n_ + v;
    }
    bool pair_compatible_counts(Vertex u, Vertex v) const; // robust/hereditary predicate
    bool connected_pair_ok(Vertex u, Vertex v);
    bool within_distance_two(Vertex u, Vertex v) const {
        return adjacent(u, v) || common_neighbors(u, v) > 0;
    }
    int disjoint_paths(Vertex u, Vertex v, int cap);
    void add_incompat(Vertex u, Vertex v);

    enum class Op : std::uint8_t { delete_vertex, mark_vertex, cn_dec, incompat_add, vcr_replace };
    struct LogEntry {
        Op op;
        std::uint8_t flag; // incompat_add: counted as new VCR conflict
        Vertex a, b;
    };

    InducedSubgraph kernel_;
    ModelSpec spec_;
    Vertex seed_;
    int n_ = 0;
    int alive_count_ = 0;
    std::vector<std::uint8_t> alive_, marked_, adj_, incompat_;
    std::vector<int> deg_, cn_, incompat_deg_;
    long long incompat_edges_ = 0;
    std::vector<Vertex> marked_stack_;
    VcrCache vcr_;
    std::vector<LogEntry> log_;
    std::vector<VcrCache> vcr_snapshots_;
    std::uint64_t owner_ = 0;
    std::uint64_t flow_calls_ = 0;
    FlowScratch flow_scratch_;
};

} // namespace twoclub
