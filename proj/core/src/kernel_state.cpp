#include "twoclub/kernel_state.hpp"

#include <atomic>
#include <stdexcept>

namespace twoclub {
namespace {
std::atomic<std::uint64_t> next_owner_id{1};
}

KernelState::KernelState(InducedSubgraph kernel, ModelSpec spec, Vertex seed_local)
    : kernel_(std::move(kernel)), spec_(spec), seed_(seed_local) {
    spec_.validate();
    const Graph& g = kernel_.graph;
    n_ = g.vertex_count();
    if (seed_ < 0 || seed_ >= n_) throw std::out_of_range("seed vertex outside kernel");
    owner_ = next_owner_id.fetch_add(1);

    alive_.assign(n_, 1);
    alive_count_ = n_;
    marked_.assign(n_, 0);
    deg_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) deg_[v] = g.degree(v);

    adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (Vertex v = 0; v < n_; ++v)
        for (Vertex w : g.neighbors(v)) adj_[idx(v, w)] = 1;

    // Common neighbor matrix: every vertex raises the count of each pair of
    // its neighbors.
    cn_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                ++cn_[idx(nb[i], nb[j])];
                ++cn_[idx(nb[j], nb[i])];
            }
    }

    incompat_.assign(static_cast<std::size_t>(n_) * n_, 0);
    incompat_deg_.assign(n_, 0);
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = u + 1; v < n_; ++v) {
            bool ok;
            if (spec_.model == Model::connected) {
                ok = connected_pair_ok(u, v);
            } else {
                ok = pair_compatible_counts(u, v);
            }
            if (!ok) {
                incompat_[idx(u, v)] = incompat_[idx(v, u)] = 1;
                ++incompat_deg_[u];
                ++incompat_deg_[v];
                ++incompat_edges_;
            }
        }
    }

    marked_[seed_] = 1;
    marked_stack_.push_back(seed_);
}

bool KernelState::pair_compatible_counts(Vertex u, Vertex v) const {
    const int cn = common_neighbors(u, v);
    if (spec_.model == Model::robust)
        return (adjacent(u, v) && cn >= spec_.t - 1) || cn >= spec_.t;
    return adjacent(u, v) || cn >= spec_.t + 1; // hereditary
}

int KernelState::disjoint_paths(Vertex u, Vertex v, int cap) {
    return internally_disjoint_paths(kernel_.graph, alive_, u, v, cap, flow_scratch_,
                                     &flow_calls_);
}

// Flow runs only for pairs at distance at most two; farther pairs are
// incompatible outright. For t=1 the flow is implied: a path of length at
// most two is already an internally disjoint path.
bool KernelState::connected_pair_ok(Vertex u, Vertex v) {
    if (!within_distance_two(u, v)) return false;
    return spec_.t == 1 || disjoint_paths(u, v, spec_.t) >= spec_.t;
}

bool KernelState::compatible(Vertex u, Vertex v) {
    if (u == v || !alive(u) || !alive(v))
        throw std::logic_error("compatibility queried for dead or identical vertices");
    if (spec_.model == Model::connected) return connected_pair_ok(u, v);
    return pair_compatible_counts(u, v);
}

void KernelState::add_incompat(Vertex u, Vertex v) {
    incompat_[idx(u, v)] = incompat_[idx(v, u)] = 1;
    ++incompat_deg_[u];
    ++incompat_deg_[v];
    ++incompat_edges_;
    std::uint8_t counted = 0;
    if (vcr_.valid && !vcr_.covered[u] && !vcr_.covered[v]) {
        ++vcr_.new_conflicts;
        counted = 1;
    }
    log_.push_back({Op::incompat_add, counted, u, v});
}

void KernelState::delete_vertex(Vertex v) {
    if (!alive(v)) throw std::logic_error("deleting dead vertex");
    if (marked(v)) throw std::logic_error("deleting marked vertex");

    log_.push_back({Op::delete_vertex, 0, v, 0});
    alive_[v] = 0;
    --alive_count_;
    for (Vertex u = 0; u < n_; ++u) {
        if (!alive_[u]) continue;
        if (incompat_[idx(u, v)]) {
            --incompat_deg_[u];
            --incompat_edges_;
        }
    }

    // Alive neighbors of v: their degrees drop and their pairwise common
    // neighbor counts lose v.
    VertexSet nbrs;
    for (Vertex w : kernel_.graph.neighbors(v))
        if (alive_[w]) {
            --deg_[w];
            nbrs.push_back(w);
        }
    // For robust/hereditary the predicate only depends on adjacency and the
    // common neighbor count, so only pairs of v's neighbors can flip. The
    // same holds for connected t=1 (compatible iff distance <= 2); only for
    // t >= 2 can the deletion break long paths between arbitrary pairs.
    const bool full_rescan = spec_.model == Model::connected && spec_.t >= 2;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            Vertex a = nbrs[i], b = nbrs[j];
            --cn_[idx(a, b)];
            --cn_[idx(b, a)];
            log_.push_back({Op::cn_dec, 0, a, b});
            if (full_rescan || incompat_[idx(a, b)]) continue;
            const bool ok = spec_.model == Model::connected ? within_distance_two(a, b)
                                                            : pair_compatible_counts(a, b);
            if (!ok) add_incompat(a, b);
        }
    }

    if (full_rescan) {
        // Re-check every previously compatible alive pair; pairs that fell
        // to distance > 2 are incompatible without a flow run.
        for (Vertex a = 0; a < n_; ++a) {
            if (!alive_[a]) continue;
            for (Vertex b = a + 1; b < n_; ++b) {
                if (!alive_[b] || incompat_[idx(a, b)]) continue;
                if (!connected_pair_ok(a, b)) add_incompat(a, b);
            }
        }
    }
}

void KernelState::mark_vertex(Vertex v) {
    if (!alive(v)) throw std::logic_error("marking dead vertex");
    if (marked(v)) return;
    log_.push_back({Op::mark_vertex, 0, v, 0});
    marked_[v] = 1;
    marked_stack_.push_back(v);
}

void KernelState::set_vcr(int bound, std::vector<std::pair<Vertex, Vertex>> matching) {
    vcr_snapshots_.push_back(std::move(vcr_));
    log_.push_back({Op::vcr_replace, 0, 0, 0});
    vcr_.valid = true;
    vcr_.last_bound = bound;
    vcr_.new_conflicts = 0;
    vcr_.matching = std::move(matching);
    vcr_.covered.assign(n_, 0);
    for (auto [a, b] : vcr_.matching) {
        vcr_.covered[a] = 1;
        vcr_.covered[b] = 1;
    }
}

void KernelState::undo_to(const Checkpoint& cp) {
    if (cp.owner != owner_) throw std::logic_error("checkpoint belongs to a different state");
    if (cp.log_size > log_.size()) throw std::logic_error("checkpoint already undone past");
    while (log_.size() > cp.log_size) {
        LogEntry e = log_.back();
        log_.pop_back();
        switch (e.op) {
        case Op::incompat_add:
            incompat_[idx(e.a, e.b)] = incompat_[idx(e.b, e.a)] = 0;
            --incompat_deg_[e.a];
            --incompat_deg_[e.b];
            --incompat_edges_;
            if (e.flag) --vcr_.new_conflicts;
            break;
        case Op::cn_dec:
            ++cn_[idx(e.a, e.b)];
            ++cn_[idx(e.b, e.a)];
            break;
        case Op::delete_vertex: {
            Vertex v = e.a;
            alive_[v] = 1;
            ++alive_count_;
            for (Vertex u = 0; u < n_; ++u) {
                if (!alive_[u] || u == v) continue;
                if (incompat_[idx(u, v)]) {
                    ++incompat_deg_[u];
                    ++incompat_edges_;
                }
            }
            for (Vertex w : kernel_.graph.neighbors(v))
                if (alive_[w]) ++deg_[w];
            break;
        }
        case Op::mark_vertex:
            marked_[e.a] = 0;
            marked_stack_.pop_back();
            break;
        case Op::vcr_replace:
            vcr_ = std::move(vcr_snapshots_.back());
            vcr_snapshots_.pop_back();
            break;
        }
    }
}

std::optional<std::pair<Vertex, Vertex>> KernelState::find_incompatible_pair() const {
    if (incompat_edges_ == 0) return std::nullopt;
    Vertex best = -1;
    for (Vertex v = 0; v < n_; ++v) {
        if (!alive_[v] || incompat_deg_[v] == 0) continue;
        if (best < 0 || compat_count(v) < compat_count(best)) best = v;
    }
    Vertex partner = -1;
    for (Vertex w = 0; w < n_; ++w) {
        if (!alive_[w] || w == best || !incompat_[idx(best, w)]) continue;
        if (partner < 0 || compat_count(w) < compat_count(partner)) partner = w;
    }
    return std::make_pair(best, partner);
}

VertexSet KernelState::alive_vertices() const {
    VertexSet out;
    out.reserve(alive_count_);
    for (Vertex v = 0; v < n_; ++v)
        if (alive_[v]) out.push_back(v);
    return out;
}

} // namespace twoclub
