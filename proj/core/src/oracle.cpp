#include "twoclub/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "twoclub/connectivity.hpp"

namespace twoclub {
namespace oracle {
namespace {

int common_neighbor_count(const Graph& g, Vertex u, Vertex v) {
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (a[i] > b[j])
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

// Diameter <= 2, with at most one vertex trivially qualifying.
bool is_two_club(const Graph& g, std::uint32_t members, int n) {
    for (Vertex u = 0; u < n; ++u) {
        if (!(members >> u & 1)) continue;
        for (Vertex v = u + 1; v < n; ++v) {
            if (!(members >> v & 1)) continue;
            if (g.has_edge(u, v)) continue;
            bool common = false;
            for (Vertex w : g.neighbors(u))
                if ((members >> w & 1) && g.has_edge(w, v)) {
                    common = true;
                    break;
                }
            if (!common) return false;
        }
    }
    return true;
}

// Literal hereditary definition: every deletion of at most t vertices leaves
// a 2-club. Exponential; callers guard the size.
bool hereditary_literal(const Graph& sub, int t) {
    const int k = sub.vertex_count();
    const std::uint32_t full = k >= 32 ? ~0u : (1u << k) - 1;
    for (std::uint32_t removed = 0; removed <= full; ++removed) {
        if (std::popcount(removed) > t || removed == full) continue;
        if (!is_two_club(sub, full & ~removed, k)) return false;
    }
    return true;
}

bool pairwise_ok(const Graph& sub, ModelSpec spec) {
    const int k = sub.vertex_count();
    FlowScratch scratch;
    std::vector<std::uint8_t> all_alive(k, 1);
    if (spec.model == Model::connected) {
        // t-connectivity check via Whitney: the vertex connectivity of a
        // non-complete graph is the minimum local connectivity over
        // nonadjacent pairs, so flows for adjacent pairs are redundant.
        // Callers have already ensured k >= t+1, which settles the complete
        // case and makes minimum degree a valid pre-filter.
        for (Vertex v = 0; v < k; ++v)
            if (sub.degree(v) < spec.t) return false;
        for (Vertex u = 0; u < k; ++u) {
            for (Vertex v = u + 1; v < k; ++v) {
                if (sub.has_edge(u, v)) continue;
                if (common_neighbor_count(sub, u, v) == 0) return false; // distance > 2
                if (internally_disjoint_paths(sub, all_alive, u, v, spec.t, scratch) < spec.t)
                    return false;
            }
        }
        return true;
    }
    for (Vertex u = 0; u < k; ++u) {
        for (Vertex v = u + 1; v < k; ++v) {
            const bool adj = sub.has_edge(u, v);
            const int cn = common_neighbor_count(sub, u, v);
            if (spec.model == Model::robust) {
                if (!((adj && cn >= spec.t - 1) || cn >= spec.t)) return false;
            } else {
                if (!(adj || cn >= spec.t + 1)) return false;
            }
        }
    }
    return true;
}

} // namespace

bool check_solution(const Graph& g, const VertexSet& s, ModelSpec spec) {
    spec.validate();
    if (!is_strictly_sorted(s)) throw std::invalid_argument("vertex set must be strictly sorted");
    for (Vertex v : s)
        if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex out of range");
    if (s.empty()) return false;
    if (spec.model != Model::hereditary && static_cast<int>(s.size()) < spec.t + 1) return false;

    const Graph sub = induced_subgraph(g, s).graph;
    bool ok = pairwise_ok(sub, spec);
    if (spec.model == Model::hereditary && s.size() <= 12) {
        bool literal = hereditary_literal(sub, spec.t);
        if (literal != ok)
            throw std::logic_error("hereditary characterization disagrees with literal definition");
    }
    return ok;
}

std::optional<Solution> brute_force_max(const Graph& g, ModelSpec spec) {
    spec.validate();
    const int n = g.vertex_count();
    if (n > 16) throw std::invalid_argument("brute_force_max is limited to n <= 16");

    std::vector<std::uint32_t> adj(n, 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u)) adj[u] |= 1u << v;

    FlowScratch scratch;
    auto feasible = [&](std::uint32_t mask, int k) {
        if (spec.model != Model::hereditary && k < spec.t + 1) return false;
        for (Vertex u = 0; u < n; ++u) {
            if (!(mask >> u & 1)) continue;
            if (spec.model == Model::connected &&
                std::popcount(adj[u] & mask) < spec.t)
                return false;
            for (Vertex v = u + 1; v < n; ++v) {
                if (!(mask >> v & 1)) continue;
                const bool a = adj[u] >> v & 1;
                const int cn = std::popcount(adj[u] & adj[v] & mask);
                if (spec.model == Model::robust) {
                    if (!((a && cn >= spec.t - 1) || cn >= spec.t)) return false;
                } else if (spec.model == Model::hereditary) {
                    if (!(a || cn >= spec.t + 1)) return false;
                } else {
                    if (!a && cn == 0) return false;
                }
            }
        }
        if (spec.model == Model::connected) {
            // Whitney again: flows only over nonadjacent pairs (k >= t+1 held
            // above covers the complete case).
            std::vector<std::uint8_t> alive(n, 0);
            for (Vertex v = 0; v < n; ++v) alive[v] = mask >> v & 1;
            for (Vertex u = 0; u < n; ++u) {
                if (!alive[u]) continue;
                for (Vertex v = u + 1; v < n; ++v) {
                    if (!alive[v] || (adj[u] >> v & 1)) continue;
                    if (internally_disjoint_paths(g, alive, u, v, spec.t, scratch) < spec.t)
                        return false;
                }
            }
        }
        return true;
    };

    std::vector<Vertex> comb;
    for (int k = n; k >= 1; --k) {
        // k-subsets in lexicographic order; the first feasible one is the
        // lexicographically smallest of maximum size.
        comb.resize(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        for (;;) {
            std::uint32_t mask = 0;
            for (Vertex v : comb) mask |= 1u << v;
            if (feasible(mask, k)) {
                Solution sol;
                sol.vertices.assign(comb.begin(), comb.end());
                sol.spec = spec;
                sol.verified = true;
                return sol;
            }
            int i = k - 1;
            while (i >= 0 && comb[i] == n - k + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return std::nullopt;
}

} // namespace oracle
} // namespace twoclub
