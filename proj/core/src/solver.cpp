#include "twoclub/solver.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "twoclub/clique.hpp"
#include "twoclub/oracle.hpp"

namespace twoclub {
namespace {

using Clock = std::chrono::steady_clock;

struct SearchCtx {
    KernelState& state;
    int& best_size;
    SolveCounters& counters;
    const std::optional<Clock::time_point>& deadline;
    const std::optional<std::uint64_t>& node_limit;
    VertexSet best_local;
    bool improved = false;
    bool stopped = false;
};

bool out_of_budget(SearchCtx& c) {
    if (c.node_limit && c.counters.branch_nodes >= *c.node_limit) return true;
    if (c.deadline && Clock::now() >= *c.deadline) return true;
    return false;
}

// Branch-and-reduce on one kernel. On an incompatible pair (u,v) with u the
// least-compatible endpoint: branch A deletes u, branch B fixes u (marks it;
// Incompatible Resolution then removes v and every other vertex incompatible
// with u). When no incompatible pair remains, the whole alive set is a
// solution.
void branch(SearchCtx& c) {
    ++c.counters.branch_nodes;
    if (out_of_budget(c)) {
        c.stopped = true;
        return;
    }
    if (c.state.alive_count() <= c.best_size) return;

    auto pair = c.state.find_incompatible_pair();
    if (!pair) {
        if (c.state.alive_count() >= c.state.spec().min_solution_size()) {
            c.best_size = c.state.alive_count();
            c.best_local = c.state.alive_vertices();
            c.improved = true;
        }
        return;
    }
    const Vertex u = pair->first;

    const Checkpoint cp = c.state.checkpoint();
    c.state.delete_vertex(u);
    if (apply_all(c.state, c.best_size, true, &c.counters.rules).kind != Outcome::prune)
        branch(c);
    c.state.undo_to(cp);
    if (c.stopped) return;

    c.state.mark_vertex(u);
    if (apply_all(c.state, c.best_size, true, &c.counters.rules).kind != Outcome::prune)
        branch(c);
    c.state.undo_to(cp);
}

// Degree-only cascade run before the quadratic structures exist. Returns the
// surviving local vertices, or nothing when the seed itself falls.
std::optional<VertexSet> low_degree_survivors(const Graph& g, ModelSpec spec, Vertex seed) {
    int threshold = spec.low_degree_threshold();
    if (spec.base_case()) threshold = std::max(threshold, 2);

    std::vector<std::uint8_t> alive(g.vertex_count(), 1);
    std::vector<int> deg(g.vertex_count());
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        deg[v] = g.degree(v);
        if (deg[v] < threshold) queue.push_back(v);
    }
    while (!queue.empty()) {
        Vertex v = queue.back();
        queue.pop_back();
        if (!alive[v] || deg[v] >= threshold) continue;
        if (v == seed) return std::nullopt;
        alive[v] = 0;
        for (Vertex w : g.neighbors(v))
            if (alive[w] && --deg[w] < threshold) queue.push_back(w);
    }
    VertexSet out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (alive[v]) out.push_back(v);
    return out;
}

VertexSet two_neighborhood_active(const Graph& g, Vertex v, const std::vector<std::uint8_t>& active) {
    std::vector<char> seen(g.vertex_count(), 0);
    seen[v] = 1;
    VertexSet out{v};
    for (Vertex u : g.neighbors(v)) {
        if (!active[u]) continue;
        if (!seen[u]) {
            seen[u] = 1;
            out.push_back(u);
        }
        for (Vertex w : g.neighbors(u)) {
            if (!active[w] || seen[w]) continue;
            seen[w] = 1;
            out.push_back(w);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::pair<int, VertexSet> initial_lower_bound(const Graph& g, ModelSpec spec) {
    spec.validate();
    if (!spec.base_case() || g.vertex_count() == 0) return {0, {}};
    if (spec.model != Model::hereditary && g.edge_count() == 0) return {0, {}};

    Vertex best = 0;
    for (Vertex v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) > g.degree(best)) best = v;
    VertexSet witness = g.neighbors(best);
    witness.push_back(best);
    std::sort(witness.begin(), witness.end());
    return {g.degree(best) + 1, witness};
}

SolveReport solve(const Graph& g, ModelSpec spec, const Limits& limits) {
    spec.validate();
    limits.validate();
    const auto start = Clock::now();
    std::optional<Clock::time_point> deadline;
    if (limits.time_limit_s)
        deadline = start + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(*limits.time_limit_s));

    SolveReport report;
    auto [bound, witness] = initial_lower_bound(g, spec);
    int best_size = bound;
    VertexSet best_set = std::move(witness);

    const int n = g.vertex_count();
    report.counters.kernels_total = static_cast<std::uint64_t>(n);

    // Kernel order is fixed up front by the size of the closed
    // 2-neighborhood in the input graph and never revisited, even though
    // kernels shrink as processed seeds leave the graph.
    std::vector<int> n2_size(n);
    for (Vertex v = 0; v < n; ++v)
        n2_size[v] = static_cast<int>(closed_two_neighborhood(g, v).size());
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return n2_size[a] < n2_size[b]; });

    std::vector<std::uint8_t> active(n, 1); // seeds not yet searched

    for (Vertex seed : order) {
        if (deadline && Clock::now() >= *deadline) {
            report.timed_out = true;
            break;
        }
        if (limits.node_limit && report.counters.branch_nodes >= *limits.node_limit) {
            report.timed_out = true;
            break;
        }
        // Every solution through the seed lives inside its kernel, so a
        // kernel no larger than the incumbent is done; the seed then leaves
        // the graph like a fully searched one.
        if (n2_size[seed] <= best_size) {
            ++report.counters.kernels_skipped;
            active[seed] = 0;
            continue;
        }
        VertexSet kernel_set = two_neighborhood_active(g, seed, active);
        if (static_cast<int>(kernel_set.size()) <= best_size) {
            ++report.counters.kernels_skipped;
            active[seed] = 0;
            continue;
        }

        InducedSubgraph kernel = induced_subgraph(g, kernel_set);
        const Vertex seed_local = static_cast<Vertex>(
            std::lower_bound(kernel_set.begin(), kernel_set.end(), seed) - kernel_set.begin());

        // Cheap degree reduction first; the quadratic structures are only
        // initialized when the kernel is still worth it.
        auto survivors = low_degree_survivors(kernel.graph, spec, seed_local);
        if (!survivors) {
            ++report.counters.kernels_skipped;
            active[seed] = 0;
            continue;
        }
        if (static_cast<int>(survivors->size()) <= best_size) {
            ++report.counters.kernels_skipped;
            active[seed] = 0;
            continue;
        }
        InducedSubgraph reduced = induced_subgraph(kernel, *survivors);
        const Vertex seed_reduced = static_cast<Vertex>(
            std::lower_bound(survivors->begin(), survivors->end(), seed_local) -
            survivors->begin());

        KernelState state(std::move(reduced), spec, seed_reduced);
        ++report.counters.kernels_built;

        if (apply_all(state, best_size, false, &report.counters.rules).kind == Outcome::prune) {
            ++report.counters.kernels_pruned;
            report.counters.flow_calls += state.flow_calls();
            active[seed] = 0;
            continue;
        }

        SearchCtx ctx{state,    best_size, report.counters, deadline, limits.node_limit,
                      {},       false,     false};
        branch(ctx);
        report.counters.flow_calls += state.flow_calls();
        if (ctx.improved) best_set = state.kernel().map_to_parent(ctx.best_local);
        if (ctx.stopped) {
            report.timed_out = true;
            break;
        }
        active[seed] = 0;
    }

    // Hereditary solutions smaller than t+1 are cliques and invisible to the
    // kernel search (Low Degree assumes size >= t+1), so fall back to a
    // maximum clique when the search came up short.
    if (spec.model == Model::hereditary && best_size < spec.t + 1 && n > 0) {
        bool clique_timed_out = false;
        VertexSet clique = clique_max(g, deadline, clique_timed_out);
        if (static_cast<int>(clique.size()) > best_size) {
            best_size = static_cast<int>(clique.size());
            best_set = std::move(clique);
        }
        if (clique_timed_out) report.timed_out = true;
    }

    if (best_size > 0) {
        Solution sol;
        sol.vertices = std::move(best_set);
        sol.spec = spec;
        sol.verified = oracle::check_solution(g, sol.vertices, spec);
        if (!sol.verified) throw std::logic_error("solver produced an invalid solution");
        report.best = std::move(sol);
    }
    report.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

} // namespace twoclub
