#include "twoclub/reductions.hpp"

#include <algorithm>

namespace twoclub {

void RuleStats::add(const RuleStats& o) {
    marked_incompatible_prunes += o.marked_incompatible_prunes;
    resolution_deletions += o.resolution_deletions;
    low_degree_deletions += o.low_degree_deletions;
    low_degree_prunes += o.low_degree_prunes;
    low_compat_deletions += o.low_compat_deletions;
    low_compat_prunes += o.low_compat_prunes;
    vcr_prunes += o.vcr_prunes;
    vcr_recomputes += o.vcr_recomputes;
    vcr_skips += o.vcr_skips;
    no_choice_marks += o.no_choice_marks;
}

RuleOutcome rule_marked_incompatible(KernelState& s, RuleStats* stats) {
    const auto& marked = s.marked_vertices();
    for (std::size_t i = 0; i < marked.size(); ++i)
        for (std::size_t j = i + 1; j < marked.size(); ++j)
            if (s.incompatible(marked[i], marked[j])) {
                if (stats) ++stats->marked_incompatible_prunes;
                return {Outcome::prune};
            }
    return {Outcome::fixpoint};
}

RuleOutcome rule_incompatible_resolution(KernelState& s, RuleStats* stats) {
    RuleOutcome out;
    bool progress = true;
    while (progress) {
        progress = false;
        for (Vertex v = 0; v < s.size(); ++v) {
            if (!s.alive(v) || s.marked(v)) continue;
            bool conflict = false;
            for (Vertex m : s.marked_vertices())
                if (s.incompatible(v, m)) {
                    conflict = true;
                    break;
                }
            if (conflict) {
                s.delete_vertex(v);
                ++out.deletions;
                progress = true;
            }
        }
    }
    if (out.deletions > 0) {
        out.kind = Outcome::reduced;
        if (stats) stats->resolution_deletions += out.deletions;
    }
    return out;
}

RuleOutcome rule_low_degree(KernelState& s, RuleStats* stats) {
    int threshold = s.spec().low_degree_threshold();
    if (s.spec().base_case()) threshold = std::max(threshold, 2);

    RuleOutcome out;
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < s.size(); ++v)
        if (s.alive(v) && s.degree(v) < threshold) queue.push_back(v);
    while (!queue.empty()) {
        Vertex v = queue.back();
        queue.pop_back();
        if (!s.alive(v) || s.degree(v) >= threshold) continue;
        if (s.marked(v)) {
            if (stats) {
                stats->low_degree_deletions += out.deletions;
                ++stats->low_degree_prunes;
            }
            return {Outcome::prune, out.deletions};
        }
        const auto& neighbors = s.graph().neighbors(v);
        s.delete_vertex(v);
        ++out.deletions;
        for (Vertex w : neighbors)
            if (s.alive(w) && s.degree(w) < threshold) queue.push_back(w);
    }
    if (out.deletions > 0) {
        out.kind = Outcome::reduced;
        if (stats) stats->low_degree_deletions += out.deletions;
    }
    return out;
}

RuleOutcome rule_low_compatibility(KernelState& s, int best_size, RuleStats* stats) {
    RuleOutcome out;
    bool progress = true;
    while (progress) {
        progress = false;
        for (Vertex v = 0; v < s.size(); ++v) {
            if (!s.alive(v) || s.compat_count(v) > best_size) continue;
            if (s.marked(v)) {
                if (stats) {
                    stats->low_compat_deletions += out.deletions;
                    ++stats->low_compat_prunes;
                }
                return {Outcome::prune, out.deletions};
            }
            s.delete_vertex(v);
            ++out.deletions;
            progress = true;
        }
    }
    if (out.deletions > 0) {
        out.kind = Outcome::reduced;
        if (stats) stats->low_compat_deletions += out.deletions;
    }
    return out;
}

RuleOutcome rule_vertex_cover(KernelState& s, int best_size, RuleStats* stats) {
    const VcrCache& cache = s.vcr();
    if (cache.valid) {
        // A recomputation reports at most new_conflicts more required
        // deletions than the cached bound, so it cannot trigger while
        // alive - (bound + new) still exceeds the incumbent.
        if (s.alive_count() - (cache.last_bound + cache.new_conflicts) > best_size) {
            if (stats) ++stats->vcr_skips;
            return {Outcome::fixpoint};
        }
    }

    // Greedy maximal matching of the alive incompatibility graph, taking
    // edges in ascending (u,v) order.
    std::vector<std::uint8_t> used(s.size(), 0);
    std::vector<std::pair<Vertex, Vertex>> matching;
    for (Vertex u = 0; u < s.size(); ++u) {
        if (!s.alive(u) || used[u] || s.incompat_degree(u) == 0) continue;
        for (Vertex w = u + 1; w < s.size(); ++w) {
            if (!s.alive(w) || used[w] || !s.incompatible(u, w)) continue;
            used[u] = used[w] = 1;
            matching.emplace_back(u, w);
            break;
        }
    }
    const int bound = static_cast<int>(matching.size());
    s.set_vcr(bound, std::move(matching));
    if (stats) ++stats->vcr_recomputes;

    if (s.alive_count() - bound <= best_size) {
        if (stats) ++stats->vcr_prunes;
        return {Outcome::prune};
    }
    return {Outcome::fixpoint};
}

RuleOutcome rule_no_choice(KernelState& s, RuleStats* stats) {
    const int threshold = s.spec().no_choice_threshold();
    RuleOutcome out;
    bool progress = true;
    while (progress) {
        progress = false;
        const auto& marked = s.marked_vertices();
        for (std::size_t i = 0; i < marked.size(); ++i) {
            for (std::size_t j = i + 1; j < marked.size(); ++j) {
                Vertex a = marked[i], b = marked[j];
                if (s.adjacent(a, b) || s.common_neighbors(a, b) != threshold) continue;
                for (Vertex w : s.graph().neighbors(a)) {
                    if (!s.alive(w) || s.marked(w) || !s.adjacent(w, b)) continue;
                    s.mark_vertex(w);
                    ++out.marks;
                    progress = true;
                }
            }
        }
    }
    if (out.marks > 0) {
        out.kind = Outcome::reduced;
        if (stats) stats->no_choice_marks += out.marks;
    }
    return out;
}

RuleOutcome apply_all(KernelState& s, int best_size, bool in_branching, RuleStats* stats) {
    RuleOutcome total;
    for (;;) {
        bool changed = false;

        if (rule_marked_incompatible(s, stats).kind == Outcome::prune) return {Outcome::prune};

        RuleOutcome r3 = rule_low_degree(s, stats);
        if (r3.kind == Outcome::prune) return {Outcome::prune};
        if (r3.kind == Outcome::reduced) changed = true;
        total.deletions += r3.deletions;

        RuleOutcome r2 = rule_incompatible_resolution(s, stats);
        if (r2.kind == Outcome::reduced) changed = true;
        total.deletions += r2.deletions;

        RuleOutcome r4 = rule_low_compatibility(s, best_size, stats);
        if (r4.kind == Outcome::prune) return {Outcome::prune};
        if (r4.kind == Outcome::reduced) changed = true;
        total.deletions += r4.deletions;

        if (in_branching) {
            if (rule_vertex_cover(s, best_size, stats).kind == Outcome::prune)
                return {Outcome::prune};
        }

        RuleOutcome r6 = rule_no_choice(s, stats);
        if (r6.kind == Outcome::reduced) changed = true;
        total.marks += r6.marks;

        if (!changed) break;
    }
    total.kind = (total.deletions > 0 || total.marks > 0) ? Outcome::reduced : Outcome::fixpoint;
    return total;
}

} // namespace twoclub
