#pragma once

#include <cstdint>

#include "twoclub/kernel_state.hpp"

namespace twoclub {

enum class Outcome { fixpoint, reduced, prune };

struct RuleOutcome {
    Outcome kind = Outcome::fixpoint;
    int deletions = 0;
    int marks = 0;
};

struct RuleStats {
    std::uint64_t marked_incompatible_prunes = 0;
    std::uint64_t resolution_deletions = 0;
    std::uint64_t low_degree_deletions = 0;
    std::uint64_t low_degree_prunes = 0;
    std::uint64_t low_compat_deletions = 0;
    std::uint64_t low_compat_prunes = 0;
    std::uint64_t vcr_prunes = 0;
    std::uint64_t vcr_recomputes = 0;
    std::uint64_t vcr_skips = 0;
    std::uint64_t no_choice_marks = 0;

    void add(const RuleStats& o);
};

/// Rule 1: abort the branch when two marked vertices are incompatible.
RuleOutcome rule_marked_incompatible(KernelState& s, RuleStats* stats = nullptr);

/// Rule 2: delete every unmarked vertex incompatible with a marked vertex,
/// cascading until none is left.
RuleOutcome rule_incompatible_resolution(KernelState& s, RuleStats* stats = nullptr);

/// Rule 3: delete vertices of alive-degree below t (t+1 for hereditary). In
/// the base case (robust/connected t=1, hereditary t=0) degree-one vertices
/// go as well; that step is only sound when the incumbent was seeded with the
/// closed neighborhood of a maximum-degree vertex, which solve() guarantees.
/// Prunes when a marked vertex falls below the threshold.
RuleOutcome rule_low_degree(KernelState& s, RuleStats* stats = nullptr);

/// Rule 4: delete vertices whose compatibility count cannot beat the
/// incumbent; prune when that hits a marked vertex.
RuleOutcome rule_low_compatibility(KernelState& s, int best_size, RuleStats* stats = nullptr);

/// Rule 5: prune when alive_count minus a vertex-cover lower bound of the
/// incompatibility graph (size of a greedy maximal matching) cannot beat the
/// incumbent. Reuses the cached matching and skips recomputation while the
/// uncovered new conflicts cannot possibly trigger the test.
RuleOutcome rule_vertex_cover(KernelState& s, int best_size, RuleStats* stats = nullptr);

/// Rule 6: when two nonadjacent marked vertices have exactly the threshold
/// number of alive common neighbors (t robust, t+1 hereditary, 1 connected),
/// all of those common neighbors are forced into the solution and marked.
RuleOutcome rule_no_choice(KernelState& s, RuleStats* stats = nullptr);

/// Runs rules 1,3,2,4[,5],6 (cheap first) to a joint fixpoint; rule 5 only
/// participates when in_branching is set. Returns prune as soon as any rule
/// prunes.
RuleOutcome apply_all(KernelState& s, int best_size, bool in_branching,
                      RuleStats* stats = nullptr);

} // namespace twoclub
