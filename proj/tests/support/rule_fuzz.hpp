#pragma once

#include <cstdint>
#include <string>

namespace twoclub::testing {

struct RuleFuzzReport {
    int applications = 0;
    int prunes = 0;
    int violations = 0;
    std::string first_violation;
};

/// Randomized soundness check of the six reduction rules against the
/// brute-force consistent-optimum oracle. Each round builds a random kernel
/// state (n <= 10) with random deletions and marks, applies one rule, and
/// verifies the rule's exact preservation guarantee:
///
///   Marked Incompatible     prune only when no consistent solution exists.
///   Incompatible Resolution optimum preserved exactly.
///   Low Degree              robust/connected non-base: optimum preserved
///                           exactly; base case: solutions larger than the
///                           seeded incumbent preserved (the incumbent is
///                           seeded max-degree+1 as the solver guarantees);
///                           hereditary: solutions larger than t+1 preserved
///                           (smaller ones are cliques, recovered by the
///                           solver's clique fallback).
///   Low Compatibility       solutions larger than the incumbent preserved.
///   Vertex Cover            prune only when the optimum is at most the
///                           incumbent.
///   No Choice               optimum preserved exactly.
RuleFuzzReport run_rule_soundness_fuzz(int rounds, std::uint64_t seed);

} // namespace twoclub::testing
