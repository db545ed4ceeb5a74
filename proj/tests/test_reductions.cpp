#include <doctest.h>

#include <algorithm>
#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/rule_fuzz.hpp"
#include "twoclub/reductions.hpp"

using namespace twoclub;
using testing::full_state;

TEST_SUITE("reductions") {
    TEST_CASE("marked incompatible rule") {
        SUBCASE("two incompatible spokes marked prunes") {
            // Hubs 0,1 over spokes 2,3,4; spokes are pairwise incompatible
            // for robust t=3.
            KernelState s = full_state(fixtures::complete_bipartite(2, 3), {Model::robust, 3}, 2);
            s.mark_vertex(3);
            CHECK(rule_marked_incompatible(s).kind == Outcome::prune);
        }
        SUBCASE("triangle never prunes") {
            KernelState s = full_state(fixtures::complete_graph(3), {Model::robust, 1}, 0);
            s.mark_vertex(1);
            s.mark_vertex(2);
            CHECK(rule_marked_incompatible(s).kind == Outcome::fixpoint);
        }
        SUBCASE("path endpoints marked prunes for hereditary t=1") {
            // One shared neighbor is short of the required two.
            KernelState s = full_state(fixtures::path_graph(3), {Model::hereditary, 1}, 0);
            s.mark_vertex(2);
            CHECK(rule_marked_incompatible(s).kind == Outcome::prune);
        }
    }

    TEST_CASE("incompatible resolution rule") {
        SUBCASE("marked path endpoint deletes the other endpoint") {
            KernelState s = full_state(fixtures::path_graph(3), {Model::hereditary, 1}, 0);
            RuleOutcome out = rule_incompatible_resolution(s);
            CHECK(out.kind == Outcome::reduced);
            CHECK(out.deletions == 1);
            CHECK(s.alive(0));
            CHECK(s.alive(1));
            CHECK(!s.alive(2));
        }
        SUBCASE("nothing to do without conflicts against marks") {
            KernelState s = full_state(fixtures::complete_graph(4), {Model::robust, 2}, 0);
            CHECK(rule_incompatible_resolution(s).kind == Outcome::fixpoint);
        }
        SUBCASE("marked spoke deletes the other spokes") {
            KernelState s = full_state(fixtures::complete_bipartite(2, 3), {Model::robust, 3}, 2);
            RuleOutcome out = rule_incompatible_resolution(s);
            CHECK(out.kind == Outcome::reduced);
            CHECK(!s.alive(3));
            CHECK(!s.alive(4));
        }
    }

    TEST_CASE("low degree rule") {
        SUBCASE("star collapses for robust t=2") {
            KernelState s = full_state(fixtures::star_graph(5), {Model::robust, 2}, 0);
            // Seed 0 is the center: the leaves go first, then the rule hits
            // the marked center and prunes.
            CHECK(rule_low_degree(s).kind == Outcome::prune);
            CHECK(s.alive_count() < 6);
        }
        SUBCASE("K4 is stable for hereditary t=2") {
            KernelState s = full_state(fixtures::complete_graph(4), {Model::hereditary, 2}, 0);
            CHECK(rule_low_degree(s).kind == Outcome::fixpoint);
            CHECK(s.alive_count() == 4);
        }
        SUBCASE("base case eats the whole path") {
            // Robust t=1 with a seeded incumbent also deletes degree-one
            // vertices; on P5 seeded at the middle the cascade reaches the
            // seed and prunes.
            KernelState s = full_state(fixtures::path_graph(5), {Model::robust, 1}, 2);
            CHECK(rule_low_degree(s).kind == Outcome::prune);
        }
    }

    TEST_CASE("low compatibility rule") {
        SUBCASE("path with incumbent 2 collapses to a prune") {
            // Both endpoints count only two compatible vertices; deleting
            // them drags the marked middle below the bound as well.
            KernelState s = full_state(fixtures::path_graph(3), {Model::hereditary, 1}, 1);
            CHECK(rule_low_compatibility(s, 2).kind == Outcome::prune);
        }
        SUBCASE("incumbent zero never fires") {
            KernelState s = full_state(fixtures::path_graph(3), {Model::hereditary, 1}, 1);
            CHECK(rule_low_compatibility(s, 0).kind == Outcome::fixpoint);
            CHECK(s.alive_count() == 3);
        }
        SUBCASE("K5 is stable below its count") {
            KernelState s = full_state(fixtures::complete_graph(5), {Model::robust, 1}, 0);
            CHECK(rule_low_compatibility(s, 4).kind == Outcome::fixpoint);
        }
    }

    TEST_CASE("vertex cover rule") {
        SUBCASE("perfect matching on six alive vertices prunes at incumbent 3") {
            // Octahedron (K_{2,2,2}) with hereditary t=4: exactly the three
            // antipodal pairs are incompatible, a perfect matching.
            Graph g = Graph::from_edges(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5},
                                            {1, 2}, {1, 3}, {1, 4}, {1, 5},
                                            {2, 4}, {2, 5}, {3, 4}, {3, 5}});
            KernelState s = full_state(g, {Model::hereditary, 4}, 0);
            CHECK(s.incompat_edge_count() == 3);
            RuleStats stats;
            CHECK(rule_vertex_cover(s, 3, &stats).kind == Outcome::prune);
            CHECK(s.vcr().last_bound == 3);
            CHECK(stats.vcr_recomputes == 1);
        }
        SUBCASE("empty incompatibility graph gives bound zero") {
            KernelState s = full_state(fixtures::complete_graph(4), {Model::robust, 1}, 0);
            CHECK(rule_vertex_cover(s, 3).kind == Outcome::fixpoint);
            CHECK(s.vcr().valid);
            CHECK(s.vcr().last_bound == 0);
        }
        SUBCASE("incompatibility triangle among five alive prunes at incumbent 4") {
            // K5 minus a triangle: the three nonadjacent pairs each share
            // only two neighbors, short for hereditary t=2.
            Graph g = Graph::from_edges(5, {{0, 3}, {0, 4}, {1, 3}, {1, 4},
                                            {2, 3}, {2, 4}, {3, 4}});
            KernelState s = full_state(g, {Model::hereditary, 2}, 3);
            CHECK(s.incompat_edge_count() == 3);
            CHECK(rule_vertex_cover(s, 4).kind == Outcome::prune);
            CHECK(s.vcr().last_bound == 1); // greedy matching on a triangle
        }
        SUBCASE("cached bound skips recomputation until conflicts could matter") {
            KernelState s = full_state(fixtures::complete_graph(6), {Model::robust, 2}, 0);
            RuleStats stats;
            CHECK(rule_vertex_cover(s, 1, &stats).kind == Outcome::fixpoint);
            CHECK(stats.vcr_recomputes == 1);
            // No new conflicts, bound 0: 6 alive - 0 > 1 keeps it skippable.
            CHECK(rule_vertex_cover(s, 1, &stats).kind == Outcome::fixpoint);
            CHECK(stats.vcr_skips == 1);
            CHECK(stats.vcr_recomputes == 1);
        }
    }

    TEST_CASE("no choice rule") {
        SUBCASE("five-cycle connected t=2 forces the unique middle") {
            KernelState s = full_state(fixtures::cycle_graph(5), {Model::connected, 2}, 0);
            s.mark_vertex(2);
            RuleOutcome out = rule_no_choice(s);
            CHECK(out.kind == Outcome::reduced);
            CHECK(s.marked(1));
        }
        SUBCASE("K33 hereditary t=2 forces the full far side") {
            KernelState s =
                full_state(fixtures::complete_bipartite(3, 3), {Model::hereditary, 2}, 0);
            s.mark_vertex(1);
            RuleOutcome out = rule_no_choice(s);
            CHECK(out.kind == Outcome::reduced);
            CHECK(s.marked(3));
            CHECK(s.marked(4));
            CHECK(s.marked(5));
            // The far side then forces the remaining near vertex in turn.
            CHECK(out.marks == 4);
            CHECK(s.marked(2));
        }
        SUBCASE("adjacent or unmarked pairs do nothing") {
            KernelState s = full_state(fixtures::complete_graph(4), {Model::robust, 1}, 0);
            s.mark_vertex(1);
            CHECK(rule_no_choice(s).kind == Outcome::fixpoint);
        }
    }

    TEST_CASE("apply_all") {
        SUBCASE("clean kernel is a fixpoint with zero firings") {
            KernelState s = full_state(fixtures::complete_graph(5), {Model::robust, 2}, 0);
            RuleStats stats;
            RuleOutcome out = apply_all(s, 0, false, &stats);
            CHECK(out.kind == Outcome::fixpoint);
            CHECK(stats.resolution_deletions == 0);
            CHECK(stats.low_degree_deletions == 0);
            CHECK(stats.no_choice_marks == 0);
        }
        SUBCASE("P3 hereditary prunes through the low degree rule") {
            // The degree threshold t+1 = 2 wipes the path ends; one of them
            // is the seed, so the kernel aborts. The size-2 clique {0,1}
            // is the solver clique fallback's job.
            KernelState s = full_state(fixtures::path_graph(3), {Model::hereditary, 1}, 0);
            CHECK(apply_all(s, 0, false).kind == Outcome::prune);
        }
        SUBCASE("marked spoke cascades to a prune") {
            KernelState s = full_state(fixtures::complete_bipartite(2, 3), {Model::robust, 3}, 2);
            CHECK(apply_all(s, 0, false).kind == Outcome::prune);
        }
        SUBCASE("no choice feeds marked incompatible") {
            // C4 diagonals marked for hereditary t=2: the lone diagonal pair
            // has two common neighbors, which is short of t+1=3, so the
            // marked pair is incompatible and the branch dies.
            KernelState s = full_state(fixtures::cycle_graph(4), {Model::hereditary, 2}, 0);
            s.mark_vertex(2);
            CHECK(apply_all(s, 0, false).kind == Outcome::prune);
        }
    }

    TEST_CASE("rule soundness fuzz") {
        auto report = testing::run_rule_soundness_fuzz(150, 9001);
        CHECK(report.applications == 150);
        CHECK_MESSAGE(report.violations == 0, report.first_violation);
        CHECK(report.prunes > 5);
    }

    TEST_CASE("apply_all outcome is order-insensitive on random states") {
        // No rule order is canonical; shuffled orders should agree on the
        // prune verdict and surviving size. Disagreement is recorded as a
        // finding rather than a failure.
        std::mt19937 rng(77);
        int disagreements = 0;
        int runs = 0;
        for (int round = 0; round < 40; ++round) {
            const int n = 5 + static_cast<int>(rng() % 5);
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (rng() % 100 < 50) edges.emplace_back(u, v);
            Graph g = Graph::from_edges(n, edges);
            const Model model = static_cast<Model>(round % 3);
            const ModelSpec spec{model, model == Model::hereditary ? 1 : 2};
            const int best = static_cast<int>(rng() % n);
            const Vertex extra_mark = static_cast<Vertex>(1 + rng() % (n - 1));

            auto run_order = [&](const std::vector<int>& order) {
                KernelState s = full_state(g, spec, 0);
                s.mark_vertex(extra_mark);
                for (;;) {
                    bool changed = false;
                    for (int rule : order) {
                        RuleOutcome out;
                        switch (rule) {
                        case 1: out = rule_marked_incompatible(s); break;
                        case 2: out = rule_incompatible_resolution(s); break;
                        case 3: out = rule_low_degree(s); break;
                        case 4: out = rule_low_compatibility(s, best); break;
                        case 6: out = rule_no_choice(s); break;
                        }
                        if (out.kind == Outcome::prune) return std::make_pair(true, 0);
                        if (out.kind == Outcome::reduced) changed = true;
                    }
                    if (!changed) return std::make_pair(false, s.alive_count());
                }
            };

            std::vector<int> order{1, 3, 2, 4, 6};
            auto reference = run_order(order);
            for (int shuffle = 0; shuffle < 3; ++shuffle) {
                std::shuffle(order.begin(), order.end(), rng);
                ++runs;
                if (run_order(order) != reference) ++disagreements;
            }
        }
        if (disagreements > 0)
            MESSAGE("finding: rule order changed the apply_all outcome in ", disagreements,
                    " of ", runs, " shuffles");
    }
}
