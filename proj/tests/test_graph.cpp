#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "twoclub/graph.hpp"

using namespace twoclub;

TEST_SUITE("graph") {
    TEST_CASE("from_edges normalizes loops and duplicates") {
        int loops = 0, dupes = 0;
        Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {2, 2}, {0, 1}}, &loops, &dupes);
        CHECK(g.edge_count() == 1);
        CHECK(loops == 1);
        CHECK(dupes == 2);
        CHECK(g.check_invariants());
    }

    TEST_CASE("closed two neighborhood") {
        SUBCASE("star leaf sees everything") {
            Graph g = fixtures::star_graph(4);
            CHECK(closed_two_neighborhood(g, 1) == VertexSet{0, 1, 2, 3, 4});
        }
        SUBCASE("path endpoint") {
            Graph g = fixtures::path_graph(5);
            CHECK(closed_two_neighborhood(g, 0) == VertexSet{0, 1, 2});
        }
        SUBCASE("six-cycle misses only the antipode") {
            // Frozen from a depth-two BFS done by hand on C6.
            Graph g = fixtures::cycle_graph(6);
            for (Vertex v = 0; v < 6; ++v) {
                VertexSet n2 = closed_two_neighborhood(g, v);
                CHECK(n2.size() == 5);
                CHECK(!set_contains(n2, (v + 3) % 6));
            }
        }
    }

    TEST_CASE("two neighborhood respects the degree bound") {
        std::mt19937 rng(7);
        for (int round = 0; round < 20; ++round) {
            const int n = 3 + static_cast<int>(rng() % 10);
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (rng() % 3 == 0) edges.emplace_back(u, v);
            Graph g = Graph::from_edges(n, edges);
            if (g.max_degree() < 2) continue;
            const int bound = std::min(n, g.max_degree() * g.max_degree());
            for (Vertex v = 0; v < n; ++v)
                CHECK(static_cast<int>(closed_two_neighborhood(g, v).size()) <= bound);
        }
    }

    TEST_CASE("connected components") {
        SUBCASE("edgeless") {
            Graph g = Graph::from_edges(3, {});
            auto comps = connected_components(g);
            REQUIRE(comps.size() == 3);
            CHECK(comps[0] == VertexSet{0});
        }
        SUBCASE("triangle") {
            CHECK(connected_components(fixtures::complete_graph(3)).size() == 1);
        }
        SUBCASE("triangle plus edge") {
            Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
            auto comps = connected_components(g);
            REQUIRE(comps.size() == 2);
            CHECK(comps[0] == VertexSet{0, 1, 2});
            CHECK(comps[1] == VertexSet{3, 4});
        }
    }

    TEST_CASE("induced subgraph") {
        SUBCASE("K4 minus a vertex is K3") {
            auto sub = induced_subgraph(fixtures::complete_graph(4), {0, 2, 3});
            CHECK(sub.graph.edge_count() == 3);
            CHECK(sub.to_parent == VertexSet{0, 2, 3});
        }
        SUBCASE("three consecutive cycle vertices form a path") {
            auto sub = induced_subgraph(fixtures::cycle_graph(5), {0, 1, 2});
            CHECK(sub.graph.edge_count() == 2);
            CHECK(sub.graph.has_edge(0, 1));
            CHECK(sub.graph.has_edge(1, 2));
        }
        SUBCASE("one side of K33 is edgeless") {
            auto sub = induced_subgraph(fixtures::complete_bipartite(3, 3), {0, 1, 2});
            CHECK(sub.graph.edge_count() == 0);
        }
        SUBCASE("adjacency preserved exactly on random graphs") {
            std::mt19937 rng(11);
            for (int round = 0; round < 25; ++round) {
                const int n = 4 + static_cast<int>(rng() % 7);
                std::vector<std::pair<Vertex, Vertex>> edges;
                for (Vertex u = 0; u < n; ++u)
                    for (Vertex v = u + 1; v < n; ++v)
                        if (rng() % 2) edges.emplace_back(u, v);
                Graph g = Graph::from_edges(n, edges);
                VertexSet s;
                for (Vertex v = 0; v < n; ++v)
                    if (rng() % 2) s.push_back(v);
                auto sub = induced_subgraph(g, s);
                for (std::size_t i = 0; i < s.size(); ++i)
                    for (std::size_t j = 0; j < s.size(); ++j)
                        CHECK(sub.graph.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ==
                              (i != j && g.has_edge(s[i], s[j])));
            }
        }
    }

    TEST_CASE("nested induction composes to the root graph") {
        Graph g = fixtures::cycle_graph(6);
        auto sub = induced_subgraph(g, {0, 1, 2, 3, 4});
        auto sub2 = induced_subgraph(sub, {0, 2, 4});
        CHECK(sub2.to_parent == VertexSet{0, 2, 4});
        CHECK(sub2.graph.edge_count() == 0);
    }
}
