#include <doctest.h>

#include <cmath>

#include "twoclub/generator.hpp"

using namespace twoclub;

TEST_SUITE("generator") {
    TEST_CASE("same seed, same graph") {
        Graph a = generate({60, 0.1, 0.4, 12345});
        Graph b = generate({60, 0.1, 0.4, 12345});
        CHECK(a.edges() == b.edges());
        Graph c = generate({60, 0.1, 0.4, 12346});
        CHECK(a.edges() != c.edges());
    }

    TEST_CASE("known stream values stay pinned") {
        // mt19937_64 output is fixed by the standard, so a given seed must
        // produce this exact edge set forever.
        Graph g = generate({6, 0.5, 0.5, 42});
        CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{
                               {0, 2}, {0, 3}, {0, 4}, {0, 5}, {2, 5}, {3, 4}, {3, 5}});
    }

    TEST_CASE("degenerate parameter corners") {
        CHECK(generate({30, 0.0, 0.0, 7}).edge_count() == 0);
        CHECK(generate({30, 1.0, 1.0, 7}).edge_count() == 30 * 29 / 2);
    }

    TEST_CASE("parameter validation") {
        CHECK_THROWS_AS(generate({0, 0.1, 0.2, 1}), std::invalid_argument);
        CHECK_THROWS_AS(generate({5, 0.5, 0.2, 1}), std::invalid_argument);
        CHECK_THROWS_AS(generate({5, -0.1, 0.2, 1}), std::invalid_argument);
        CHECK_THROWS_AS(generate({5, 0.1, 1.2, 1}), std::invalid_argument);
    }

    TEST_CASE("a=b degenerates to the uniform model") {
        // Total edge count over seeds is binomial; stay within four standard
        // errors of the expectation.
        const int n = 100, seeds = 50;
        const double p = 0.3;
        const double pairs = n * (n - 1) / 2.0;
        long long total = 0;
        for (std::uint64_t s = 0; s < seeds; ++s)
            total += generate({n, p, p, 1000 + s}).edge_count();
        const double expected = seeds * pairs * p;
        const double sigma = std::sqrt(seeds * pairs * p * (1 - p));
        CHECK(std::abs(total - expected) < 4 * sigma);
    }

    TEST_CASE("spread parameters hit the target mean density") {
        const int n = 150, seeds = 50;
        double density_sum = 0;
        for (std::uint64_t s = 0; s < seeds; ++s) {
            Graph g = generate({n, 0.05, 0.25, 2000 + s});
            density_sum += static_cast<double>(g.edge_count()) / (n * (n - 1) / 2.0);
        }
        const double mean = density_sum / seeds;
        CHECK(mean == doctest::Approx(0.15).epsilon(0.02 / 0.15));
    }
}
