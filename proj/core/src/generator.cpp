#include "twoclub/generator.hpp"

#include <random>

namespace twoclub {
namespace {

double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

Graph generate(const GenParams& params) {
    params.validate();
    std::mt19937_64 rng(params.seed);

    std::vector<double> p(params.n);
    for (double& x : p) x = params.a + (params.b - params.a) * unit_draw(rng);

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < params.n; ++u)
        for (Vertex v = u + 1; v < params.n; ++v)
            if (unit_draw(rng) < (p[u] + p[v]) / 2.0) edges.emplace_back(u, v);
    return Graph::from_edges(params.n, edges);
}

} // namespace twoclub
