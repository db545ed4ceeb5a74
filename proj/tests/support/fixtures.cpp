#include "support/fixtures.hpp"

#include "twoclub/generator.hpp"

namespace twoclub::fixtures {

Graph path_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    if (n >= 3) edges.emplace_back(n - 1, 0);
    return Graph::from_edges(n, edges);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(leaves + 1, edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph::from_edges(a + b, edges);
}

Graph hubbed_block_ring(int block_size) {
    const int n = 6 * block_size + 1;
    const Vertex hub = 0;
    auto block_vertex = [&](int block, int i) { return 1 + block * block_size + i; };
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(hub, v);
    for (int block = 0; block < 6; ++block) {
        const int next = (block + 1) % 6;
        for (int i = 0; i < block_size; ++i)
            for (int j = 0; j < block_size; ++j)
                edges.emplace_back(block_vertex(block, i), block_vertex(next, j));
    }
    return Graph::from_edges(n, edges);
}

std::vector<Graph> connected_sample(int count, int min_n, int max_n, std::uint64_t seed) {
    std::vector<Graph> out;
    std::uint64_t attempt = 0;
    while (static_cast<int>(out.size()) < count) {
        const int n = min_n + static_cast<int>(attempt % (max_n - min_n + 1));
        const double density = 0.1 * (1 + attempt % 9);
        GenParams params{n, density, density, seed + attempt};
        ++attempt;
        Graph g = generate(params);
        if (connected_components(g).size() == 1) out.push_back(std::move(g));
    }
    return out;
}

} // namespace twoclub::fixtures
