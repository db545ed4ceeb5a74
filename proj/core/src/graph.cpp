#include "twoclub/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace twoclub {

bool is_strictly_sorted(const VertexSet& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

bool set_contains(const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                        int* dropped_loops, int* dropped_duplicates) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.adj_.assign(n, {});
    int loops = 0;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::out_of_range("edge endpoint out of range");
        if (u == v) {
            ++loops;
            continue;
        }
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    int dupes = 0;
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        auto last = std::unique(list.begin(), list.end());
        dupes += static_cast<int>(list.end() - last);
        list.erase(last, list.end());
        g.m_ += static_cast<long long>(list.size());
    }
    g.m_ /= 2;
    if (dropped_loops) *dropped_loops = loops;
    if (dropped_duplicates) *dropped_duplicates = dupes / 2;
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& list : adj_) d = std::max(d, static_cast<int>(list.size()));
    return d;
}

int Graph::isolated_vertex_count() const {
    int k = 0;
    for (const auto& list : adj_)
        if (list.empty()) ++k;
    return k;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::check_invariants() const {
    long long deg_sum = 0;
    for (Vertex u = 0; u < vertex_count(); ++u) {
        const auto& list = adj_[u];
        if (!is_strictly_sorted(list)) return false;
        deg_sum += static_cast<long long>(list.size());
        for (Vertex v : list) {
            if (v < 0 || v >= vertex_count() || v == u) return false;
            if (!has_edge(v, u)) return false;
        }
    }
    return deg_sum == 2 * m_;
}

VertexSet InducedSubgraph::map_to_parent(const VertexSet& local) const {
    VertexSet out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(to_parent[v]);
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet closed_two_neighborhood(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex out of range");
    std::vector<char> seen(g.vertex_count(), 0);
    seen[v] = 1;
    VertexSet out{v};
    for (Vertex u : g.neighbors(v)) {
        if (!seen[u]) {
            seen[u] = 1;
            out.push_back(u);
        }
        for (Vertex w : g.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                out.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> components;
    std::vector<char> seen(g.vertex_count(), 0);
    VertexSet stack;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (!is_strictly_sorted(s)) throw std::invalid_argument("vertex set must be strictly sorted");
    std::vector<Vertex> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.vertex_count()) throw std::out_of_range("vertex out of range");
        local[s[i]] = static_cast<Vertex>(i);
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u : s)
        for (Vertex v : g.neighbors(u))
            if (u < v && local[v] >= 0) edges.emplace_back(local[u], local[v]);
    InducedSubgraph sub;
    sub.graph = Graph::from_edges(static_cast<int>(s.size()), edges);
    sub.to_parent = s;
    return sub;
}

InducedSubgraph induced_subgraph(const InducedSubgraph& sub, const VertexSet& local_s) {
    InducedSubgraph out = induced_subgraph(sub.graph, local_s);
    for (Vertex& v : out.to_parent) v = sub.to_parent[v];
    return out;
}

} // namespace twoclub
