#include "twoclub/connectivity.hpp"

#include <stdexcept>

namespace twoclub {
namespace {

// Arcs are stored with their reverse arc at index^1.
struct NetBuilder {
    FlowScratch& s;
    explicit NetBuilder(FlowScratch& scratch, int nodes) : s(scratch) {
        s.head.assign(nodes, -1);
        s.arc_to.clear();
        s.arc_cap.clear();
        s.next_arc.clear();
    }
    void add(int from, int to, signed char cap) {
        s.arc_to.push_back(to);
        s.arc_cap.push_back(cap);
        s.next_arc.push_back(s.head[from]);
        s.head[from] = static_cast<int>(s.arc_to.size()) - 1;
        s.arc_to.push_back(from);
        s.arc_cap.push_back(0);
        s.next_arc.push_back(s.head[to]);
        s.head[to] = static_cast<int>(s.arc_to.size()) - 1;
    }
};

} // namespace

int internally_disjoint_paths(const Graph& g, std::span<const std::uint8_t> alive, Vertex u,
                              Vertex v, int cap, FlowScratch& scratch,
                              std::uint64_t* flow_calls) {
    if (u == v) throw std::logic_error("disjoint paths queried for identical endpoints");
    if (!alive[u] || !alive[v]) throw std::logic_error("disjoint paths queried for dead endpoint");
    if (cap < 1) throw std::invalid_argument("cap must be at least 1");
    if (flow_calls) ++*flow_calls;

    const bool adjacent = g.has_edge(u, v);
    int base = 0;
    if (adjacent) {
        // The direct edge is one internally disjoint path on its own.
        base = 1;
        if (cap == 1) return 1;
    }
    const int want = cap - base;

    const int n = g.vertex_count();
    NetBuilder net(scratch, 2 * n);
    for (Vertex w = 0; w < n; ++w) {
        if (!alive[w]) continue;
        if (w != u && w != v) net.add(2 * w, 2 * w + 1, 1); // internal arc, capacity one
    }
    for (Vertex a = 0; a < n; ++a) {
        if (!alive[a]) continue;
        for (Vertex b : g.neighbors(a)) {
            if (b < a || !alive[b]) continue;
            if (adjacent && ((a == u && b == v) || (a == v && b == u))) continue;
            int a_out = (a == u || a == v) ? 2 * a : 2 * a + 1;
            int b_out = (b == u || b == v) ? 2 * b : 2 * b + 1;
            net.add(a_out, 2 * b, 1);
            net.add(b_out, 2 * a, 1);
        }
    }

    const int source = 2 * u; // u has no internal arc; 2u acts as its single node
    const int sink = 2 * v;
    auto& s = scratch;
    s.parent_arc.assign(2 * n, -1);

    int flow = 0;
    while (flow < want) {
        // BFS over the residual network (Edmonds-Karp order for determinism).
        std::fill(s.parent_arc.begin(), s.parent_arc.end(), -1);
        s.queue.clear();
        s.queue.push_back(source);
        s.parent_arc[source] = -2;
        bool reached = false;
        for (std::size_t qi = 0; qi < s.queue.size() && !reached; ++qi) {
            int node = s.queue[qi];
            for (int a = s.head[node]; a >= 0; a = s.next_arc[a]) {
                if (s.arc_cap[a] <= 0) continue;
                int to = s.arc_to[a];
                if (s.parent_arc[to] != -1) continue;
                s.parent_arc[to] = a;
                if (to == sink) {
                    reached = true;
                    break;
                }
                s.queue.push_back(to);
            }
        }
        if (!reached) break;
        for (int node = sink; node != source;) {
            int a = s.parent_arc[node];
            --s.arc_cap[a];
            ++s.arc_cap[a ^ 1];
            node = s.arc_to[a ^ 1];
        }
        ++flow;
    }
    return base + flow;
}

int internally_disjoint_paths(const Graph& g, Vertex u, Vertex v, int cap) {
    std::vector<std::uint8_t> alive(g.vertex_count(), 1);
    FlowScratch scratch;
    return internally_disjoint_paths(g, alive, u, v, cap, scratch);
}

} // namespace twoclub
