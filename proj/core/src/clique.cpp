#include "twoclub/clique.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace twoclub {
namespace {

using Word = std::uint64_t;

struct Bits {
    std::vector<Word> w;
    explicit Bits(int words = 0) : w(words, 0) {}
    void set(int i) { w[i >> 6] |= Word{1} << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(Word{1} << (i & 63)); }
    bool test(int i) const { return w[i >> 6] >> (i & 63) & 1; }
    bool any() const {
        for (Word x : w)
            if (x) return true;
        return false;
    }
};

struct CliqueSearch {
    int n;
    int words;
    std::vector<Bits> adj;
    std::vector<Vertex> current, best;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    bool timed_out = false;
    std::uint64_t ticks = 0;

    bool expired() {
        if (!deadline) return false;
        if ((++ticks & 0x3ff) != 0) return timed_out;
        if (std::chrono::steady_clock::now() >= *deadline) timed_out = true;
        return timed_out;
    }

    int first_set(const Bits& b) const {
        for (int wi = 0; wi < words; ++wi)
            if (b.w[wi]) return wi * 64 + std::countr_zero(b.w[wi]);
        return -1;
    }

    // Greedy coloring of the candidate set; vertices come back ordered by
    // color, so color numbers are nondecreasing upper bounds for the clique
    // size achievable from each prefix.
    void color_sort(const Bits& cand, std::vector<Vertex>& order, std::vector<int>& bound) {
        order.clear();
        bound.clear();
        Bits rest = cand;
        int color = 0;
        while (rest.any()) {
            ++color;
            Bits cls = rest; // independent set forming this color class
            while (true) {
                int v = first_set(cls);
                if (v < 0) break;
                order.push_back(v);
                bound.push_back(color);
                rest.reset(v);
                cls.reset(v);
                for (int wj = 0; wj < words; ++wj) cls.w[wj] &= ~adj[v].w[wj];
            }
        }
    }

    void expand(Bits& cand) {
        if (expired()) return;
        std::vector<Vertex> order;
        std::vector<int> bound;
        color_sort(cand, order, bound);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(current.size()) + bound[i] <= static_cast<int>(best.size()))
                return;
            Vertex v = order[i];
            current.push_back(v);
            Bits next(words);
            bool nonempty = false;
            for (int wi = 0; wi < words; ++wi) {
                next.w[wi] = cand.w[wi] & adj[v].w[wi];
                nonempty |= next.w[wi] != 0;
            }
            if (!nonempty) {
                if (current.size() > best.size()) best = current;
            } else {
                expand(next);
            }
            current.pop_back();
            cand.reset(v);
            if (timed_out) return;
        }
    }
};

} // namespace

VertexSet clique_max(const Graph& g,
                     std::optional<std::chrono::steady_clock::time_point> deadline,
                     bool& timed_out) {
    timed_out = false;
    const int n = g.vertex_count();
    if (n == 0) return {};

    CliqueSearch search;
    search.n = n;
    search.words = (n + 63) / 64;
    search.adj.assign(n, Bits(search.words));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u)) search.adj[u].set(v);
    search.deadline = deadline;

    Bits all(search.words);
    for (Vertex v = 0; v < n; ++v) all.set(v);
    search.expand(all);

    timed_out = search.timed_out;
    VertexSet out = search.best;
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet clique_max(const Graph& g) {
    bool timed_out = false;
    return clique_max(g, std::nullopt, timed_out);
}

} // namespace twoclub
