#include "twoclub/ilp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace twoclub {

IlpModel build_hereditary_model(const Graph& g, int t) {
    if (t < 0) throw std::invalid_argument("t must be nonnegative");
    IlpModel model;
    model.n = g.vertex_count();
    model.t = t;
    for (Vertex u = 0; u < model.n; ++u) {
        for (Vertex w = u + 1; w < model.n; ++w) {
            if (g.has_edge(u, w)) continue;
            IlpConstraint c;
            c.u = u;
            c.w = w;
            const auto& a = g.neighbors(u);
            const auto& b = g.neighbors(w);
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(c.common));
            model.constraints.push_back(std::move(c));
        }
    }
    return model;
}

std::string emit_hereditary_lp(const Graph& g, int t) {
    const IlpModel model = build_hereditary_model(g, t);
    std::ostringstream out;
    out << "Maximize\n obj:";
    for (Vertex v = 0; v < model.n; ++v) out << (v == 0 ? " " : " + ") << 'x' << v;
    out << "\nSubject To\n";
    const int coeff = t + 1;
    for (std::size_t i = 0; i < model.constraints.size(); ++i) {
        const auto& c = model.constraints[i];
        out << " c" << i << ": ";
        if (coeff == 1)
            out << 'x' << c.u << " + x" << c.w;
        else
            out << coeff << " x" << c.u << " + " << coeff << " x" << c.w;
        for (Vertex v : c.common) out << " - x" << v;
        out << " <= " << coeff << '\n';
    }
    out << "Binary\n";
    for (Vertex v = 0; v < model.n; ++v) out << " x" << v << '\n';
    out << "End\n";
    return out.str();
}

int evaluate_small(const Graph& g, int t) {
    if (g.vertex_count() > 16)
        throw std::invalid_argument("evaluate_small is limited to n <= 16");
    const IlpModel model = build_hereditary_model(g, t);
    const int coeff = t + 1;
    int best = 0;
    const std::uint32_t end = model.n >= 32 ? 0 : (1u << model.n);
    for (std::uint32_t mask = 0; mask < end; ++mask) {
        bool feasible = true;
        for (const auto& c : model.constraints) {
            int lhs = coeff * (mask >> c.u & 1) + coeff * (mask >> c.w & 1);
            for (Vertex v : c.common) lhs -= static_cast<int>(mask >> v & 1);
            if (lhs > coeff) {
                feasible = false;
                break;
            }
        }
        if (feasible) best = std::max(best, std::popcount(mask));
    }
    return best;
}

} // namespace twoclub
