#include <benchmark/benchmark.h>

#include <numeric>

#include "twoclub/connectivity.hpp"
#include "twoclub/generator.hpp"
#include "twoclub/io.hpp"
#include "twoclub/kernel_state.hpp"
#include "twoclub/reductions.hpp"

using namespace twoclub;

namespace {

InducedSubgraph whole_graph(const Graph& g) {
    VertexSet all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    return induced_subgraph(g, all);
}

void BM_ParseMetis(benchmark::State& state) {
    const std::string text = emit(generate({1000, 0.0, 0.02, 7}), GraphFormat::metis);
    for (auto _ : state) benchmark::DoNotOptimize(parse(text, GraphFormat::metis).graph.edge_count());
}
BENCHMARK(BM_ParseMetis)->Unit(benchmark::kMillisecond);

void BM_KernelInit(benchmark::State& state) {
    const Graph g = generate({static_cast<int>(state.range(0)), 0.1, 0.2, 11});
    for (auto _ : state) {
        KernelState s(whole_graph(g), {Model::robust, 2}, 0);
        benchmark::DoNotOptimize(s.incompat_edge_count());
    }
}
BENCHMARK(BM_KernelInit)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_DeleteUndo(benchmark::State& state) {
    const Graph g = generate({150, 0.1, 0.2, 13});
    KernelState s(whole_graph(g), {Model::robust, 2}, 0);
    for (auto _ : state) {
        const Checkpoint cp = s.checkpoint();
        for (Vertex v = 1; v <= 20; ++v) s.delete_vertex(v);
        s.undo_to(cp);
    }
}
BENCHMARK(BM_DeleteUndo);

void BM_ApplyAll(benchmark::State& state) {
    const Graph g = generate({120, 0.05, 0.25, 17});
    for (auto _ : state) {
        state.PauseTiming();
        KernelState s(whole_graph(g), {Model::robust, 3}, 0);
        state.ResumeTiming();
        benchmark::DoNotOptimize(apply_all(s, 10, true).kind);
    }
}
BENCHMARK(BM_ApplyAll)->Unit(benchmark::kMillisecond);

void BM_DisjointPaths(benchmark::State& state) {
    const Graph g = generate({200, 0.05, 0.15, 19});
    std::vector<std::uint8_t> alive(g.vertex_count(), 1);
    FlowScratch scratch;
    Vertex u = 0, v = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(internally_disjoint_paths(g, alive, u, v, 5, scratch));
        v = (v + 1) % g.vertex_count();
        if (v == u) v = (u + 1) % g.vertex_count();
    }
}
BENCHMARK(BM_DisjointPaths);

} // namespace
