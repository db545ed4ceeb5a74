#include <benchmark/benchmark.h>

#include "twoclub/generator.hpp"
#include "twoclub/solver.hpp"

using namespace twoclub;

namespace {

void BM_SolveRobustT1(benchmark::State& state) {
    const Graph g = generate({static_cast<int>(state.range(0)), 0.0, 0.3, 5000});
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        SolveReport r = solve(g, {Model::robust, 1});
        nodes = r.counters.branch_nodes;
        benchmark::DoNotOptimize(r.best_size());
    }
    state.counters["branch_nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_SolveRobustT1)->Arg(60)->Arg(80)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SolveHereditary(benchmark::State& state) {
    const Graph g = generate({80, 0.0, 0.3, 5001});
    const int t = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SolveReport r = solve(g, {Model::hereditary, t});
        benchmark::DoNotOptimize(r.best_size());
    }
}
BENCHMARK(BM_SolveHereditary)->Arg(0)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SolveConnected(benchmark::State& state) {
    const Graph g = generate({40, 0.1, 0.3, 5002});
    const int t = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SolveReport r = solve(g, {Model::connected, t});
        benchmark::DoNotOptimize(r.best_size());
    }
}
BENCHMARK(BM_SolveConnected)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
