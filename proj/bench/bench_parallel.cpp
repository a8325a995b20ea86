// Serial reference vs OpenMP kernels on the fixture graphs.

#include "tlocus/enumerate.hpp"
#include "tlocus/locus.hpp"

#include "fixtures.hpp"

#include <benchmark/benchmark.h>

using namespace tlocus;

namespace {

void BM_WrMasksSerial(benchmark::State& state) {
    const EGraph g = complete_graph(fixtures::g_in());
    for (auto _ : state)
        benchmark::DoNotOptimize(wr_subgraph_masks_serial(g, static_cast<std::size_t>(state.range(0))));
}

void BM_WrMasksParallel(benchmark::State& state) {
    const EGraph g = complete_graph(fixtures::g_in());
    for (auto _ : state)
        benchmark::DoNotOptimize(wr_subgraph_masks(g, static_cast<std::size_t>(state.range(0))));
}

void BM_GlobalBoundSerial(benchmark::State& state) {
    const EGraph g = fixtures::g_k4();
    for (auto _ : state)
        benchmark::DoNotOptimize(global_lower_bound_serial(g));
}

void BM_GlobalBoundParallel(benchmark::State& state) {
    const EGraph g = fixtures::g_k4();
    for (auto _ : state)
        benchmark::DoNotOptimize(global_lower_bound(g));
}

void BM_GlobalBoundCappedSerial(benchmark::State& state) {
    const EGraph g = fixtures::g_in();
    for (auto _ : state)
        benchmark::DoNotOptimize(global_lower_bound_serial(g, static_cast<std::size_t>(state.range(0))));
}

void BM_GlobalBoundCappedParallel(benchmark::State& state) {
    const EGraph g = fixtures::g_in();
    for (auto _ : state)
        benchmark::DoNotOptimize(global_lower_bound(g, static_cast<std::size_t>(state.range(0))));
}

} // namespace

BENCHMARK(BM_WrMasksSerial)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WrMasksParallel)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GlobalBoundSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GlobalBoundParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GlobalBoundCappedSerial)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GlobalBoundCappedParallel)->Arg(20000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
