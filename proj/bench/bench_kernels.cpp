// Serial reference loops against their OpenMP counterparts on Fig.-scale grids.

#include <benchmark/benchmark.h>

#include "ewwp/kernels.hpp"

namespace {

using namespace ewwp;

struct Workload {
    PacketMoments moments;
    ClassicalOrbit orbit;
    std::int64_t N;
    std::vector<double> ts;
};

Workload make(std::int64_t N, std::size_t steps)
{
    const WellConfig cfg;
    const auto orbit = orbit_for_level(cfg, 500);
    return {PacketMoments(cfg, PacketSpec{500, N}), orbit, N,
            kernels::time_grid(0.0, 2.0 * orbit.period(), steps)};
}

void expectations_serial(benchmark::State& state)
{
    const auto w = make(state.range(0), static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::serial::expectations(w.moments, w.ts));
    }
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void expectations_parallel(benchmark::State& state)
{
    const auto w = make(state.range(0), static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::expectations(w.moments, w.ts));
    }
    state.SetItemsProcessed(state.iterations() * state.range(1));
    state.counters["threads"] = kernels::thread_count();
}

void fejer_serial(benchmark::State& state)
{
    const auto w = make(state.range(0), static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::serial::fejer(w.orbit, w.N, w.ts));
    }
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void fejer_parallel(benchmark::State& state)
{
    const auto w = make(state.range(0), static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::fejer(w.orbit, w.N, w.ts));
    }
    state.SetItemsProcessed(state.iterations() * state.range(1));
    state.counters["threads"] = kernels::thread_count();
}

void sizes(benchmark::internal::Benchmark* b)
{
    b->Args({23, 2000})->Args({23, 10000})->Args({90, 2000})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(expectations_serial)->Apply(sizes);
BENCHMARK(expectations_parallel)->Apply(sizes)->UseRealTime();
BENCHMARK(fejer_serial)->Apply(sizes);
BENCHMARK(fejer_parallel)->Apply(sizes)->UseRealTime();

BENCHMARK_MAIN();
