#include <benchmark/benchmark.h>

#include "sawlab/enumeration.hpp"
#include "sawlab/madras.hpp"

using namespace sawlab;

static void BM_walk_count(benchmark::State& state) {
    int n = (int)state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_class(ObjectClass::walk_rooted, n));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_walk_count)->Arg(8)->Arg(10)->Arg(12);

static void BM_walk_count_sharded(benchmark::State& state) {
    EnumConfig cfg;
    cfg.shards = (int)state.range(1);
    int n = (int)state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_class(ObjectClass::walk_rooted, n, cfg));
}
BENCHMARK(BM_walk_count_sharded)->Args({12, 1})->Args({12, 2})->Args({12, 4});

static void BM_polygon_count(benchmark::State& state) {
    int n = (int)state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_class(ObjectClass::polygon, n));
}
BENCHMARK(BM_polygon_count)->Arg(10)->Arg(12)->Arg(14);

static void BM_closing_count(benchmark::State& state) {
    int n = (int)state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(closing_count(n));
}
BENCHMARK(BM_closing_count)->Arg(9)->Arg(11);

static void BM_rgj_build(benchmark::State& state) {
    RgjParams params{(int)state.range(0), (int)state.range(0), 1.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(build_rgj(params).size());
}
BENCHMARK(BM_rgj_build)->Arg(4)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
