#include <benchmark/benchmark.h>

#include "stratadiv/chern.hpp"
#include "stratadiv/porteous.hpp"
#include "stratadiv/pushforward.hpp"
#include "stratadiv/rewrite.hpp"

using namespace stratadiv;

static void BM_chern_F(benchmark::State& state) {
    const Signature mu(3, {6}, {2});
    for (auto _ : state) benchmark::DoNotOptimize(chern_F(mu));
}
BENCHMARK(BM_chern_F);

static void BM_chern_invert(benchmark::State& state) {
    const TautExpr cE = chern_E(2, 3, 3);
    for (auto _ : state) benchmark::DoNotOptimize(chern_invert(cE, 3));
}
BENCHMARK(BM_chern_invert);

static void BM_reduce_difference_class(benchmark::State& state) {
    const TautExpr c3 =
        difference_class(chern_F(Signature(3, {6}, {2})), chern_E(2, 3, 3), 3);
    for (auto _ : state) benchmark::DoNotOptimize(reduce(c3));
}
BENCHMARK(BM_reduce_difference_class);

static void BM_double_pushforward(benchmark::State& state) {
    const TautExpr r =
        reduce(difference_class(chern_F(Signature(3, {6}, {2})), chern_E(2, 3, 3), 3));
    for (auto _ : state)
        benchmark::DoNotOptimize(pushforward_last(pushforward_last(r, 3), 3));
}
BENCHMARK(BM_double_pushforward);

static void BM_lambda_pipeline(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(lambda_pipeline());
}
BENCHMARK(BM_lambda_pipeline);

BENCHMARK_MAIN();
