#include <benchmark/benchmark.h>

#include "windex/enumerate.hpp"
#include "windex/fibrations.hpp"
#include "windex/reps.hpp"

using namespace windex;

static void BM_TransferSystems(benchmark::State& st) {
    auto p = chain_presentation(2, static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_transfer_systems(*p).size());
}
BENCHMARK(BM_TransferSystems)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_ClosureComplete(benchmark::State& st) {
    auto p = chain_presentation(2, static_cast<int>(st.range(0)));
    auto gens = flatten(complete(p).sparse());
    const int bound = static_cast<int>(st.range(1));
    for (auto _ : st) benchmark::DoNotOptimize(closure(*p, gens, -1, bound));
}
BENCHMARK(BM_ClosureComplete)->Args({1, 6})->Args({2, 6})->Args({2, 8})->Unit(benchmark::kMillisecond);

static void BM_SparseGenerate(benchmark::State& st) {
    auto p = chain_presentation(3, 2);
    auto w = arity_support(named_rep(p, "lambda_Cp2"));
    for (auto _ : st) benchmark::DoNotOptimize(sparse_generate(p, w.sparse()));
}
BENCHMARK(BM_SparseGenerate)->Unit(benchmark::kMicrosecond);

static void BM_Join(benchmark::State& st) {
    auto p = chain_presentation(2, 2);
    auto a = arity_support(named_rep(p, "lambda_Cp"));
    auto b = arity_support(named_rep(p, "lambda_Cp2"));
    for (auto _ : st) benchmark::DoNotOptimize(join(a, b));
}
BENCHMARK(BM_Join)->Unit(benchmark::kMicrosecond);

static void BM_BruteForce(benchmark::State& st) {
    auto p = chain_presentation(2, static_cast<int>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(enumerate_wis_bruteforce(p, WisClass::unital, {.labels = false}).systems.size());
}
BENCHMARK(BM_BruteForce)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_Fiberwise(benchmark::State& st) {
    auto p = chain_presentation(2, static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_wis_fiberwise(p, false).result.systems.size());
}
BENCHMARK(BM_Fiberwise)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_Hull(benchmark::State& st) {
    auto p = chain_presentation(3, 1);
    auto w = arity_support(named_rep(p, "lambda"));
    for (auto _ : st) benchmark::DoNotOptimize(multiplicative_hull(w));
}
BENCHMARK(BM_Hull)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
