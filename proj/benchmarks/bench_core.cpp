#include <benchmark/benchmark.h>

#include <random>

#include "sqcheck/bitmatrix.hpp"
#include "sqcheck/spaces.hpp"
#include "sqcheck/verify.hpp"

using namespace sqcheck;

static void BM_BuildModule(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bso_module(n, 40));
    }
}
BENCHMARK(BM_BuildModule)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_Rank(benchmark::State& state)
{
    const auto size = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(1);
    std::bernoulli_distribution coin(0.3);
    BitMatrix m(size, size);
    for (std::size_t r = 0; r < size; ++r) {
        for (std::size_t c = 0; c < size; ++c) {
            if (coin(rng)) {
                m.set(r, c);
            }
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(m.rank());
    }
}
BENCHMARK(BM_Rank)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMillisecond);

static void BM_Q1ViaSq(benchmark::State& state)
{
    const SteenrodContext ctx(RingSpec::bso(6, 40));
    const auto basis = enumerate_basis(ctx.spec(), 30);
    for (auto _ : state) {
        for (const auto& m : basis) {
            benchmark::DoNotOptimize(q1_via_sq(PolynomialF2(m), ctx));
        }
    }
}
BENCHMARK(BM_Q1ViaSq)->Unit(benchmark::kMillisecond);

static void BM_Theorem3(benchmark::State& state)
{
    const int rank = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_theorem3(rank, 40));
    }
}
BENCHMARK(BM_Theorem3)->DenseRange(3, 9, 2)->Unit(benchmark::kMillisecond);

static void BM_Splitting(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(splitting_report(n, 40));
    }
}
BENCHMARK(BM_Splitting)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
