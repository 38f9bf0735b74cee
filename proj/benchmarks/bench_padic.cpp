// Microbenchmarks for the hot paths: exact windowed sums, the truncated
// shuffle/group-action algebra, and the certified p-adic solver.
#include <benchmark/benchmark.h>

#include <random>

#include "pmhs/harmonic.hpp"
#include "pmhs/ihara.hpp"
#include "pmhs/pmzv.hpp"
#include "pmhs/series.hpp"

using namespace pmhs;

static void BM_padic_mul(benchmark::State& state) {
    auto a = PAdicApprox::from_rational(5, Rational(25, 12), 30);
    auto b = PAdicApprox::from_rational(5, Rational(7, 3), 30);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_padic_mul);

static void BM_harmonic_sum(benchmark::State& state) {
    const long N = state.range(0);
    Composition c({3, 1, 2});
    for (auto _ : state) benchmark::DoNotOptimize(hsum(c, N));
    state.SetComplexityN(N);
}
BENCHMARK(BM_harmonic_sum)->Arg(32)->Arg(128)->Arg(512)->Complexity();

static void BM_finite_window_value(benchmark::State& state) {
    Composition c({2, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(finite_mzv_rational(c, Int(7), 2, 1));
}
BENCHMARK(BM_finite_window_value);

static void BM_shuffle_product(benchmark::State& state) {
    const int cap = static_cast<int>(state.range(0));
    std::mt19937_64 rng(2024);
    NCSeries<Rational> f = random_grouplike(cap, rng, false);
    NCSeries<Rational> g = random_grouplike(cap, rng, false);
    for (auto _ : state) benchmark::DoNotOptimize(f.shuffle_mul(g));
}
BENCHMARK(BM_shuffle_product)->Arg(6)->Arg(8);

static void BM_group_action(benchmark::State& state) {
    const int cap = static_cast<int>(state.range(0));
    std::mt19937_64 rng(4096);
    NCSeries<Rational> f = random_grouplike(cap, rng, false);
    NCSeries<Rational> g = random_grouplike(cap, rng, false);
    for (auto _ : state) benchmark::DoNotOptimize(ihara_action(g, f));
}
BENCHMARK(BM_group_action)->Arg(6)->Arg(8);

static void BM_sym_group_action(benchmark::State& state) {
    const int cap = static_cast<int>(state.range(0));
    std::mt19937_64 rng(771);
    NCSeries<Rational> h1 = sym_series(random_grouplike(cap, rng, true));
    NCSeries<Rational> h2 = sym_series(random_grouplike(cap, rng, true));
    for (auto _ : state) benchmark::DoNotOptimize(sym_ihara_action(h2, h1));
}
BENCHMARK(BM_sym_group_action)->Arg(6)->Arg(8);

static void BM_solve_depth1(benchmark::State& state) {
    const int cap = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_series(Int(5), 1, cap, 0));
}
BENCHMARK(BM_solve_depth1)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_solve_series_depth2(benchmark::State& state) {
    const int cap2 = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_series(Int(5), 1, cap2 + 6, cap2));
}
BENCHMARK(BM_solve_series_depth2)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
