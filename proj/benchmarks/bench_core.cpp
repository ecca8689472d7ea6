#include <benchmark/benchmark.h>

#include "ptchain/analysis.hpp"
#include "ptchain/simulate.hpp"

using namespace ptchain;

static void BM_EnumerateTableaux(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_tableaux(state.range(0)));
}
BENCHMARK(BM_EnumerateTableaux)->Arg(6)->Arg(7)->Arg(8);

static void BM_PartitionFunction(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(partition_function(state.range(0)));
}
BENCHMARK(BM_PartitionFunction)->Arg(5)->Arg(6);

static void BM_BuildTableauChain(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_system(ChainKind::Pt, state.range(0)));
}
BENCHMARK(BM_BuildTableauChain)->Arg(3)->Arg(4)->Arg(5);

static void BM_BalanceCheck(benchmark::State& state) {
    auto sys = build_system(ChainKind::Pt, state.range(0));
    auto weights = state_weight_monomial(sys);
    for (auto _ : state) benchmark::DoNotOptimize(verify_balance(sys, weights));
}
BENCHMARK(BM_BalanceCheck)->Arg(4)->Arg(5);

static void BM_StationaryExact(benchmark::State& state) {
    auto sys = build_system(ChainKind::Pasep, state.range(0));
    PasepParams p{make_rational(1, 2), make_rational(2, 3), make_rational(3, 4),
                  static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(stationary_exact(sys, p));
}
BENCHMARK(BM_StationaryExact)->Arg(4)->Arg(5)->Arg(6);

static void BM_Simulate(benchmark::State& state) {
    auto sys = build_system(ChainKind::Pt, 3);
    PasepParams p{make_rational(1), make_rational(1), make_rational(1), 3};
    for (auto _ : state) benchmark::DoNotOptimize(simulate(sys, p, 1, state.range(0)));
}
BENCHMARK(BM_Simulate)->Arg(100000)->Arg(1000000);

static void BM_BijectionTable(benchmark::State& state) {
    auto tableaux = enumerate_tableaux(state.range(0));
    for (auto _ : state)
        for (const auto& t : tableaux) benchmark::DoNotOptimize(tableau_to_permutation(t));
}
BENCHMARK(BM_BijectionTable)->Arg(6)->Arg(7);

BENCHMARK_MAIN();
