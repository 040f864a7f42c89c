#include "cfock/crystal.hpp"
#include "cfock/fock.hpp"

#include <benchmark/benchmark.h>

using namespace cfock;

static void BM_QuantumBinomial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(quantum_binomial(12, 6, 2));
}
BENCHMARK(BM_QuantumBinomial);

static void BM_OperatorWord(benchmark::State& state) {
    const FockEngine engine;
    for (auto _ : state) {
        Combination v(Diagram(2, 0));
        for (int round = 0; round < 4; ++round)
            for (int i = 0; i <= 2; ++i) v = engine.act_f(i, v);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_OperatorWord);

static void BM_VerifyRelations(benchmark::State& state) {
    for (auto _ : state) {
        Report r = verify_relations(2, 0, static_cast<int>(state.range(0)), Convention::Upper);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_VerifyRelations)->Arg(3)->Arg(4);

static void BM_BfsComponent(benchmark::State& state) {
    for (auto _ : state) {
        CrystalGraph g = bfs_component(2, 0, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_BfsComponent)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
