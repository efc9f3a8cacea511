#include <benchmark/benchmark.h>

#include "mcd/angulation.hpp"
#include "mcd/ptolemy.hpp"
#include "mcd/quiver.hpp"

using namespace mcd;

static void BM_PairTable(benchmark::State &state) {
    auto p = ModelParams::make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(PairTable(p).size());
}
BENCHMARK(BM_PairTable)->Args({4, 3})->Args({6, 3})->Args({8, 5});

static void BM_IsPtolemy(benchmark::State &state) {
    PtolemyChecker checker(ModelParams::make(static_cast<int>(state.range(0)), 3));
    SubsetSampler sampler(checker.size(), 1);
    std::vector<ArcSet> sets;
    for (int i = 0; i < 1024; ++i) sets.push_back(sampler.next());
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(checker.is_ptolemy(sets[i++ % sets.size()]));
}
BENCHMARK(BM_IsPtolemy)->Arg(4)->Arg(6);

static void BM_Complete(benchmark::State &state) {
    PtolemyChecker checker(ModelParams::make(static_cast<int>(state.range(0)), 3));
    ArcSet gens(checker.size());
    gens.insert(0);
    gens.insert(checker.size() / 2);
    for (auto _ : state) benchmark::DoNotOptimize(checker.complete(gens).count());
}
BENCHMARK(BM_Complete)->Arg(4)->Arg(6);

static void BM_PerpRoundTrip(benchmark::State &state) {
    PtolemyChecker checker(ModelParams::make(5, 3));
    SubsetSampler sampler(checker.size(), 3);
    ArcSet u = sampler.next();
    for (auto _ : state) {
        benchmark::DoNotOptimize(left_perp(checker.table(), right_perp(checker.table(), u)).count());
    }
}
BENCHMARK(BM_PerpRoundTrip);

static void BM_ExhaustivePtolemy41(benchmark::State &state) {
    PtolemyChecker checker(ModelParams::make(4, 1));
    const unsigned threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_ptolemy(checker, Exhaustive{20, threads}).count);
}
BENCHMARK(BM_ExhaustivePtolemy41)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Angulations(benchmark::State &state) {
    PairTable table(ModelParams::make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_angulations(table).count);
}
BENCHMARK(BM_Angulations)->Args({4, 3})->Args({5, 3})->Unit(benchmark::kMillisecond);

static void BM_VerifyIso(benchmark::State &state) {
    auto p = ModelParams::make(5, 3);
    for (auto _ : state) benchmark::DoNotOptimize(verify_translation_iso(p).isomorphic);
}
BENCHMARK(BM_VerifyIso);
BENCHMARK_MAIN();
