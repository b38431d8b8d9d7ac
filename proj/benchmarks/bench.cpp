#include "fareyaf/ideals.hpp"
#include "fareyaf/k0.hpp"
#include "fareyaf/relations.hpp"
#include "fareyaf/traces.hpp"
#include "fareyaf/tree.hpp"

#include <benchmark/benchmark.h>

using namespace farey;

static void BM_RowDenominators(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(rowDenominators(state.range(0)));
    state.SetItemsProcessed(state.iterations() * ((std::int64_t{1} << state.range(0)) + 1));
}
BENCHMARK(BM_RowDenominators)->Arg(12)->Arg(18)->Arg(22);

static void BM_Row(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(row(state.range(0)));
}
BENCHMARK(BM_Row)->Arg(10)->Arg(14);

static void BM_LabelAt(benchmark::State& state) {
    BigInt k = (BigInt(1) << (state.range(0) - 1)) + 12345;
    for (auto _ : state) benchmark::DoNotOptimize(labelAt(state.range(0), k));
}
BENCHMARK(BM_LabelAt)->Arg(20)->Arg(60);

static void BM_QuotientIrrational(benchmark::State& state) {
    IdealSpec spec{CfStream::periodic({}, {BigInt(1), BigInt(2), BigInt(2), BigInt(1), BigInt(1)}), Variant::plain};
    for (auto _ : state) benchmark::DoNotOptimize(quotientLevels(spec, state.range(0)));
}
BENCHMARK(BM_QuotientIrrational)->Arg(20)->Arg(60);

static void BM_UnitDecomposition(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(k0::verifyUnitDecomposition(state.range(0)));
}
BENCHMARK(BM_UnitDecomposition)->Arg(8)->Arg(12);

static void BM_CheckTrace(benchmark::State& state) {
    auto t = traces::TraceCandidate::geometric(Rational(1, 4));
    for (auto _ : state) benchmark::DoNotOptimize(traces::checkTrace(t, state.range(0)));
}
BENCHMARK(BM_CheckTrace)->Arg(10)->Arg(14);

static void BM_GeneratorSet(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(paths::GeneratorSet(state.range(0), Rational(1)));
}
BENCHMARK(BM_GeneratorSet)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_RelationSuite(benchmark::State& state) {
    paths::GeneratorSet G(state.range(0), Rational(1, 4));
    for (auto _ : state) benchmark::DoNotOptimize(paths::verifyRelationSuite(G));
}
BENCHMARK(BM_RelationSuite)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_BraidingSuite(benchmark::State& state) {
    paths::GeneratorSet G(state.range(0), Rational(2));
    for (auto _ : state) benchmark::DoNotOptimize(paths::verifyBraidingSuite(G));
}
BENCHMARK(BM_BraidingSuite)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
