#include <benchmark/benchmark.h>

#include "flagmajor/canonical.hpp"
#include "flagmajor/invariant.hpp"
#include "flagmajor/stats.hpp"

using namespace flagmajor;

static void DecomposeGroup(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto elements = enumerate_group(n, 2);
    for (auto _ : state) {
        long long sum = 0;
        for (const auto& g : elements) sum += flag_major(g);
        benchmark::DoNotOptimize(sum);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(elements.size()));
}
BENCHMARK(DecomposeGroup)->Arg(3)->Arg(4)->Arg(5);

static void LengthTableBfs(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        LengthTable table(n, 2);
        benchmark::DoNotOptimize(table.distances().size());
    }
}
BENCHMARK(LengthTableBfs)->Arg(3)->Arg(4);

static void SeriesMul(benchmark::State& state) {
    const long long bound = state.range(0);
    const TruncatedSeries tia = hilbert_tia(2, 3, 2, bound);
    for (auto _ : state) {
        auto prod = series_mul(tia, tia);
        benchmark::DoNotOptimize(prod.poly.terms().size());
    }
}
BENCHMARK(SeriesMul)->Arg(8)->Arg(12);

static void BasisEnumeration(benchmark::State& state) {
    const long long bound = state.range(0);
    for (auto _ : state) {
        auto basis = enumerate_basis(2, 3, 2, bound);
        benchmark::DoNotOptimize(basis.size());
    }
}
BENCHMARK(BasisEnumeration)->Arg(6)->Arg(10);

static void TupleSum(benchmark::State& state) {
    for (auto _ : state) {
        auto sum = rhs_theorem41(2, 2, 3);
        benchmark::DoNotOptimize(sum.terms().size());
    }
}
BENCHMARK(TupleSum);

BENCHMARK_MAIN();
