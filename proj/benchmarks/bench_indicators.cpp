#include <benchmark/benchmark.h>

#include "citekit/empirical.hpp"
#include "citekit/estimated.hpp"
#include "citekit/lognormal.hpp"
#include "citekit/montecarlo.hpp"

namespace {

using namespace citekit;

const JournalRecord kNejm = [] {
    JournalRecord j;
    j.id = "1";
    j.name = "NEW ENGL J MED";
    j.n_papers = 670;
    j.arith = ArithMoments{65.91, 107.38};
    return j;
}();

const JournalRecord kLancet = [] {
    JournalRecord j;
    j.id = "2";
    j.name = "LANCET";
    j.n_papers = 645;
    j.arith = ArithMoments{45.02, 63.35};
    return j;
}();

void BM_ArithToLog(benchmark::State& state)
{
    const ArithMoments am{65.91, 107.38};
    for (auto _ : state)
        benchmark::DoNotOptimize(arith_to_log(am));
}
BENCHMARK(BM_ArithToLog);

void BM_StdNormalCdf(benchmark::State& state)
{
    double x = -8.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(std_normal_cdf(x));
        x = x < 8.0 ? x + 1e-3 : -8.0;
    }
}
BENCHMARK(BM_StdNormalCdf);

void BM_StdNormalQuantile(benchmark::State& state)
{
    double p = 1e-6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(std_normal_quantile(p));
        p = p < 0.999999 ? p + 1e-4 : 1e-6;
    }
}
BENCHMARK(BM_StdNormalQuantile);

void BM_EstimateHIndex(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(estimate_h_index(kNejm));
}
BENCHMARK(BM_EstimateHIndex);

void BM_GroupCsi(benchmark::State& state)
{
    const LogMoments t = arith_to_log(kNejm.arith);
    const LogMoments r = arith_to_log(kLancet.arith);
    for (auto _ : state)
        benchmark::DoNotOptimize(group_csi(t, 10, r, 10));
}
BENCHMARK(BM_GroupCsi);

void BM_MinRepresentativeSize(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(min_representative_size(kNejm, kLancet, 0.9));
}
BENCHMARK(BM_MinRepresentativeSize);

void BM_SampleLognormal(benchmark::State& state)
{
    const LogMoments lm = arith_to_log(kNejm.arith);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_lognormal(lm, static_cast<int>(state.range(0)), 42));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SampleLognormal)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();

void BM_EmpiricalCsi(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const CitationVector t = sample_lognormal(arith_to_log(kNejm.arith), n, 1, true);
    const CitationVector r = sample_lognormal(arith_to_log(kLancet.arith), n, 2, true);
    for (auto _ : state)
        benchmark::DoNotOptimize(empirical_csi(t, r));
    state.SetComplexityN(n);
}
BENCHMARK(BM_EmpiricalCsi)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();

void BM_EmpiricalGroupCsi(benchmark::State& state)
{
    const CitationVector t = sample_lognormal(arith_to_log(kNejm.arith), 10'000, 1, true);
    const CitationVector r = sample_lognormal(arith_to_log(kLancet.arith), 10'000, 2, true);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            empirical_group_csi(t, 10, r, 10, static_cast<int>(state.range(0)), 7));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EmpiricalGroupCsi)->RangeMultiplier(10)->Range(1000, 100'000)->Complexity();

}  // namespace

BENCHMARK_MAIN();
