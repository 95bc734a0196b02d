#include <benchmark/benchmark.h>

#include "shrq/shrq.hpp"

namespace {

using namespace shrq;

const SystemParams kParams{8, FadingSpec{31.6228}, FadingSpec{3.16228}};

void BM_RegGammaLower(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reg_gamma_lower(8, x));
    x = x < 20.0 ? x + 0.1 : 0.1;
  }
}
BENCHMARK(BM_RegGammaLower);

void BM_BuildCdfTables(benchmark::State& state) {
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        build_cdf_tables(kParams, Protocol::Inr, samples, 1));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(samples) * kParams.max_tx);
}
BENCHMARK(BM_BuildCdfTables)->Arg(10000)->Arg(100000);

void BM_SecrecyOutage(benchmark::State& state) {
  const AnalyticRtdProvider provider(kParams);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        secrecy_outage(provider, WynerRates{0.38, 0.2}));
}
BENCHMARK(BM_SecrecyOutage);

void BM_Optimize(benchmark::State& state) {
  const AnalyticRtdProvider provider(kParams);
  const SearchConfig config{3.0, 100, 1e-4, 0, 0};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        optimize(provider, OutageConstraints{1e-2, std::nullopt}, config));
}
BENCHMARK(BM_Optimize);

void BM_RunCampaign(benchmark::State& state) {
  const WynerRates rates{0.35, 0.2};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        run_campaign(rates, kParams, Protocol::Inr, 20000, 7));
  state.SetItemsProcessed(state.iterations() * 20000);
}
BENCHMARK(BM_RunCampaign);

}  // namespace

BENCHMARK_MAIN();
