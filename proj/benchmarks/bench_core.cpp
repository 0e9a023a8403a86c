#include <benchmark/benchmark.h>

#include "spinpair/spinpair.hpp"

using namespace spinpair;

namespace {

const std::vector<BlochState>& states(FamilyTag f) {
  static std::array<std::vector<BlochState>, 4> cache;
  auto& s = cache[static_cast<std::size_t>(f)];
  if (s.empty()) s = sample_domain(f, 3, 256);
  return s;
}

void BM_ClosedForm(benchmark::State& st) {
  const auto f = static_cast<FamilyTag>(st.range(0));
  const auto& s = states(f);
  std::size_t i = 0;
  for (auto _ : st) benchmark::DoNotOptimize(closed_form(s[i++ % s.size()]));
  st.SetLabel(std::string(to_string(f)));
}

void BM_WoottersOracle(benchmark::State& st) {
  const auto f = static_cast<FamilyTag>(st.range(0));
  std::vector<DensityMatrix> m;
  for (const auto& b : states(f)) m.push_back(to_matrix(b));
  std::size_t i = 0;
  for (auto _ : st) benchmark::DoNotOptimize(wootters_oracle(m[i++ % m.size()]));
  st.SetLabel(std::string(to_string(f)));
}

void BM_Sampler(benchmark::State& st) {
  DomainSampler sampler(static_cast<FamilyTag>(st.range(0)), 9);
  for (auto _ : st) benchmark::DoNotOptimize(sampler.next());
}

void BM_PptMinEig(benchmark::State& st) {
  const auto& s = states(FamilyTag::P23);
  std::vector<DensityMatrix> m;
  for (const auto& b : s) m.push_back(to_matrix(b));
  std::size_t i = 0;
  for (auto _ : st) benchmark::DoNotOptimize(ppt_min_eig(m[i++ % m.size()]));
}

void BM_ScanMixedSlice(benchmark::State& st) {
  ScanConfig cfg;
  cfg.fixed = {FamilyTag::P23, 0.15, 0, 0, 0, 0, 0.7, 0.16, 0.1, 0.04};
  cfg.axis1 = "c1";
  cfg.axis2 = "c2";
  const int n = static_cast<int>(st.range(0));
  cfg.range1 = cfg.range2 = {-1, 1, n};
  for (auto _ : st) benchmark::DoNotOptimize(scan_grid(cfg, 1));
  st.SetItemsProcessed(st.iterations() * n * n);
}

void BM_Twirl(benchmark::State& st) {
  const ManyBodyState rho = random_state(static_cast<int>(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(twirl_symmetrize(rho));
}

}  // namespace

BENCHMARK(BM_ClosedForm)->DenseRange(0, 3);
BENCHMARK(BM_WoottersOracle)->DenseRange(0, 3);
BENCHMARK(BM_Sampler)->DenseRange(0, 3);
BENCHMARK(BM_PptMinEig);
BENCHMARK(BM_ScanMixedSlice)->Arg(51)->Arg(201)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Twirl)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
