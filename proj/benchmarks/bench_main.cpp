#include <benchmark/benchmark.h>

#include "lspace/classify.hpp"
#include "lspace/corpus.hpp"
#include "lspace/surgery.hpp"

using namespace lspace;

static void BM_NTable(benchmark::State& state) {
  const LinkData link = corpus::two_bridge_ln(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(NTable(link));
}
BENCHMARK(BM_NTable)->Arg(1)->Arg(4)->Arg(8);

// (1,1) surgery on L_n: one spin^c class, complex grows with n
static void BM_HatLn(benchmark::State& state) {
  const NTable table(corpus::two_bridge_ln(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hf_hat(table, Framing{1, 1, 0}).total);
}
BENCHMARK(BM_HatLn)->Arg(1)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_HatTorusSparse(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const NTable table(corpus::torus(n));
  SurgeryOptions opt;
  opt.cross_check_limit = 0;
  for (auto _ : state) benchmark::DoNotOptimize(hf_hat(table, Framing{4 * n, 4 * n - 1, n}, opt).total);
}
BENCHMARK(BM_HatTorusSparse)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_WhiteheadRegion(benchmark::State& state) {
  const NTable table(corpus::whitehead());
  const std::int64_t r = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(region_scan(table, GridRange{-r, r}, 1).grid.size());
}
BENCHMARK(BM_WhiteheadRegion)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_Zigzag(benchmark::State& state) {
  ZigzagCode z;
  z.a1 = 0;
  z.a2 = state.range(0) - 1;
  z.b1 = 0;
  z.b2 = state.range(0);
  for (std::int64_t s = 0; s < state.range(0); ++s) {
    if (s % 3 != 1) z.S1.insert(s);
    if (s % 5 != 2) z.S2.insert(s);
  }
  for (auto _ : state) benchmark::DoNotOptimize(zigzag_kernel_support(z).size() + zigzag_cokernel_dim(z));
}
BENCHMARK(BM_Zigzag)->Arg(100)->Arg(10000);

static void BM_DenseRank(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  F2Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if ((r * 7919 + c * 104729) % 3 == 0) m.set(r, c);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_DenseRank)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
