#include <benchmark/benchmark.h>

#include "quatdirac/blattner.hpp"
#include "quatdirac/dirac.hpp"
#include "quatdirac/partitions.hpp"

using namespace quatdirac;

namespace {

ChainSet worked_example() { return ChainSet({Chain::s(15, 13), Chain::s(14, 6), Chain::s(2), Chain::u(4)}); }

void BM_LrCoeffCold(benchmark::State& state) {
  const Partition lam{4, 3, 2, 1}, mu{3, 2, 1}, nu{2, 1, 1};
  for (auto _ : state) {
    table_cache::clear();
    benchmark::DoNotOptimize(lr_coeff(lam, mu, nu));
  }
}
BENCHMARK(BM_LrCoeffCold);

void BM_GlToSpCold(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    table_cache::clear();
    benchmark::DoNotOptimize(gl_to_sp(Partition{3, 2, 1}, s));
  }
}
BENCHMARK(BM_GlToSpCold)->Arg(2)->Arg(3)->Arg(4);

void BM_SlktCandidates(benchmark::State& state) {
  const InfChar L = infchar(worked_example());
  for (auto _ : state) benchmark::DoNotOptimize(slkt_candidates(L));
}
BENCHMARK(BM_SlktCandidates);

void BM_MultiplicityExample35(benchmark::State& state) {
  const RepParams p = rep_of_chains(worked_example());
  const Weight tau{14, 13, 10, 9, 9, 9, 8, 4, 3, 1, 0, 0};
  const bool cold = state.range(0) != 0;
  for (auto _ : state) {
    if (cold) table_cache::clear();
    benchmark::DoNotOptimize(ktype_multiplicity(p, tau));
  }
}
BENCHMARK(BM_MultiplicityExample35)->Arg(0)->Arg(1);

void BM_SlktExample35(benchmark::State& state) {
  const DiracSeriesRep rep(worked_example());
  for (auto _ : state) benchmark::DoNotOptimize(slkt(rep));
}
BENCHMARK(BM_SlktExample35)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_uniqueness_sweep(n, 11));
}
BENCHMARK(BM_Sweep)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
