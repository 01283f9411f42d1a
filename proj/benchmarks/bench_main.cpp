#include <benchmark/benchmark.h>

#include <cmath>

#include "gnum/analytic.hpp"
#include "gnum/grid_measure.hpp"
#include "gnum/prime_system.hpp"
#include "gnum/semigroup.hpp"

namespace {

gnum::LogGridMeasure dense(std::size_t n) {
  std::vector<double> m(n);
  m[0] = 1.0;
  for (std::size_t j = 1; j < n; ++j) m[j] = 1.0 / static_cast<double>(j * j);
  return gnum::LogGridMeasure(0.01, std::move(m));
}

void BM_Conv(benchmark::State& state) {
  auto a = dense(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gnum::conv(a, a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Conv)->RangeMultiplier(4)->Range(256, 4096)->Complexity(benchmark::oNSquared);

void BM_ExpConvDense(benchmark::State& state) {
  auto b = gnum::to_grid(gnum::builtin("ex42"), 0.01, 0.01 * state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gnum::exp_conv(b));
}
BENCHMARK(BM_ExpConvDense)->RangeMultiplier(4)->Range(256, 4096);

void BM_ExpConvAtomic(benchmark::State& state) {
  const double h = std::log(2.0) / state.range(0);
  auto b = gnum::to_grid(gnum::builtin("ex43"), h, 45.0);
  for (auto _ : state) benchmark::DoNotOptimize(gnum::exp_conv(b));
}
BENCHMARK(BM_ExpConvAtomic)->Arg(128)->Arg(512);

void BM_InvConv(benchmark::State& state) {
  auto a = dense(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gnum::inv_conv(a));
}
BENCHMARK(BM_InvConv)->RangeMultiplier(4)->Range(256, 4096);

void BM_Enumerate(benchmark::State& state) {
  auto sys = gnum::builtin("rational");
  const double X = static_cast<double>(state.range(0));
  for (auto _ : state) {
    std::uint64_t n = 0;
    gnum::enumerate(sys, X, [&](const gnum::GeneralizedInteger&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Enumerate)->Arg(10000)->Arg(100000);

void BM_ZetaQuadrature(benchmark::State& state) {
  auto sys = gnum::builtin("ex42");
  const gnum::cplx s(1.1, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gnum::zeta(sys, s));
}
BENCHMARK(BM_ZetaQuadrature)->Arg(1)->Arg(10);

void BM_ZetaDiscrete(benchmark::State& state) {
  auto sys = gnum::builtin("rational");
  gnum::ZetaOptions opt;
  opt.cutoff = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gnum::zeta(sys, {2.0, 1.0}, opt));
}
BENCHMARK(BM_ZetaDiscrete)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
