#include "fpnorm/circulant.hpp"
#include "fpnorm/folner.hpp"
#include "fpnorm/laurent.hpp"
#include "fpnorm/pnorm.hpp"
#include "fpnorm/quotient.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace fpnorm;

namespace {

ComplexMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  ComplexMatrix A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = {unit(rng), unit(rng)};
  return A;
}

void BM_PnormLower(benchmark::State& state) {
  const ComplexMatrix A = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(pnorm_lower(A, PExponent(1.5)));
}
BENCHMARK(BM_PnormLower)->Arg(2)->Arg(8)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_CirculantGamma(benchmark::State& state) {
  const CirculantElement a{{1.0, cplx(0.0, 1.0)}};
  for (auto _ : state) benchmark::DoNotOptimize(circulant_norm(a, PExponent(1.2)));
}
BENCHMARK(BM_CirculantGamma)->Unit(benchmark::kMicrosecond);

void BM_ToeplitzApply(benchmark::State& state) {
  const TruncationWindow w(state.range(0));
  const ToeplitzSection T(folner_average(16, 2), w);
  ComplexVector x(w.size(), 1.0), y(w.size());
  for (auto _ : state) {
    T.apply(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.size()));
}
BENCHMARK(BM_ToeplitzApply)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 16);

void BM_FpzNormFolner(benchmark::State& state) {
  SectionOptions opt;
  opt.power.random_starts = 0;
  const LaurentElement T = folner_average(8, 2);
  for (auto _ : state) benchmark::DoNotOptimize(fpz_norm(T, PExponent(1.5), TruncationWindow(state.range(0)), opt));
}
BENCHMARK(BM_FpzNormFolner)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_QuotientGap(benchmark::State& state) {
  const GroupAlgebraElement f(FiniteGroup::cyclic(2), {1.0, cplx(0.0, 1.0)});
  const std::int64_t k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(quotient_gap(f, PExponent(1.5), k, TruncationWindow(1024 * k)));
}
BENCHMARK(BM_QuotientGap)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ThetaL1Direct(benchmark::State& state) {
  const std::int64_t k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(ThetaOperator(k, 3, 1).l1_norm_on(TruncationWindow(5 * k)));
}
BENCHMARK(BM_ThetaL1Direct)->Arg(8)->Arg(32);

}  // namespace
BENCHMARK_MAIN();
