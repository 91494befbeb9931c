#include <benchmark/benchmark.h>

#include "gpade/padic.hpp"
#include "gpade/pade.hpp"
#include "gpade/realapprox.hpp"

namespace {

gpade::GParams half() { return gpade::derive_params({gpade::Rational(1), gpade::make_rational(1, 2)}); }

gpade::GParams three_blocks() {
  using gpade::make_rational;
  return gpade::derive_params({gpade::Rational(1), make_rational(1, 2), make_rational(1, 3), make_rational(1, 5)});
}

void BM_BuildQ(benchmark::State& state) {
  const auto gp = three_blocks();
  const int n = static_cast<int>(state.range(0));
  const auto shape = gpade::ApproxShape::standard({n, n, n}, n);
  for (auto _ : state) benchmark::DoNotOptimize(gpade::build_q(gp, shape, 0));
}
BENCHMARK(BM_BuildQ)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_OracleSolve(benchmark::State& state) {
  const auto gp = three_blocks();
  const int n = static_cast<int>(state.range(0));
  const auto shape = gpade::ApproxShape::standard({n, n, n}, n);
  for (auto _ : state) benchmark::DoNotOptimize(gpade::oracle_solve(gp, shape, 0));
}
BENCHMARK(BM_OracleSolve)->Arg(2)->Arg(4)->Arg(8);

void BM_OmegaDet(benchmark::State& state) {
  const auto gp = three_blocks();
  const int n = static_cast<int>(state.range(0));
  const auto family = gpade::build_family(gp, gpade::ApproxShape::standard({n, n, n}, n));
  for (auto _ : state) benchmark::DoNotOptimize(gpade::omega_det(family));
}
BENCHMARK(BM_OmegaDet)->Arg(1)->Arg(2)->Arg(4);

void BM_EvalPhiPadic(benchmark::State& state) {
  const auto gp = half();
  const auto beta = gpade::make_rational(8, 3);
  for (auto _ : state) benchmark::DoNotOptimize(gpade::eval_phi_padic(gp, 1, beta, 2, state.range(0)));
}
BENCHMARK(BM_EvalPhiPadic)->Arg(64)->Arg(256)->Arg(1024);

void BM_EvalPhiReal(benchmark::State& state) {
  const auto gp = half();
  const auto z = gpade::make_rational(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(gpade::eval_phi_real(gp, z, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EvalPhiReal)->Arg(60)->Arg(240)->Arg(960);

}  // namespace

BENCHMARK_MAIN();
