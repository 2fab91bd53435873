#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "mcbdqm/dq_weights.hpp"
#include "mcbdqm/sine_gordon.hpp"
#include "mcbdqm/ssp_rk54.hpp"
#include "mcbdqm/tridiagonal.hpp"

namespace {

using namespace mcbdqm;

void BM_WeightsBuild(benchmark::State& state) {
  const UniformGrid grid(-1.0, 1.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(WeightMatrices::build(grid));
  }
}
BENCHMARK(BM_WeightsBuild)->Arg(51)->Arg(201)->Arg(801)->Unit(benchmark::kMillisecond);

void BM_ThomasSolve(benchmark::State& state) {
  const UniformGrid grid(0.0, 1.0, static_cast<std::size_t>(state.range(0)));
  const TriDiagMatrix b = basis_matrix(grid);
  const ThomasFactorization factor(b);
  std::vector<double> rhs(grid.size(), 1.0), x(grid.size());
  for (auto _ : state) {
    factor.solve(rhs, x);
    benchmark::DoNotOptimize(x.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ThomasSolve)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);

void BM_Rhs(benchmark::State& state) {
  const ProblemSpec spec = make_example(2, 0.5);
  const UniformGrid grid(spec.a, spec.b, static_cast<std::size_t>(state.range(0)));
  const auto weights = WeightMatrices::build(grid);
  const SineGordonSystem system(weights, spec);
  const std::vector<double> y = system.initial_state();
  std::vector<double> dydt(y.size());
  for (auto _ : state) {
    system.rhs(0.5, y, dydt);
    benchmark::DoNotOptimize(dydt.data());
  }
}
BENCHMARK(BM_Rhs)->Arg(51)->Arg(401)->Arg(2001);

void BM_SspStep(benchmark::State& state) {
  const ProblemSpec spec = make_example(3, 0.5);
  const UniformGrid grid(spec.a, spec.b, static_cast<std::size_t>(state.range(0)));
  const auto weights = WeightMatrices::build(grid);
  const SineGordonSystem system(weights, spec);
  const OdeSystem ode = system.ode();
  std::vector<double> y = system.initial_state();
  SspRk54Stepper stepper;
  double t = 0.0;
  for (auto _ : state) {
    stepper.step(ode, t, y, 1e-3);
    t += 1e-3;
    benchmark::DoNotOptimize(y.data());
  }
}
BENCHMARK(BM_SspStep)->Arg(201)->Arg(2001)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
