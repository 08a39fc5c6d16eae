// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "hopflab/cocycle.hpp"
#include "hopflab/hochschild.hpp"
#include "hopflab/workspace.hpp"

using namespace hopflab;

namespace {

const Workspace& ws() {
  static const Workspace w = load_workspace(resolve_instance("a2"), 1);
  return w;
}

// Bosonized checks run on a rational point; symbolic entries would dominate.
Functional numeric_sigma() { return ws().sigma.substitute(ws().binding({Rational(2), Rational(-3), Rational(5, 2)})); }

void BM_convolve(benchmark::State& state, Exec exec) {
  const auto& w = ws();
  for (auto _ : state)
    benchmark::DoNotOptimize(exec == Exec::Serial ? convolve_serial(w.sigma, w.sigma, w.t)
                                                  : convolve(w.sigma, w.sigma, w.t, exec));
}

void BM_hopf_cocycle(benchmark::State& state, Exec exec) {
  const auto& w = ws();
  for (auto _ : state)
    benchmark::DoNotOptimize(exec == Exec::Serial ? is_hopf_cocycle_serial(w.sigma, w.t)
                                                  : is_hopf_cocycle(w.sigma, w.t, exec));
}

void BM_bosonized_cocycle(benchmark::State& state, Exec exec) {
  const auto& w = ws();
  const SmashAlgebra a(*w.b, *w.group);
  const auto sigma = numeric_sigma();
  for (auto _ : state)
    benchmark::DoNotOptimize(exec == Exec::Serial ? check_bosonized_cocycle_serial(a, *w.b, sigma)
                                                  : check_bosonized_cocycle(a, *w.b, sigma));
}

void BM_associativity(benchmark::State& state, Exec exec) {
  const auto& w = ws();
  for (auto _ : state)
    benchmark::DoNotOptimize(exec == Exec::Serial ? check_associativity_serial(*w.b) : check_associativity(*w.b));
}

void BM_commutation(benchmark::State& state, Exec exec) {
  const auto& w = ws();
  const auto eta = xi(*w.b, 0, 0) + xi121(*w.b) - xi212(*w.b);
  for (auto _ : state)
    benchmark::DoNotOptimize(exec == Exec::Serial ? check_commutation_serial(eta, w.t)
                                                  : check_commutation(eta, w.t, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_convolve, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_convolve, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_hopf_cocycle, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_hopf_cocycle, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_bosonized_cocycle, serial, Exec::Serial)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_CAPTURE(BM_bosonized_cocycle, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_CAPTURE(BM_associativity, serial, Exec::Serial)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_associativity, parallel, Exec::Parallel)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_commutation, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_commutation, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
