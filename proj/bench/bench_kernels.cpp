// Serial reference vs OpenMP execution of the trial-parallel kernels.

#include <benchmark/benchmark.h>

#include "spherical/axioms.hpp"
#include "spherical/cardinal.hpp"
#include "spherical/rationalize.hpp"

using namespace spherical;

namespace {

template <class T>
SphericalParams<T> bench_params() {
  return canonicalize(SphericalParams<T>{T(-1), Vec<T>{T(2), T(-1), T(1), T(3)}});
}

Execution execution_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

template <class T>
void BM_CheckOioi(benchmark::State& state) {
  const auto oracle = spherical_oracle(bench_params<T>());
  CheckOptions options;
  options.trials = 1000;
  options.execution = execution_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(check_oioi(oracle, options).violations);
}

template <class T>
void BM_CheckSoioi(benchmark::State& state) {
  const auto oracle = spherical_oracle(bench_params<T>());
  CheckOptions options;
  options.trials = 1000;
  options.execution = execution_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(check_soioi(oracle, options).violations);
}

void BM_RationalizeBatch(benchmark::State& state) {
  std::vector<ObservationSet<Rational>> datasets;
  for (std::uint64_t s = 0; s < 32; ++s) datasets.push_back(generate_dataset(bench_params<Rational>(), 20, s, 1.0));
  for (auto _ : state) {
    auto verdicts = rationalize_all<Rational>(datasets, Restriction::None, execution_of(state));
    benchmark::DoNotOptimize(verdicts.size());
  }
}

void BM_StatusQuoIndependence(benchmark::State& state) {
  Matrix<double> a{{1, 0.5, 0, 0}, {0.5, 2, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 3}};
  const auto u = coefficient_oracle(a, Vec<double>{1, 2, 3, 4});
  CheckOptions options;
  options.trials = 5000;
  options.execution = execution_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(check_status_quo_independence(u, options, 1e-9).violations);
}

}  // namespace

BENCHMARK(BM_CheckOioi<double>)->Arg(0)->Arg(1)->ArgName("parallel");
BENCHMARK(BM_CheckOioi<Rational>)->Arg(0)->Arg(1)->ArgName("parallel");
BENCHMARK(BM_CheckSoioi<Rational>)->Arg(0)->Arg(1)->ArgName("parallel");
BENCHMARK(BM_RationalizeBatch)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StatusQuoIndependence)->Arg(0)->Arg(1)->ArgName("parallel");

BENCHMARK_MAIN();
