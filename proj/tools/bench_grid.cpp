// Benchmarks the OpenMP integer grid kernel against the serial scalar
// reference, and the parallel matrix product against a single-thread run.
//
//   bench_grid [--benchmark_filter=...]

#include <benchmark/benchmark.h>
#ifdef _OPENMP
#include <omp.h>
#endif

#include <random>

#include "tropopt/algebra.hpp"
#include "tropopt/oracle.hpp"
#include "tropopt/problem.hpp"

namespace {

using namespace tropopt;

const Semifield sf = Semifield::max_plus();

Scalar fin(std::int64_t v) { return Scalar::exact(Rational(v)); }

/// Box-constrained Rayleigh instance of order n with a grid of roughly
/// (2 * denom + 1)^n points.
ProblemInstance bench_instance(std::size_t n) {
  std::mt19937_64 rng(n * 7919);
  ProblemInstance inst;
  inst.form = ProblemForm::P18RayleighBox;
  TropMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a.at(i, j) = fin(static_cast<std::int64_t>(rng() % 5) - 2);
    }
  }
  inst.A = a;
  inst.g = TropVector(n, fin(0));
  inst.h = TropVector(n, fin(2));
  return inst;
}

void BM_grid_kernel(benchmark::State& state) {
  ProblemInstance inst = bench_instance(static_cast<std::size_t>(state.range(0)));
  GridSpec grid = default_grid(inst);
  std::uint64_t points = 0;
  for (auto _ : state) {
    OracleReport report = grid_optimize(inst, grid);
    points = report.evaluated_count;
    benchmark::DoNotOptimize(report.best_value);
  }
  state.counters["points"] = static_cast<double>(points);
  state.counters["points/s"] =
      benchmark::Counter(static_cast<double>(points), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_grid_kernel)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_grid_serial_reference(benchmark::State& state) {
  ProblemInstance inst = bench_instance(static_cast<std::size_t>(state.range(0)));
  GridSpec grid = default_grid(inst);
  std::uint64_t points = 0;
  for (auto _ : state) {
    OracleReport report = grid_optimize_serial(inst, grid);
    points = report.evaluated_count;
    benchmark::DoNotOptimize(report.best_value);
  }
  state.counters["points"] = static_cast<double>(points);
  state.counters["points/s"] =
      benchmark::Counter(static_cast<double>(points), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_grid_serial_reference)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_matrix_multiply(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(42);
  TropMatrix a(n, n);
  TropMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a.at(i, j) = fin(static_cast<std::int64_t>(rng() % 19) - 9);
      b.at(i, j) = fin(static_cast<std::int64_t>(rng() % 19) - 9);
    }
  }
  for (auto _ : state) {
    TropMatrix c = multiply(sf, a, b);
    benchmark::DoNotOptimize(c.entries().data());
  }
}
BENCHMARK(BM_matrix_multiply)->Arg(32)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
