#include <benchmark/benchmark.h>

#include <random>

#include "hochdef/deformation.hpp"
#include "hochdef/eulerian.hpp"
#include "hochdef/hochschild.hpp"
#include "hochdef/linalg.hpp"
#include "hochdef/selftest.hpp"

namespace {

using namespace hochdef;

void BM_DifferentialMatrix(benchmark::State& state) {
  const AlgebraPtr a = builtin_algebra("beilinson_p2");
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(differential_matrix(*a, n));
}
BENCHMARK(BM_DifferentialMatrix)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_DifferentialRank(benchmark::State& state) {
  const AlgebraPtr a = builtin_algebra("beilinson_p2");
  const SparseMatrix m = differential_matrix(*a, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(linalg::rank(m));
  state.counters["nonzeros"] = static_cast<double>(m.nonzeros());
}
BENCHMARK(BM_DifferentialRank)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_HH2(benchmark::State& state) {
  const AlgebraPtr a = builtin_algebra("beilinson_p2");
  const ComplexKind kind = state.range(0) ? ComplexKind::Reduced : ComplexKind::Full;
  for (auto _ : state) benchmark::DoNotOptimize(hochschild_cohomology(a, 2, {}, kind));
}
BENCHMARK(BM_HH2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SolveIdempotents(benchmark::State& state) {
  const AlgebraPtr a = builtin_algebra("beilinson_p2");
  std::mt19937_64 rng(5);
  const DeformedAlgebra D(differential(random_cochain(a, 1, rng, 60)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_idempotents(D));
}
BENCHMARK(BM_SolveIdempotents)->Unit(benchmark::kMillisecond);

void BM_EulerianIdempotents(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eulerian_idempotents(n));
}
BENCHMARK(BM_EulerianIdempotents)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
