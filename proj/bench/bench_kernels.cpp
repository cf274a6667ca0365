// Serial reference kernels against their OpenMP counterparts.
// The second argument of every benchmark selects the path: 0 serial, 1 parallel.

#include <benchmark/benchmark.h>

#include <random>

#include "idforge/field.hpp"
#include "idforge/galois.hpp"
#include "idforge/instances.hpp"
#include "idforge/matrix.hpp"
#include "idforge/sampling.hpp"

using namespace idforge;

namespace {

const RationalField kQ;

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::parallel : Exec::serial; }

void BM_SeriesMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  auto f = random_series(rng, n, kQ), g = random_series(rng, n, kQ);
  for (auto _ : state) benchmark::DoNotOptimize(mul(f, g, exec_of(state)));
}
BENCHMARK(BM_SeriesMul)->ArgsProduct({{64, 256}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_SolveLinear(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  ExactMatrix<Rational> a(n, n);
  std::vector<Rational> v(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = random_scalar(rng, kQ);
    v[r] = random_scalar(rng, kQ);
  }
  for (auto _ : state) benchmark::DoNotOptimize(solve_linear(a, v, exec_of(state)));
}
BENCHMARK(BM_SolveLinear)->ArgsProduct({{24, 48}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_AxiomChecks(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_instance("s", static_cast<std::size_t>(state.range(0)), 4, 0,
                                                               exec_of(state)));
}
BENCHMARK(BM_AxiomChecks)->ArgsProduct({{16}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  using S = SElem<Rational>;
  auto e = build_embedding(point_plus(kQ), 64, kQ);
  const S b = (S::s(kQ) * S::t(kQ) * -3LL).times_dinv();
  SearchBounds bounds{static_cast<unsigned>(state.range(0)), 8, 2, 64};
  for (auto _ : state) benchmark::DoNotOptimize(classify(b, e, bounds, kQ, exec_of(state)));
}
BENCHMARK(BM_Classify)->ArgsProduct({{6}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
