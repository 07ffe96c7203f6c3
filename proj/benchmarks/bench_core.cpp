#include "bezroot/family.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace bezroot;

namespace {

QPoly random_poly(std::size_t deg, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  std::vector<Rational> c(deg + 1);
  for (auto& x : c) x = Rational(num(rng), den(rng));
  if (c.back().is_zero()) c.back() = Rational(1);
  return QPoly(std::move(c));
}

void BM_BezoutOf(benchmark::State& st) {
  const QPoly f = random_poly(static_cast<std::size_t>(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(bezout_of(f));
}
BENCHMARK(BM_BezoutOf)->DenseRange(4, 16, 4);

void BM_InertiaCongruence(benchmark::State& st) {
  const auto m = bezout_of(random_poly(static_cast<std::size_t>(st.range(0)), 2));
  for (auto _ : st) benchmark::DoNotOptimize(inertia_by_congruence(m));
}
BENCHMARK(BM_InertiaCongruence)->DenseRange(4, 16, 4);

void BM_InertiaCharpoly(benchmark::State& st) {
  const auto m = bezout_of(random_poly(static_cast<std::size_t>(st.range(0)), 2));
  for (auto _ : st) benchmark::DoNotOptimize(inertia_by_charpoly(m));
}
BENCHMARK(BM_InertiaCharpoly)->DenseRange(4, 16, 4);

void BM_SturmCount(benchmark::State& st) {
  const QPoly f = random_poly(static_cast<std::size_t>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(count_real_roots(f));
}
BENCHMARK(BM_SturmCount)->DenseRange(4, 16, 4);

void BM_IsolateRefine(benchmark::State& st) {
  const QPoly f = random_poly(static_cast<std::size_t>(st.range(0)), 4);
  for (auto _ : st) benchmark::DoNotOptimize(isolate_real_roots(f, Rational(1, 1 << 20)));
}
BENCHMARK(BM_IsolateRefine)->DenseRange(4, 12, 4);

void BM_PofT(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const FamilySpec spec = random_spec(n, n / 2, 5, 0);
  for (auto _ : st) benchmark::DoNotOptimize(p_of_t(spec));
}
BENCHMARK(BM_PofT)->DenseRange(4, 10, 2);

void BM_DiscInT(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const FamilySpec spec = random_spec(n, n / 2, 5, 0);
  for (auto _ : st) benchmark::DoNotOptimize(disc_in_t(spec));
}
BENCHMARK(BM_DiscInT)->DenseRange(4, 10, 2);

void BM_PhiCharpoly(benchmark::State& st) {
  const auto s = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(phi_charpoly_u(s, s + 3));
}
BENCHMARK(BM_PhiCharpoly)->DenseRange(3, 9, 2);

void BM_SweepCell(benchmark::State& st) {
  SweepConfig cfg;
  cfg.n_min = cfg.n_max = static_cast<std::size_t>(st.range(0));
  cfg.s_min = 1;
  cfg.trials = 2;
  for (auto _ : st) benchmark::DoNotOptimize(sweep_harness(cfg));
}
BENCHMARK(BM_SweepCell)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
