#include <benchmark/benchmark.h>

#include "rowmotion/birational.hpp"
#include "rowmotion/catalog.hpp"
#include "rowmotion/combinatorial.hpp"
#include "rowmotion/polynomial.hpp"
#include "rowmotion/verify.hpp"

using namespace rowmotion;

namespace {

MultiPoly dense(int vars, int degree, long shift) {
  MultiPoly s(shift);
  for (int i = 0; i < vars; ++i) s += MultiPoly::variable(i);
  MultiPoly out(1L);
  for (int d = 0; d < degree; ++d) out *= s;
  return out;
}

void BM_poly_mul(benchmark::State& state) {
  const auto a = dense(4, static_cast<int>(state.range(0)), 1), b = dense(4, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_poly_mul)->Arg(2)->Arg(4)->Arg(6);

void BM_poly_gcd(benchmark::State& state) {
  const auto g = dense(4, static_cast<int>(state.range(0)), 3);
  const auto a = g * dense(3, 2, 1), b = g * dense(4, 2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_poly_gcd)->Arg(1)->Arg(2)->Arg(3);

void BM_combinatorial_orbits(benchmark::State& state) {
  const auto mp = build_minuscule({Family::E, 7, 7});
  for (auto _ : state) benchmark::DoNotOptimize(orbit_stats(mp));
}
BENCHMARK(BM_combinatorial_orbits);

// full symbolic period on E6, from the Z-labels
void BM_e6_exact_period(benchmark::State& state) {
  const auto mp = build_minuscule({Family::E, 6, 6});
  for (auto _ : state) {
    auto F = symbolic_labeling_z(mp.poset);
    for (int k = 0; k < mp.coxeter_number; ++k) F = browmotion(mp.poset, F);
    benchmark::DoNotOptimize(F);
  }
}
BENCHMARK(BM_e6_exact_period)->Unit(benchmark::kMillisecond);

void BM_e7_sampled_verify(benchmark::State& state) {
  const auto mp = build_minuscule({Family::E, 7, 7});
  VerifyOptions opt;
  opt.mode = Mode::probabilistic;
  opt.seed = 1;
  opt.trials = 20;
  for (auto _ : state) benchmark::DoNotOptimize(verify(mp, all_theorems(), opt));
}
BENCHMARK(BM_e7_sampled_verify)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
