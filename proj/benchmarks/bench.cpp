#include <benchmark/benchmark.h>

#include "g2/g2maps.hpp"
#include "g2/torsion.hpp"
#include "g2/verify.hpp"

namespace {

using g2::Rational;

template <class S>
g2::Endo7<S> sample_endo(uint64_t seed) {
  g2::Sampler rng(seed);
  return rng.endo<S>();
}

template <class S>
void BM_WedgeHodge(benchmark::State& state) {
  g2::Sampler rng(1);
  auto a = rng.form<S>(3), b = rng.form<S>(2);
  for (auto _ : state) {
    auto w = g2::hodge(g2::wedge(a, b));
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_WedgeHodge<Rational>);
BENCHMARK(BM_WedgeHodge<double>);

template <class S>
void BM_Components(benchmark::State& state) {
  auto a = sample_endo<S>(2);
  for (auto _ : state) {
    auto c = g2::components(a);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_Components<Rational>);
BENCHMARK(BM_Components<double>);

template <class S>
void BM_OracleProject(benchmark::State& state) {
  auto a = sample_endo<S>(3);
  for (auto _ : state)
    for (int k = 0; k < 4; ++k) {
      auto p = g2::oracle_project(a, k);
      benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_OracleProject<Rational>);
BENCHMARK(BM_OracleProject<double>);

template <class S>
void BM_Invariants(benchmark::State& state) {
  auto a = sample_endo<S>(4);
  for (auto _ : state) {
    auto v = g2::invariants(a);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_Invariants<Rational>);
BENCHMARK(BM_Invariants<double>);

template <class S>
void BM_DPhi(benchmark::State& state) {
  auto t = sample_endo<S>(5);
  for (auto _ : state) {
    auto d = g2::d_phi(t);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_DPhi<Rational>);
BENCHMARK(BM_DPhi<double>);

template <class S>
void BM_Recover(benchmark::State& state) {
  auto t = sample_endo<S>(6);
  auto dp = g2::d_phi(t);
  auto dsp = g2::d_star_phi(t);
  for (auto _ : state) {
    auto r = g2::recover_torsion(dp, dsp);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Recover<Rational>);
BENCHMARK(BM_Recover<double>);

template <class S>
void BM_MapJ(benchmark::State& state) {
  g2::Sampler rng(7);
  auto g = rng.form<S>(3);
  for (auto _ : state) {
    auto j = g2::map_j<S>(g);
    benchmark::DoNotOptimize(j);
  }
}
BENCHMARK(BM_MapJ<Rational>);
BENCHMARK(BM_MapJ<double>);

template <class S>
void BM_CompareFormulas(benchmark::State& state) {
  auto t = sample_endo<S>(8);
  for (auto _ : state) {
    auto reports = g2::compare_formulas(t, 42);
    benchmark::DoNotOptimize(reports);
  }
}
BENCHMARK(BM_CompareFormulas<Rational>);
BENCHMARK(BM_CompareFormulas<double>);

}  // namespace

BENCHMARK_MAIN();
