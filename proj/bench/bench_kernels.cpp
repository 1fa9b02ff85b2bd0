// Serial reference vs OpenMP kernels for the hot paths: exact type-class
// tail enumeration and the r-grid Hoeffding sweep.

#include <benchmark/benchmark.h>

#include "qht/classical_iid.hpp"
#include "qht/exponents.hpp"
#include "qht/rng.hpp"

namespace {

qht::ClassicalPair make_pair(int alphabet) {
  qht::Rng rng(12345);
  std::vector<double> p(alphabet), q(alphabet);
  double sp = 0.0, sq = 0.0;
  for (int i = 0; i < alphabet; ++i) {
    p[i] = rng.uniform() + 0.05;
    q[i] = rng.uniform() + 0.05;
    sp += p[i];
    sq += q[i];
  }
  qht::ClassicalPair cp;
  for (int i = 0; i < alphabet; ++i) {
    cp.support.emplace_back(i, 0);
    cp.p.push_back(p[i] / sp);
    cp.q.push_back(q[i] / sq);
  }
  return cp;
}

void tails_serial(benchmark::State& state) {
  const auto cp = make_pair(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qht::iid_tail_f_serial(cp, n, 0.0));
    benchmark::DoNotOptimize(qht::iid_tail_g_serial(cp, n, 0.0));
  }
}

void tails_parallel(benchmark::State& state) {
  const auto cp = make_pair(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qht::iid_tail_f(cp, n, 0.0));
    benchmark::DoNotOptimize(qht::iid_tail_g(cp, n, 0.0));
  }
}

qht::StatePair make_states() {
  qht::Rng rng(777);
  return {rng.random_density(3, 1e-3), rng.random_density(3, 1e-3)};
}

void bounds_sweep(benchmark::State& state) {
  const qht::StatePair pair = make_states();
  const double d = qht::relative_entropy(pair);
  const int points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    double acc = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(+ : acc)
    for (int i = 0; i < points; ++i) {
      acc += qht::hoeffding_bound(pair, d * (i + 1) / points);
    }
    benchmark::DoNotOptimize(acc);
  }
}

void bounds_sweep_serial(benchmark::State& state) {
  const qht::StatePair pair = make_states();
  const double d = qht::relative_entropy(pair);
  const int points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    double acc = 0.0;
    for (int i = 0; i < points; ++i) {
      acc += qht::hoeffding_bound(pair, d * (i + 1) / points);
    }
    benchmark::DoNotOptimize(acc);
  }
}

}  // namespace

BENCHMARK(tails_serial)->Args({4, 40})->Args({6, 30})->Unit(benchmark::kMillisecond);
BENCHMARK(tails_parallel)->Args({4, 40})->Args({6, 30})->Unit(benchmark::kMillisecond);
BENCHMARK(bounds_sweep_serial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(bounds_sweep)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
