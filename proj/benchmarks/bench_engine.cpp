#include <benchmark/benchmark.h>

#include <random>

#include "bqc/analysis.hpp"
#include "bqc/coupler.hpp"
#include "bqc/matrix_engine.hpp"

namespace {

bqc::Matrix random_hermitian(Eigen::Index n) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal;
  bqc::Matrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = {normal(rng), normal(rng)};
  }
  return 0.5 * (a + a.adjoint());
}

void BM_ExpmHermitian(benchmark::State& state) {
  const bqc::Matrix h = random_hermitian(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bqc::expm_hermitian(h, 0.7));
}
BENCHMARK(BM_ExpmHermitian)->RangeMultiplier(2)->Range(8, 256);

void BM_ExpmGeneral(benchmark::State& state) {
  const bqc::Matrix a = bqc::Complex(0.0, -0.7) * random_hermitian(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bqc::expm_general(a));
}
BENCHMARK(BM_ExpmGeneral)->RangeMultiplier(2)->Range(8, 256);

void BM_VerifyFactorization(benchmark::State& state) {
  const auto p = bqc::CouplerParams::equal_couplings(static_cast<int>(state.range(0)), 0.8, 0.7, 3);
  for (auto _ : state) benchmark::DoNotOptimize(bqc::verify_factorization(p, p.layout(), 1.1, 1e-8));
}
BENCHMARK(BM_VerifyFactorization)->DenseRange(1, 3);

void BM_TruthTableThreeQubit(benchmark::State& state) {
  const auto p = bqc::CouplerParams::equal_couplings(2, 1.0, 0.7071067811865476, 3);
  const double t = bqc::gate_time(p, 1).t;
  for (auto _ : state) benchmark::DoNotOptimize(bqc::truth_table(p, p.layout(), t));
}
BENCHMARK(BM_TruthTableThreeQubit);

}  // namespace

BENCHMARK_MAIN();
