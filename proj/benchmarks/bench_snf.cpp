#include <benchmark/benchmark.h>

#include <random>

#include "hcg/intmatrix.hpp"

namespace {

hcg::IntMatrix random_matrix(size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-99, 99);
  hcg::IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  auto m = random_matrix(static_cast<size_t>(state.range(0)), 7u);
  for (auto _ : state) {
    auto s = hcg::smith_normal_form(m);
    benchmark::DoNotOptimize(s.d);
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(12);

void BM_HermiteNormalForm(benchmark::State& state) {
  auto m = random_matrix(static_cast<size_t>(state.range(0)), 11u);
  for (auto _ : state) {
    auto h = hcg::hermite_normal_form(m);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_HermiteNormalForm)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
