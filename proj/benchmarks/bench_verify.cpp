#include <benchmark/benchmark.h>

#include "hcg/coxeter.hpp"
#include "hcg/grading.hpp"
#include "hcg/relations.hpp"

namespace {

hcg::CoxeterSystem a3() {
  return hcg::new_coxeter_system({"s", "t", "u"},
                                 {{1, 3, 2}, {3, 1, 3}, {2, 3, 1}});
}

void BM_BuildCatalog(benchmark::State& state) {
  auto sys = a3();
  auto real = hcg::root_realization(sys);
  for (auto _ : state) {
    auto catalog = hcg::build_catalog(sys, real);
    benchmark::DoNotOptimize(catalog);
  }
}
BENCHMARK(BM_BuildCatalog);

void BM_VerifyAll(benchmark::State& state) {
  auto sys = a3();
  auto real = hcg::root_realization(sys);
  auto big = hcg::bigrading(sys);
  for (auto _ : state) {
    auto rep = hcg::verify_all(sys, real, big);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_VerifyAll);

void BM_DeriveUniversal(benchmark::State& state) {
  auto sys = a3();
  auto real = hcg::root_realization(sys);
  for (auto _ : state) {
    auto res = hcg::derive_universal(sys, real);
    benchmark::DoNotOptimize(res.group);
  }
}
BENCHMARK(BM_DeriveUniversal);

// Crossingless matchings on (m-1)+(m-1) points: Catalan growth.
void BM_IdempotentTerms(benchmark::State& state) {
  auto sys = hcg::new_coxeter_system(
      {"s", "t"}, {{1, static_cast<int>(state.range(0))},
                   {static_cast<int>(state.range(0)), 1}});
  benchmark::DoNotOptimize(sys);
  for (auto _ : state) {
    auto terms = hcg::jw_terms("s", "t", static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(terms);
  }
}
BENCHMARK(BM_IdempotentTerms)->Arg(4)->Arg(6)->Arg(8);

}  // namespace
