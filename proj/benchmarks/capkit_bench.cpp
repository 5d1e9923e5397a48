#include <benchmark/benchmark.h>

#include "capkit/generate.hpp"
#include "capkit/integrals.hpp"
#include "capkit/monad.hpp"

namespace {

using namespace capkit;

void BM_Sugeno(benchmark::State& state) {
  Rng rng(7);
  const GroundSet g = letters(static_cast<std::size_t>(state.range(0)));
  const Capacity c = random_capacity(rng, g, 12);
  const Observable phi = random_observable(rng, g, 12);
  for (auto _ : state) benchmark::DoNotOptimize(sugeno(c, phi));
}
BENCHMARK(BM_Sugeno)->DenseRange(2, 12, 2);

void BM_Choquet(benchmark::State& state) {
  Rng rng(8);
  const GroundSet g = letters(static_cast<std::size_t>(state.range(0)));
  const Capacity c = random_capacity(rng, g, 12);
  const Observable phi = random_observable(rng, g, 12);
  for (auto _ : state) benchmark::DoNotOptimize(choquet(c, phi));
}
BENCHMARK(BM_Choquet)->DenseRange(2, 12, 2);

void BM_FuzzyProduct(benchmark::State& state) {
  Rng rng(9);
  const GroundSet g = letters(static_cast<std::size_t>(state.range(0)));
  const Capacity c = random_capacity(rng, g, 12);
  const Observable phi = random_observable(rng, g, 12);
  const auto op = Pseudomultiplication::product();
  for (auto _ : state) benchmark::DoNotOptimize(fuzzy(c, phi, op));
}
BENCHMARK(BM_FuzzyProduct)->DenseRange(2, 10, 2);

void BM_MuM(benchmark::State& state) {
  Rng rng(10);
  const auto c2 = random_capacity2(rng, letters(static_cast<std::size_t>(state.range(0))), 6,
                                   static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(mu_M(c2));
}
BENCHMARK(BM_MuM)->ArgsProduct({{2, 4, 6}, {2, 4, 8}});

void BM_MuG(benchmark::State& state) {
  Rng rng(11);
  const auto hh = random_hyperhyperspace(rng, letters(static_cast<std::size_t>(state.range(0))), 4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(mu_G(hh));
}
BENCHMARK(BM_MuG)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
