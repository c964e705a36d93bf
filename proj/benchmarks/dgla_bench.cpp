#include <benchmark/benchmark.h>

#include "gra/canonical.hpp"
#include "gra/certificate.hpp"
#include "gra/dgla.hpp"

namespace {

const gra::Graph& diamond() {
  static const gra::Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  return g;
}

const gra::Graph& k4() {
  static const gra::Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  return g;
}

void BM_BracketTermGeneration(benchmark::State& state) {
  std::size_t terms = 0;
  for (auto _ : state) {
    gra::for_each_bracket_term(k4(), diamond(), 1, [&](int, gra::Graph&& g) { benchmark::DoNotOptimize(g); ++terms; });
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(terms));
}
BENCHMARK(BM_BracketTermGeneration);

void BM_BracketReduced(benchmark::State& state) {
  const auto a = gra::GraphSum::of(k4());
  const auto b = gra::GraphSum::of(diamond());
  for (auto _ : state) benchmark::DoNotOptimize(gra::bracket(a, b));
}
BENCHMARK(BM_BracketReduced);

void BM_DirectDifferentialSquared(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gra::reduce(gra::d_direct_squared(k4())));
}
BENCHMARK(BM_DirectDifferentialSquared);

void BM_CertificateOfDoubleDifferential(benchmark::State& state) {
  const gra::RawSum dd = gra::d_direct_squared(k4());
  for (auto _ : state) benchmark::DoNotOptimize(gra::cancellation_certificate(dd));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(dd.size()));
}
BENCHMARK(BM_CertificateOfDoubleDifferential);

void BM_JacobiatorRaw(benchmark::State& state) {
  const gra::Graph triangle(3, {{0, 1}, {0, 2}, {1, 2}});
  for (auto _ : state) {
    gra::SumAccumulator acc;
    gra::for_each_jacobiator_term(triangle, triangle, triangle, [&](int s, gra::Graph&& g) { acc.add(s, g); });
    benchmark::DoNotOptimize(std::move(acc).finish());
  }
}
BENCHMARK(BM_JacobiatorRaw)->Unit(benchmark::kMillisecond);

void BM_JacobiatorMerged(benchmark::State& state) {
  const gra::Graph triangle(3, {{0, 1}, {0, 2}, {1, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(gra::jacobiator_reduced(triangle, triangle, triangle));
}
BENCHMARK(BM_JacobiatorMerged)->Unit(benchmark::kMillisecond);

}  // namespace
