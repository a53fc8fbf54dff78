#include <benchmark/benchmark.h>

#include "fsl/molien.hpp"
#include "fsl/spin_group.hpp"

using namespace fsl::spinmolien;

static void BM_CliffordGenerators(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto gens = clifford_even_generators(k);
    benchmark::DoNotOptimize(gens);
  }
}
BENCHMARK(BM_CliffordGenerators)->DenseRange(4, 9);

static void BM_GroupClosure(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  auto gens = clifford_even_generators(k);
  for (auto _ : state) {
    FiniteMatrixGroup g = close_group(gens, 1u << 17);
    benchmark::DoNotOptimize(g.order());
  }
  state.SetLabel("order " + std::to_string(close_group(gens, 1u << 17).order()));
}
BENCHMARK(BM_GroupClosure)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_MolienSeries(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  FiniteMatrixGroup g = close_group(clifford_even_generators(k), 1u << 17);
  for (auto _ : state) {
    TruncatedSeries s = molien_series(g, 12, 1);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_MolienSeries)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_CharPoly(benchmark::State& state) {
  FiniteMatrixGroup g = close_group(clifford_even_generators(6), 1u << 12);
  size_t i = 0;
  for (auto _ : state) {
    auto cp = g.elements[i % g.order()].char_poly();
    benchmark::DoNotOptimize(cp);
    ++i;
  }
}
BENCHMARK(BM_CharPoly);
