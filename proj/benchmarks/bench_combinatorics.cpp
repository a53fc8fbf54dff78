#include <benchmark/benchmark.h>

#include "fsl/fermat.hpp"
#include "fsl/grouprep.hpp"
#include "fsl/wci.hpp"

using namespace fsl;

static void BM_Partitions(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto ps = grouprep::partitions(k);
    benchmark::DoNotOptimize(ps);
  }
}
BENCHMARK(BM_Partitions)->Arg(10)->Arg(20)->Arg(30)->Arg(40);

static void BM_HookSpectrum(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto s = grouprep::sym_degree_spectrum(k, Int(1) << 40);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_HookSpectrum)->DenseRange(8, 14, 2);

static void BM_ShapeSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    wci::SearchOutcome out = wci::search_max_symmetric(n, wci::Kind::Fano);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_ShapeSearch)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_FermatVerdict(benchmark::State& state) {
  fermat::FermatCI ci{7, {1, 2, 5}};
  for (auto _ : state) {
    auto v = fermat::singular_point_search(ci);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_FermatVerdict)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
