#include <benchmark/benchmark.h>

#include <random>

#include "fsl/toric.hpp"

using namespace fsl;
using namespace fsl::toric;

static IntMatrix random_matrix(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> val(-20, 20);
  IntMatrix a(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n)));
  for (auto& row : a)
    for (auto& x : row) x = val(rng);
  return a;
}

static void BM_SmithNormalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  IntMatrix a = random_matrix(n, 42);
  for (auto _ : state) {
    SnfResult s = smith_normal_form(a);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(2, 8);

static void BM_ClassGroupProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  FanData fan = product_fan(projective_space_fan(n), projective_space_fan(n));
  for (auto _ : state) {
    ClassGroupDescriptor cg = class_group(fan);
    benchmark::DoNotOptimize(cg);
  }
}
BENCHMARK(BM_ClassGroupProduct)->DenseRange(1, 4);
