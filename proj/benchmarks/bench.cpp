#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "idemsplit/endo.hpp"
#include "idemsplit/graph_pi1.hpp"
#include "idemsplit/sampling.hpp"
#include "idemsplit/thompson.hpp"

using namespace idemsplit;

namespace {

std::vector<FWord> word_pool(std::uint32_t len, std::size_t count) {
  Rng rng(99);
  std::vector<FWord> pool;
  pool.reserve(count);
  for (std::size_t t = 0; t < count; ++t) pool.push_back(sample_fword(rng, len, 8));
  return pool;
}

}  // namespace

static void BM_NormalForm(benchmark::State& state) {
  auto pool = word_pool(static_cast<std::uint32_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_form(pool[i++ % pool.size()]));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NormalForm)->RangeMultiplier(2)->Range(4, 64)->Complexity();

static void BM_ToPL(benchmark::State& state) {
  auto pool = word_pool(static_cast<std::uint32_t>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(to_pl(pool[i++ % pool.size()]));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ToPL)->RangeMultiplier(2)->Range(4, 32)->Complexity();

static void BM_WordsEqual(benchmark::State& state) {
  auto pool = word_pool(16, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(words_equal(pool[i % pool.size()], pool[(i + 1) % pool.size()]));
    ++i;
  }
}
BENCHMARK(BM_WordsEqual);

static void BM_IsInner(benchmark::State& state) {
  Rng rng(7);
  std::vector<FreeEndo> endos;
  for (int t = 0; t < 32; ++t) endos.push_back(sample_inner(rng, 3, 6).endo);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_inner(endos[i++ % endos.size()], 8));
  }
}
BENCHMARK(BM_IsInner);

static void BM_EnumerateClasses(benchmark::State& state) {
  GraphComplex wedge(1, {GraphEdge{0, 0, 0}, GraphEdge{1, 0, 0}}, {}, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_classes(wedge, static_cast<std::uint32_t>(state.range(0))));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateClasses)->DenseRange(2, 6)->Complexity();

BENCHMARK_MAIN();
