// Serial reference vs OpenMP driver on the cluster categories of type A_n.
// Run with OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include <map>

#include "rankcalc/mesh.hpp"
#include "rankcalc/rank_function.hpp"

using namespace rankcalc;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

const Category& an(int n) {
  static std::map<int, Category> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_category(cluster_category_an(n))).first;
  return it->second;
}

void label(benchmark::State& state) {
  state.SetLabel(mode(state) == Execution::serial ? "serial" : "parallel");
}

void BM_Build(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cluster_category_an(n, std::nullopt, mode(state)));
  label(state);
}

void BM_Validate(benchmark::State& state) {
  const auto& c = an(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(validate(*c, mode(state)));
  label(state);
}

void BM_KernelIdeal(benchmark::State& state) {
  const auto& c = an(static_cast<int>(state.range(0)));
  const auto rho = RankFunction::orbit_indicator(c, 0);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_ideal(rho, mode(state)));
  label(state);
}

void BM_Idempotent(benchmark::State& state) {
  const auto& c = an(static_cast<int>(state.range(0)));
  const auto rho = canonical_length(c);
  for (auto _ : state) benchmark::DoNotOptimize(is_idempotent(rho, mode(state)));
  label(state);
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int n : {3, 5, 7})
    for (int exec : {0, 1}) b->Args({n, exec});
  b->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_Build)->Apply(sizes);
BENCHMARK(BM_Validate)->Apply(sizes);
BENCHMARK(BM_KernelIdeal)->Apply(sizes);
BENCHMARK(BM_Idempotent)->Apply(sizes);

BENCHMARK_MAIN();
