#include <benchmark/benchmark.h>

#include <random>

#include "treeconn/connectivity.hpp"
#include "treeconn/families.hpp"
#include "treeconn/packing_exact.hpp"
#include "treeconn/packing_fast.hpp"
#include "treeconn/random_graphs.hpp"

using namespace treeconn;

namespace {

std::vector<Vertex> first(int k) {
  std::vector<Vertex> s;
  for (Vertex v = 0; v < k; ++v) s.push_back(v);
  return s;
}

void BM_ExactCompleteInternal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = SteinerInstance::create(complete_symmetric(n), first(3), 0);
  for (auto _ : state) benchmark::DoNotOptimize(max_packing(inst, Disjointness::kInternal).value);
}
BENCHMARK(BM_ExactCompleteInternal)->DenseRange(4, 6);

void BM_ExactCompleteArc(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = SteinerInstance::create(complete_symmetric(n), first(3), 0);
  for (auto _ : state) benchmark::DoNotOptimize(max_packing(inst, Disjointness::kArc).value);
}
BENCHMARK(BM_ExactCompleteArc)->DenseRange(4, 6);

void BM_EulerianLambda(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const auto inst = SteinerInstance::create(random_eulerian(n, n, rng), first(4), 0);
  for (auto _ : state) benchmark::DoNotOptimize(eulerian_lambda(inst));
}
BENCHMARK(BM_EulerianLambda)->RangeMultiplier(2)->Range(8, 256);

void BM_EulerianVersusExact(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto inst = SteinerInstance::create(random_eulerian(7, 4, rng), first(4), 0);
  for (auto _ : state) benchmark::DoNotOptimize(max_packing(inst, Disjointness::kArc).value);
}
BENCHMARK(BM_EulerianVersusExact);

void BM_SymmetricDecide(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = SteinerInstance::create(complete_symmetric(n), first(3), 0);
  const int l = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_kappa_decide(inst, l).has_value());
}
BENCHMARK(BM_SymmetricDecide)->Args({5, 2})->Args({6, 3})->Args({8, 3});

void BM_GlobalJoin(benchmark::State& state) {
  const Digraph d = join_family(3, 9);
  for (auto _ : state) benchmark::DoNotOptimize(global_tree_connectivity(d, 3, Disjointness::kInternal).value);
}
BENCHMARK(BM_GlobalJoin)->Unit(benchmark::kMillisecond);

void BM_GlobalKappa(benchmark::State& state) {
  const Digraph d = complete_symmetric(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(global_kappa(d));
}
BENCHMARK(BM_GlobalKappa)->RangeMultiplier(2)->Range(8, 64);

}  // namespace

BENCHMARK_MAIN();
