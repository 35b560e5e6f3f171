#include <benchmark/benchmark.h>

#include <vector>

#include "grapharena/arena.hpp"
#include "grapharena/bench.hpp"
#include "grapharena/digraph.hpp"
#include "grapharena/ops.hpp"
#include "grapharena/walk.hpp"

using namespace grapharena;

static void BM_GrowableArenaAllocFree(benchmark::State& state) {
  GrowableArena arena(64);
  std::vector<void*> ptrs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (auto& p : ptrs) p = arena.allocate();
    for (auto& p : ptrs) arena.deallocate(p);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 2);
}
BENCHMARK(BM_GrowableArenaAllocFree)->Range(1 << 10, 1 << 18);

static void BM_SystemAllocFree(benchmark::State& state) {
  std::vector<void*> ptrs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (auto& p : ptrs) p = ::operator new(64);
    for (auto& p : ptrs) ::operator delete(p);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 2);
}
BENCHMARK(BM_SystemAllocFree)->Range(1 << 10, 1 << 18);

static void BM_EdgeSetUnion(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Edge> a(n), b(n), dst(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = Edge{static_cast<VertexId>(2 * i), 1.0f};
    b[i] = Edge{static_cast<VertexId>(2 * i + 1), 1.0f};
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(edgeSetUnion(a, b, dst.data()));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 2);
}
BENCHMARK(BM_EdgeSetUnion)->Range(1 << 6, 1 << 16);

static void BM_CloneDiGraph(benchmark::State& state) {
  CsrGraph csr = synthGraph(10000, static_cast<std::size_t>(state.range(0)), 7);
  DiGraph g = cloneGraph(csr);
  for (auto _ : state) {
    DiGraph copy = cloneGraph(g);
    benchmark::DoNotOptimize(copy.size());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CloneDiGraph)->Range(1 << 14, 1 << 17);

static void BM_ReverseWalk(benchmark::State& state) {
  CsrGraph csr = synthGraph(10000, 100000, 11);
  DiGraph g = cloneGraph(csr);
  for (auto _ : state) {
    auto counts = reverseWalk(g, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(counts.data());
  }
}
BENCHMARK(BM_ReverseWalk)->Arg(4)->Arg(16)->Arg(42);

BENCHMARK_MAIN();
