#include <omp.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include <doctest.h>

#include "grapharena/bench.hpp"
#include "grapharena/ops.hpp"
#include "grapharena/walk.hpp"
#include "test_util.hpp"

using namespace grapharena;
using testutil::buildGraph;

namespace {

// Dense adjacency-power oracle in exact integer arithmetic: k applications of
// the adjacency matrix to the ones vector.
std::vector<std::uint64_t> walkOracle(const DiGraph& g, int steps) {
  std::size_t n = g.span();
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (const Edge& e : g.edges(static_cast<VertexId>(u))) a[u][e.target] = 1;
  std::vector<std::uint64_t> counts(n, 1);
  for (int s = 0; s < steps; ++s) {
    std::vector<std::uint64_t> next(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
      std::uint64_t sum = 0;
      for (std::size_t v = 0; v < n; ++v) sum += a[u][v] * counts[v];
      next[u] = sum;
    }
    counts = std::move(next);
  }
  return counts;
}

}  // namespace

TEST_CASE("chain graph walk counts") {
  auto g = buildGraph({{0, 1, 1.f}, {1, 2, 1.f}});
  CHECK(reverseWalk(g, 1) == std::vector<std::uint64_t>{1, 1, 0});
  CHECK(reverseWalk(g, 2) == std::vector<std::uint64_t>{1, 0, 0});
  CHECK(reverseWalk(g, 0) == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(reverseWalk(g, 1) == walkOracle(g, 1));
  CHECK(reverseWalk(g, 2) == walkOracle(g, 2));
}

TEST_CASE("one step yields the out-degree") {
  SplitMix64 rng(17);
  auto g = buildGraph(testutil::randomTriples(rng, 40, 160));
  auto counts = reverseWalk(g, 1);
  for (std::size_t u = 0; u < g.span(); ++u)
    CHECK(counts[u] == g.degree(static_cast<VertexId>(u)));
}

TEST_CASE("walk matches the dense adjacency-power oracle") {
  SplitMix64 rng(4096);
  for (int round = 0; round < 40; ++round) {
    std::size_t verts = 2 + rng.below(30);
    auto g = buildGraph(testutil::randomTriples(rng, verts, rng.below(4 * verts)));
    for (int k = 0; k <= 6; ++k) {
      auto got = reverseWalk(g, k);
      auto want = walkOracle(g, k);
      REQUIRE(got == want);
    }
  }
}

TEST_CASE("walks on DiGraph and CSR agree") {
  CsrGraph csr = synthGraph(64, 400, 5);
  DiGraph g = cloneGraph(csr);
  for (int k : {0, 1, 3, 7}) CHECK(reverseWalk(g, k) == reverseWalk(csr, k));
}

TEST_CASE("walk counts are identical across thread counts") {
  CsrGraph csr = synthGraph(300, 3000, 21);
  DiGraph g = cloneGraph(csr);
  auto reference = reverseWalk(g, 6);
  int saved = omp_get_max_threads();
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    CHECK(reverseWalk(g, 6) == reference);
  }
  omp_set_num_threads(saved);
}

TEST_CASE("relabeling vertices permutes walk counts identically") {
  SplitMix64 rng(31337);
  for (int round = 0; round < 10; ++round) {
    std::size_t n = 4 + rng.below(24);
    auto triples = testutil::randomTriples(rng, n, 3 * n);
    // Random permutation of [0, n).
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i > 1; --i)
      std::swap(perm[i - 1], perm[rng.below(i)]);

    auto relabeled = triples;
    for (auto& [u, v, w] : relabeled) {
      u = perm[u];
      v = perm[v];
    }
    auto g = buildGraph(triples, n);
    auto h = buildGraph(relabeled, n);
    auto cg = reverseWalk(g, 4);
    auto ch = reverseWalk(h, 4);
    for (std::size_t u = 0; u < n; ++u) CHECK(cg[u] == ch[perm[u]]);
  }
}
