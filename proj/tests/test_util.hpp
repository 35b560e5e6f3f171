// Shared test helpers: independent reference implementations used as oracles
// against the library. These deliberately use naive containers and parsing so
// they share no code with the implementation under test.
#pragma once
#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "grapharena/csr.hpp"
#include "grapharena/digraph.hpp"
#include "grapharena/random.hpp"

namespace testutil {

using grapharena::DiGraph;
using grapharena::Edge;
using grapharena::EdgeWeight;
using grapharena::SplitMix64;
using grapharena::VertexId;

// ---------------------------------------------------------------------------
// Reference MTX parser (istringstream-based, single-threaded).

struct RefGraph {
  std::size_t n = 0;
  bool weighted = false;
  std::map<VertexId, std::vector<std::pair<VertexId, EdgeWeight>>> adj;
  std::size_t m = 0;
};

inline RefGraph referenceParseMtx(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("ref: empty file");
  std::istringstream banner(line);
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  bool weighted = field != "pattern";
  bool symmetric = symmetry == "symmetric";

  std::size_t rows = 0, cols = 0, entries = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '%') continue;
    std::istringstream sizes(line);
    if (sizes >> rows >> cols >> entries) break;
  }
  RefGraph g;
  g.n = std::max(rows, cols);
  g.weighted = weighted;
  std::size_t seen = 0;
  while (seen < entries && std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream rec(line);
    std::size_t u = 0, v = 0;
    float w = 1;
    rec >> u >> v;
    if (weighted) rec >> w;
    ++seen;
    g.adj[static_cast<VertexId>(u - 1)].emplace_back(static_cast<VertexId>(v - 1), w);
    ++g.m;
    if (symmetric && u != v) {
      g.adj[static_cast<VertexId>(v - 1)].emplace_back(static_cast<VertexId>(u - 1), w);
      ++g.m;
    }
  }
  return g;
}

// Per-vertex edge multiset of a CSR graph, sorted for comparison.
inline std::vector<std::pair<VertexId, EdgeWeight>> sortedRow(const grapharena::CsrGraph& g,
                                                              VertexId u) {
  std::vector<std::pair<VertexId, EdgeWeight>> row;
  auto ts = g.targets(u);
  auto ws = g.weights(u);
  for (std::size_t i = 0; i < ts.size(); ++i)
    row.emplace_back(ts[i], g.weighted ? ws[i] : EdgeWeight(1));
  std::sort(row.begin(), row.end());
  return row;
}

inline bool csrMatchesReference(const grapharena::CsrGraph& g, const RefGraph& ref) {
  if (g.n != ref.n || g.m != ref.m) return false;
  for (std::size_t u = 0; u < g.n; ++u) {
    auto uk = static_cast<VertexId>(u);
    auto got = sortedRow(g, uk);
    std::vector<std::pair<VertexId, EdgeWeight>> want;
    if (auto it = ref.adj.find(uk); it != ref.adj.end()) want = it->second;
    std::sort(want.begin(), want.end());
    if (got != want) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Map-of-sorted-sets oracle for DiGraph semantics.

struct OracleGraph {
  std::set<VertexId> verts;
  std::map<VertexId, std::map<VertexId, EdgeWeight>> adj;

  void addVertex(VertexId u) { verts.insert(u); }

  void addEdges(VertexId u, const std::vector<Edge>& list) {
    if (!verts.count(u) || list.empty()) return;
    for (const Edge& e : list) adj[u][e.target] = e.weight;  // incoming weight wins
  }

  void removeEdges(VertexId u, const std::vector<Edge>& list) {
    if (!verts.count(u) || list.empty()) return;
    auto it = adj.find(u);
    if (it == adj.end()) return;
    for (const Edge& e : list) it->second.erase(e.target);
  }

  std::size_t order() const { return verts.size(); }

  std::size_t size() const {
    std::size_t m = 0;
    for (auto& [u, row] : adj)
      if (verts.count(u)) m += row.size();
    return m;
  }

  std::vector<Edge> edges(VertexId u) const {
    std::vector<Edge> out;
    if (auto it = adj.find(u); it != adj.end())
      for (auto& [v, w] : it->second) out.push_back(Edge{v, w});
    return out;
  }
};

inline bool matchesOracle(const DiGraph& g, const OracleGraph& o) {
  if (g.order() != o.order() || g.size() != o.size()) return false;
  for (std::size_t u = 0; u < g.span(); ++u) {
    auto uk = static_cast<VertexId>(u);
    if (g.hasVertex(uk) != (o.verts.count(uk) > 0)) return false;
    auto got = g.edges(uk);
    auto want = o.edges(uk);
    if (got.size() != want.size()) return false;
    if (!std::equal(got.begin(), got.end(), want.begin())) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Small builders.

inline std::vector<Edge> edgeList(std::initializer_list<std::pair<VertexId, EdgeWeight>> list) {
  std::vector<Edge> out;
  for (auto& [v, w] : list) out.push_back(Edge{v, w});
  return out;
}

// Build a DiGraph (post-update state) from loose (u, v, w) triples.
inline DiGraph buildGraph(const std::vector<std::tuple<VertexId, VertexId, EdgeWeight>>& triples,
                          std::size_t minSpan = 0) {
  DiGraph g;
  std::size_t span = minSpan;
  for (auto& [u, v, w] : triples) span = std::max({span, std::size_t(u) + 1, std::size_t(v) + 1});
  if (span > 0) g.reserve(span);
  for (auto& [u, v, w] : triples) {
    g.addVertex(u);
    g.addVertex(v);
  }
  std::map<VertexId, std::vector<Edge>> bySource;
  for (auto& [u, v, w] : triples) bySource[u].push_back(Edge{v, w});
  for (auto& [u, list] : bySource) {
    g.allocateEdges(u, static_cast<VertexId>(list.size()));
    for (const Edge& e : list) g.addEdgeUnsafe(u, e.target, e.weight);
  }
  g.update(false, false);
  return g;
}

// Random graph as triples; may contain duplicate (u, v) pairs.
inline std::vector<std::tuple<VertexId, VertexId, EdgeWeight>> randomTriples(
    SplitMix64& rng, std::size_t maxVerts, std::size_t edgeCount) {
  std::vector<std::tuple<VertexId, VertexId, EdgeWeight>> out;
  for (std::size_t i = 0; i < edgeCount; ++i) {
    auto u = static_cast<VertexId>(rng.below(maxVerts));
    auto v = static_cast<VertexId>(rng.below(maxVerts));
    auto w = static_cast<EdgeWeight>(1 + rng.below(100));
    out.emplace_back(u, v, w);
  }
  return out;
}

}  // namespace testutil
