#include "grapharena/ops.hpp"

#include <algorithm>
#include <cstring>

namespace grapharena {

namespace {

/** Copy a source edge list into u's block and set its degree. */
void copyEdges(DiGraph& dst, DiGraph::Key u, std::span<const Edge> src) {
  if (!src.empty()) std::memcpy(dst.edgeData(u), src.data(), src.size_bytes());
  dst.setDegreeUnsafe(u, static_cast<DiGraph::Key>(src.size()));
}

}  // namespace

DiGraph cloneGraph(const DiGraph& g) {
  DiGraph out;
  const std::size_t span = g.span();
  out.reserve(span);
  #pragma omp parallel for schedule(dynamic, 2048)
  for (std::size_t u = 0; u < span; ++u) {
    auto uk = static_cast<DiGraph::Key>(u);
    if (g.hasVertex(uk)) out.addVertex(uk);
  }
  #pragma omp parallel for schedule(dynamic, 2048)
  for (std::size_t u = 0; u < span; ++u) {
    auto uk = static_cast<DiGraph::Key>(u);
    if (g.hasVertex(uk)) out.allocateEdges(uk, g.degree(uk));
  }
  #pragma omp parallel for schedule(dynamic, 2048)
  for (std::size_t u = 0; u < span; ++u) {
    auto uk = static_cast<DiGraph::Key>(u);
    if (g.hasVertex(uk)) copyEdges(out, uk, g.edges(uk));
  }
  out.setOrder(g.order());
  out.setSize(g.size());
  return out;
}

DiGraph cloneGraph(const CsrGraph& g) {
  DiGraph out;
  const std::size_t span = g.n;
  out.reserve(span);
  #pragma omp parallel for schedule(dynamic, 2048)
  for (std::size_t u = 0; u < span; ++u)
    out.addVertex(static_cast<DiGraph::Key>(u));
  #pragma omp parallel for schedule(dynamic, 2048)
  for (std::size_t u = 0; u < span; ++u) {
    auto uk = static_cast<DiGraph::Key>(u);
    out.allocateEdges(uk, g.degree(uk));
  }
  #pragma omp parallel for schedule(dynamic, 2048)
  for (std::size_t u = 0; u < span; ++u) {
    auto uk = static_cast<DiGraph::Key>(u);
    auto ts = g.targets(uk);
    auto ws = g.weights(uk);
    Edge* dst = out.edgeData(uk);
    for (std::size_t k = 0; k < ts.size(); ++k)
      dst[k] = Edge{ts[k], g.weighted ? ws[k] : EdgeWeight(1)};
    out.setDegreeUnsafe(uk, static_cast<DiGraph::Key>(ts.size()));
  }
  // CSR rows are not necessarily sorted by target, so sort here; this keeps
  // later per-vertex merges linear in the degree.
  out.update(true, false);
  return out;
}

UpdateDelta subtractGraphInplace(DiGraph& g, const DiGraph& batch) {
  const std::size_t span = batch.span();
  std::size_t dm = 0;
  #pragma omp parallel for schedule(dynamic, 2048) reduction(+ : dm)
  for (std::size_t u = 0; u < span; ++u) {
    auto uk = static_cast<DiGraph::Key>(u);
    if (!batch.hasVertex(uk) || !g.hasVertex(uk)) continue;
    dm += g.removeEdges(uk, batch.edges(uk));
  }
  g.setSize(g.size() - dm);
  return UpdateDelta{0, dm};
}

std::pair<DiGraph, UpdateDelta> subtractGraph(const DiGraph& g, const DiGraph& batch) {
  DiGraph out;
  const std::size_t span = g.span();
  out.reserve(span);
  #pragma omp parallel for schedule(dynamic, 2048)
  for (std::size_t u = 0; u < span; ++u) {
    auto uk = static_cast<DiGraph::Key>(u);
    if (g.hasVertex(uk)) out.addVertex(uk);
  }
  #pragma omp parallel for schedule(dynamic, 2048)
  for (std::size_t u = 0; u < span; ++u) {
    auto uk = static_cast<DiGraph::Key>(u);
    if (g.hasVertex(uk)) out.allocateEdges(uk, g.degree(uk));
  }
  std::size_t dm = 0;
  #pragma omp parallel for schedule(dynamic, 2048) reduction(+ : dm)
  for (std::size_t u = 0; u < span; ++u) {
    auto uk = static_cast<DiGraph::Key>(u);
    if (!g.hasVertex(uk)) continue;
    if (!batch.hasVertex(uk)) {
      copyEdges(out, uk, g.edges(uk));
    } else {
      std::size_t kept = edgeSetDifference(g.edges(uk), batch.edges(uk), out.edgeData(uk));
      out.setDegreeUnsafe(uk, static_cast<DiGraph::Key>(kept));
      dm += g.degree(uk) - kept;
    }
  }
  out.setOrder(g.order());
  out.setSize(g.size() - dm);
  return {std::move(out), UpdateDelta{0, dm}};
}

UpdateDelta addGraphInplace(DiGraph& g, const DiGraph& batch) {
  const std::size_t span = std::max(g.span(), batch.span());
  g.reserve(span);
  std::size_t dn = 0;
  #pragma omp parallel for schedule(dynamic, 2048) reduction(+ : dn)
  for (std::size_t u = 0; u < batch.span(); ++u) {
    auto uk = static_cast<DiGraph::Key>(u);
    if (!batch.hasVertex(uk) || g.hasVertex(uk)) continue;
    g.addVertex(uk);
    ++dn;
  }
  std::size_t dm = 0;
  #pragma omp parallel for schedule(dynamic, 2048) reduction(+ : dm)
  for (std::size_t u = 0; u < span; ++u) {
    auto uk = static_cast<DiGraph::Key>(u);
    if (!g.hasVertex(uk)) continue;
    dm += g.addEdges(uk, batch.edges(uk));
  }
  g.setOrder(g.order() + dn);
  g.setSize(g.size() + dm);
  return UpdateDelta{dn, dm};
}

std::pair<DiGraph, UpdateDelta> addGraph(const DiGraph& g, const DiGraph& batch) {
  DiGraph out;
  const std::size_t span = std::max(g.span(), batch.span());
  out.reserve(span);
  std::size_t dn = 0;
  #pragma omp parallel for schedule(dynamic, 2048) reduction(+ : dn)
  for (std::size_t u = 0; u < span; ++u) {
    auto uk = static_cast<DiGraph::Key>(u);
    if (g.hasVertex(uk)) {
      out.addVertex(uk);
    } else if (batch.hasVertex(uk)) {
      out.addVertex(uk);
      ++dn;
    }
  }
  #pragma omp parallel for schedule(dynamic, 2048)
  for (std::size_t u = 0; u < span; ++u) {
    auto uk = static_cast<DiGraph::Key>(u);
    if (out.hasVertex(uk)) out.allocateEdges(uk, g.degree(uk) + batch.degree(uk));
  }
  std::size_t dm = 0;
  #pragma omp parallel for schedule(dynamic, 2048) reduction(+ : dm)
  for (std::size_t u = 0; u < span; ++u) {
    auto uk = static_cast<DiGraph::Key>(u);
    if (!out.hasVertex(uk)) continue;
    if (!batch.hasVertex(uk)) {
      copyEdges(out, uk, g.edges(uk));
    } else if (g.hasVertex(uk)) {
      std::size_t merged = edgeSetUnion(g.edges(uk), batch.edges(uk), out.edgeData(uk));
      out.setDegreeUnsafe(uk, static_cast<DiGraph::Key>(merged));
      dm += merged - g.degree(uk);
    } else {
      // Vertex exists only in the batch: its edges still belong in the union.
      copyEdges(out, uk, batch.edges(uk));
      dm += batch.degree(uk);
    }
  }
  out.setOrder(g.order() + dn);
  out.setSize(g.size() + dm);
  return {std::move(out), UpdateDelta{dn, dm}};
}

bool structurallyEqual(const DiGraph& a, const DiGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const std::size_t span = std::max(a.span(), b.span());
  bool equal = true;
  #pragma omp parallel for schedule(dynamic, 2048) reduction(&& : equal)
  for (std::size_t u = 0; u < span; ++u) {
    auto uk = static_cast<DiGraph::Key>(u);
    if (a.hasVertex(uk) != b.hasVertex(uk)) { equal = false; continue; }
    auto ea = a.edges(uk);
    auto eb = b.edges(uk);
    if (ea.size() != eb.size() || !std::equal(ea.begin(), ea.end(), eb.begin())) equal = false;
  }
  return equal;
}

}  // namespace grapharena
