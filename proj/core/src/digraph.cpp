#include "grapharena/digraph.hpp"

#include <algorithm>

namespace grapharena {

std::size_t edgeSetUnion(std::span<const Edge> a, std::span<const Edge> b, Edge* dst) noexcept {
  std::size_t ia = 0, ib = 0, k = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia].target < b[ib].target) dst[k++] = a[ia++];
    else if (b[ib].target < a[ia].target) dst[k++] = b[ib++];
    else {
      dst[k++] = b[ib++];  // same target: incoming weight wins
      ++ia;
    }
  }
  while (ia < a.size()) dst[k++] = a[ia++];
  while (ib < b.size()) dst[k++] = b[ib++];
  return k;
}

std::size_t edgeSetDifference(std::span<Edge> a, std::span<const Edge> b) noexcept {
  std::size_t ia = 0, ib = 0, k = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia].target < b[ib].target) a[k++] = a[ia++];
    else if (b[ib].target < a[ia].target) ++ib;
    else { ++ia; ++ib; }
  }
  while (ia < a.size()) a[k++] = a[ia++];
  return k;
}

std::size_t edgeSetDifference(std::span<const Edge> a, std::span<const Edge> b, Edge* dst) noexcept {
  std::size_t ia = 0, ib = 0, k = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia].target < b[ib].target) dst[k++] = a[ia++];
    else if (b[ib].target < a[ia].target) ++ib;
    else { ++ia; ++ib; }
  }
  while (ia < a.size()) dst[k++] = a[ia++];
  return k;
}

void DiGraph::reserve(std::size_t n) {
  arena();  // bind the arena while access is still exclusive
  n = std::max(n, cap_);
  std::size_t res = ceilDiv(n, kPageSize) * kPageSize;
  if (n <= cap_ && res == res_) return;
  constexpr std::size_t B = kBoolBits;
  exists_     = reallocate(exists_, ceilDiv(cap_, B), ceilDiv(res_, B), ceilDiv(n, B), ceilDiv(res, B));
  edges_      = reallocate(edges_, cap_, res_, n, res);
  degrees_    = reallocate(degrees_, cap_, res_, n, res);
  capacities_ = reallocate(capacities_, cap_, res_, n, res);
  cap_ = n;
  res_ = res;
}

DiGraph::Key DiGraph::addEdges(Key u, std::span<const Edge> list) {
  if (!hasVertex(u) || list.empty()) return 0;
  Key degPrev = degrees_[u];
  std::size_t degMax = std::size_t(degPrev) + list.size();
  std::size_t bytes = ConcurrentArena::allocationSize(degMax * kEdgeSize);
  Edge* ptr = static_cast<Edge*>(arena_->allocate(bytes));
  degrees_[u] = static_cast<Key>(edgeSetUnion(edges(u), list, ptr));
  arena_->deallocate(edges_[u], std::size_t(capacities_[u]) * kEdgeSize);
  edges_[u] = ptr;
  capacities_[u] = static_cast<Key>(bytes / kEdgeSize);
  return degrees_[u] - degPrev;
}

DiGraph::Key DiGraph::removeEdges(Key u, std::span<const Edge> list) {
  if (!hasVertex(u) || list.empty()) return 0;
  Key degPrev = degrees_[u];
  degrees_[u] = static_cast<Key>(edgeSetDifference(std::span<Edge>(edges_[u], degPrev), list));
  return degPrev - degrees_[u];
}

void DiGraph::sortEdges(Key u) noexcept {
  Edge* ib = edges_[u];
  std::stable_sort(ib, ib + degrees_[u],
                   [](const Edge& a, const Edge& b) { return a.target < b.target; });
}

void DiGraph::uniqueEdges(Key u) noexcept {
  Edge* ib = edges_[u];
  Edge* it = std::unique(ib, ib + degrees_[u],
                         [](const Edge& a, const Edge& b) { return a.target == b.target; });
  degrees_[u] = static_cast<Key>(it - ib);
}

void DiGraph::update(bool isUnique, bool isSorted) {
  if (!isSorted) {
    #pragma omp parallel for schedule(dynamic, 2048)
    for (std::size_t u = 0; u < cap_; ++u) {
      // Heavy vertices become tasks so one huge list cannot serialize a chunk.
      #pragma omp task if (degrees_[u] > 2048) default(shared) firstprivate(u)
      sortEdges(static_cast<Key>(u));
    }
  }
  if (!isUnique) {
    #pragma omp parallel for schedule(dynamic, 2048)
    for (std::size_t u = 0; u < cap_; ++u)
      uniqueEdges(static_cast<Key>(u));
  }
  std::size_t n = 0, m = 0;
  #pragma omp parallel for schedule(static) reduction(+ : n, m)
  for (std::size_t u = 0; u < cap_; ++u) {
    if (!getBit(exists_, u)) continue;
    ++n;
    m += degrees_[u];
  }
  n_ = n;
  m_ = m;
}

void DiGraph::destroy() noexcept {
  if (arena_) {
    for (std::size_t u = 0; u < cap_; ++u) {
      if (edges_[u]) arena_->deallocate(0, edges_[u], std::size_t(capacities_[u]) * kEdgeSize);
    }
  }
  delete[] exists_;
  delete[] edges_;
  delete[] degrees_;
  delete[] capacities_;
  exists_ = nullptr;
  edges_ = nullptr;
  degrees_ = nullptr;
  capacities_ = nullptr;
  arena_.reset();
  cap_ = res_ = n_ = m_ = 0;
}

void DiGraph::moveFrom(DiGraph& o) noexcept {
  exists_ = o.exists_;
  edges_ = o.edges_;
  degrees_ = o.degrees_;
  capacities_ = o.capacities_;
  arena_ = std::move(o.arena_);
  poolSize_ = o.poolSize_;
  cap_ = o.cap_;
  res_ = o.res_;
  n_ = o.n_;
  m_ = o.m_;
  o.exists_ = nullptr;
  o.edges_ = nullptr;
  o.degrees_ = nullptr;
  o.capacities_ = nullptr;
  o.cap_ = o.res_ = o.n_ = o.m_ = 0;
}

}  // namespace grapharena
