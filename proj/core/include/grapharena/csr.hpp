#pragma once
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "grapharena/types.hpp"

namespace grapharena {

/**
 * Immutable compressed-sparse-row graph: per-vertex offsets into contiguous
 * target-id and (optional) weight arrays. Produced by the loader and by the
 * synthetic generator; safe to share read-only across threads.
 */
struct CsrGraph {
  std::size_t n = 0;
  std::size_t m = 0;
  bool weighted = false;
  std::vector<std::uint64_t> offsets;      // n + 1 entries
  std::vector<VertexId> edgeKeys;          // m entries
  std::vector<EdgeWeight> edgeValues;      // m entries iff weighted

  /** Resize storage for n vertices and m edges (contents preserved). */
  void resize(std::size_t nNew, std::size_t mNew) {
    n = nNew;
    m = mNew;
    offsets.resize(n + 1);
    edgeKeys.resize(m);
    if (weighted) edgeValues.resize(m);
  }

  std::size_t span() const noexcept { return n; }
  std::size_t order() const noexcept { return n; }
  std::size_t size() const noexcept { return m; }

  VertexId degree(VertexId u) const noexcept {
    return u < n ? static_cast<VertexId>(offsets[u + 1] - offsets[u]) : 0;
  }

  /** Target ids of u's outgoing edges. */
  std::span<const VertexId> targets(VertexId u) const noexcept {
    if (u >= n) return {};
    return std::span<const VertexId>(edgeKeys.data() + offsets[u], offsets[u + 1] - offsets[u]);
  }

  /** Weights parallel to targets(u); empty when unweighted. */
  std::span<const EdgeWeight> weights(VertexId u) const noexcept {
    if (u >= n || !weighted) return {};
    return std::span<const EdgeWeight>(edgeValues.data() + offsets[u], offsets[u + 1] - offsets[u]);
  }
};

}  // namespace grapharena
