#pragma once
#include <atomic>
#include <cassert>
#include <cstddef>
#include <memory>
#include <span>

#include "grapharena/arena.hpp"
#include "grapharena/types.hpp"
#include "grapharena/util.hpp"

namespace grapharena {

/**
 * Merge two edge lists sorted by target id into dst, dropping duplicate
 * targets; where both lists carry the same target, b's weight wins.
 * dst must have room for a.size() + b.size() edges and may not overlap a or b.
 * @returns number of edges written
 */
std::size_t edgeSetUnion(std::span<const Edge> a, std::span<const Edge> b, Edge* dst) noexcept;

/**
 * Remove from the sorted edge list a every edge whose target appears in the
 * sorted list b (weights are ignored for matching), compacting a in place.
 * @returns number of edges remaining
 */
std::size_t edgeSetDifference(std::span<Edge> a, std::span<const Edge> b) noexcept;

/** Out-of-place variant of edgeSetDifference, writing survivors to dst. */
std::size_t edgeSetDifference(std::span<const Edge> a, std::span<const Edge> b, Edge* dst) noexcept;

/**
 * Mutable directed graph with one owned, arena-backed edge array per vertex.
 *
 * Vertex existence is a packed bit set; edges, degrees and capacities are
 * flat parallel arrays indexed by vertex id, so the structure grows with the
 * highest vertex id (span), not the vertex count. Edge blocks come from a
 * ConcurrentArena, which makes per-vertex mutation cheap and parallelizable.
 *
 * Concurrency: reads may run concurrently. Distinct vertices may be mutated
 * concurrently by distinct threads; the only same-vertex concurrency allowed
 * is addEdgeUnsafe's atomic slot claim. reserve() and update() require
 * exclusive access. Construct the graph after the worker thread count is
 * fixed, since the arena sizes itself per thread.
 *
 * Batch mutators (addEdges, removeEdges) expect both the graph's edge lists
 * and the incoming list to be sorted by target id and duplicate-free, the
 * state update() establishes. n and m are maintained only by update() and
 * the explicit setters; the per-vertex mutators deliberately do not touch
 * them so that parallel callers can account for deltas themselves.
 */
class DiGraph {
 public:
  using Key = VertexId;
  using Weight = EdgeWeight;

  /** Existence flags are packed into words of this many bits. */
  static constexpr std::size_t kBoolBits = 64;
  /** Bytes each stored edge occupies. */
  static constexpr std::size_t kEdgeSize = sizeof(Edge);

  DiGraph() = default;
  /** Construct with a specific pool size for the backing arena. */
  explicit DiGraph(std::size_t poolSize) : poolSize_(poolSize) {}

  DiGraph(const DiGraph&) = delete;
  DiGraph& operator=(const DiGraph&) = delete;
  DiGraph(DiGraph&& o) noexcept { moveFrom(o); }
  DiGraph& operator=(DiGraph&& o) noexcept {
    if (this != &o) {
      destroy();
      moveFrom(o);
    }
    return *this;
  }
  ~DiGraph() { destroy(); }

  /** One past the highest usable vertex id. */
  std::size_t span() const noexcept { return cap_; }
  /** Number of existing vertices (valid after update() or explicit set). */
  std::size_t order() const noexcept { return n_; }
  /** Number of edges (valid after update() or explicit set). */
  std::size_t size() const noexcept { return m_; }
  /** Vertex slots reserved (page-rounded; >= span). */
  std::size_t reserved() const noexcept { return res_; }

  /** Check whether a vertex exists. */
  bool hasVertex(Key u) const noexcept {
    return u < cap_ && getBit(exists_, u);
  }

  /** Out-degree of a vertex; 0 for ids outside the span. */
  Key degree(Key u) const noexcept {
    return u < cap_ ? degrees_[u] : 0;
  }

  /** Allocated edge capacity of a vertex, in edges. */
  Key capacity(Key u) const noexcept {
    return u < cap_ ? capacities_[u] : 0;
  }

  /** Outgoing edges of a vertex; empty for ids outside the span. */
  std::span<const Edge> edges(Key u) const noexcept {
    return u < cap_ ? std::span<const Edge>(edges_[u], degrees_[u]) : std::span<const Edge>();
  }

  /**
   * Ensure the graph can hold vertex ids below n. Existing contents are
   * preserved and new slots zeroed; reservations are rounded up to whole
   * pages so repeated small growth reuses the same arrays. Exclusive.
   */
  void reserve(std::size_t n);

  /**
   * Add a vertex, growing the span if needed. Does not update order(); call
   * update() or setOrder() once a batch of changes is complete. Safe to call
   * concurrently for distinct ids already inside the span.
   */
  void addVertex(Key u) {
    if (u >= cap_) reserve(u + 1);
    setBitAtomic(exists_, u);
  }

  /**
   * Allocate the edge block of a vertex sized for deg edges. No-op when the
   * id is out of range or a block already exists.
   */
  void allocateEdges(Key u, Key deg) {
    if (u >= cap_ || edges_[u]) return;
    std::size_t bytes = ConcurrentArena::allocationSize(std::size_t(deg) * kEdgeSize);
    edges_[u] = static_cast<Edge*>(arena().allocate(bytes));
    capacities_[u] = static_cast<Key>(bytes / kEdgeSize);
  }

  /**
   * Append an edge into a pre-allocated slot, claiming the index with an
   * atomic degree increment. The caller guarantees spare capacity; nothing
   * is sorted or checked.
   */
  void addEdgeUnsafe(Key u, Key v, Weight w) noexcept {
    Edge* ptr = edges_[u];
    Key i = std::atomic_ref<Key>(degrees_[u]).fetch_add(1, std::memory_order_relaxed);
    ptr[i] = Edge{v, w};
  }

  /**
   * Merge a sorted, duplicate-free edge list into a vertex, replacing its
   * block with one sized for the union; where a target already exists the
   * incoming weight wins. Runs in O(degree + list size).
   * @returns number of edges added (0 for a missing vertex or empty list)
   */
  Key addEdges(Key u, std::span<const Edge> list);

  /**
   * Remove every edge of u whose target appears in the sorted list,
   * compacting in place; capacity is untouched.
   * @returns number of edges removed
   */
  Key removeEdges(Key u, std::span<const Edge> list);

  /**
   * Restore graph integrity after bulk changes: sort each vertex's edges by
   * target id (unless isSorted), drop duplicate targets keeping the first
   * occurrence (unless isUnique), and recount n and m. Exclusive.
   */
  void update(bool isUnique = false, bool isSorted = false);

  /** Set the vertex count directly (bulk-build bookkeeping). */
  void setOrder(std::size_t n) noexcept { n_ = n; }
  /** Set the edge count directly (bulk-build bookkeeping). */
  void setSize(std::size_t m) noexcept { m_ = m; }

  /** Mutable pointer to a vertex's edge block (capacity() slots). */
  Edge* edgeData(Key u) noexcept { return edges_[u]; }

  /** Set a vertex's degree without any checks; d must not exceed capacity. */
  void setDegreeUnsafe(Key u, Key d) noexcept {
    assert(d <= capacities_[u]);
    degrees_[u] = d;
  }

  /** The arena backing this graph's edge blocks. */
  ConcurrentArena& arena() {
    if (!arena_) arena_ = std::make_unique<ConcurrentArena>(poolSize_);
    return *arena_;
  }

 private:
  void destroy() noexcept;
  void moveFrom(DiGraph& o) noexcept;
  void sortEdges(Key u) noexcept;
  void uniqueEdges(Key u) noexcept;

  std::uint64_t* exists_ = nullptr;
  Edge** edges_ = nullptr;
  Key* degrees_ = nullptr;
  Key* capacities_ = nullptr;
  std::unique_ptr<ConcurrentArena> arena_;
  std::size_t poolSize_ = kDefaultPoolSize;
  std::size_t cap_ = 0;  // vertex capacity: max usable id + 1
  std::size_t res_ = 0;  // reserved vertex slots, page-rounded
  std::size_t n_ = 0;
  std::size_t m_ = 0;
};

}  // namespace grapharena
