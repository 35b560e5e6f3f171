#pragma once
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <new>
#include <utility>
#include <vector>

#ifndef NDEBUG
#include <unordered_set>
#endif

#include "grapharena/types.hpp"

namespace grapharena {

/** Default size of each memory pool acquired by the growable arenas. */
inline constexpr std::size_t kDefaultPoolSize = 512 * 1024;

/**
 * Arena that hands out fixed-size blocks from a single caller-provided pool.
 *
 * Freed blocks are kept on a LIFO stack and reused before fresh pool space
 * is consumed. allocate() returns null once both the freed stack and the
 * pool are exhausted. The arena does not own the pool region; the caller
 * guarantees it outlives the arena and is aligned to at least 16 bytes.
 * Single-threaded; see ConcurrentArena for concurrent use.
 */
class FixedArena {
 public:
  /**
   * @param allocSize size of every block handed out, in bytes
   * @param poolSize total pool size in bytes (a multiple of allocSize)
   * @param pool caller-owned backing region of poolSize bytes
   */
  FixedArena(std::size_t allocSize, std::size_t poolSize, void* pool) noexcept
      : allocSize_(allocSize), poolSize_(poolSize), pool_(static_cast<std::byte*>(pool)) {
    assert(allocSize_ > 0 && poolSize_ % allocSize_ == 0);
  }

  FixedArena(const FixedArena&) = delete;
  FixedArena& operator=(const FixedArena&) = delete;
  FixedArena(FixedArena&& o) noexcept
      : allocSize_(o.allocSize_), poolSize_(o.poolSize_), pool_(o.pool_), used_(o.used_),
        freed_(std::move(o.freed_)) {
    o.pool_ = nullptr;
    o.used_ = 0;
    o.freed_.clear();
#ifndef NDEBUG
    freedSet_ = std::move(o.freedSet_);
    o.freedSet_.clear();
#endif
  }
  FixedArena& operator=(FixedArena&&) = delete;

  /** Allocate one block, reusing the most recently freed one first. */
  void* allocate() {
    if (!freed_.empty()) {
      void* ptr = freed_.back();
      freed_.pop_back();
#ifndef NDEBUG
      freedSet_.erase(ptr);
#endif
      return ptr;
    }
    if (used_ < poolSize_) {
      void* ptr = pool_ + used_;
      used_ += allocSize_;
      return ptr;
    }
    return nullptr;
  }

  /**
   * Return a block for reuse. ptr must have come from allocate() on this
   * arena and must not already be freed; neither is checked in release
   * builds.
   */
  void deallocate(void* ptr) {
#ifndef NDEBUG
    auto off = static_cast<std::size_t>(static_cast<std::byte*>(ptr) - pool_);
    assert(off < poolSize_ && off % allocSize_ == 0 && "foreign or misaligned pointer");
    assert(freedSet_.insert(ptr).second && "double free");
#endif
    freed_.push_back(ptr);
  }

  /** Invalidate every outstanding block and make the whole pool available again. */
  void reset() {
    freed_.clear();
    used_ = 0;
#ifndef NDEBUG
    freedSet_.clear();
#endif
  }

  std::size_t allocSize() const noexcept { return allocSize_; }
  std::size_t poolSize() const noexcept { return poolSize_; }
  std::size_t usedBytes() const noexcept { return used_; }
  std::size_t freedCount() const noexcept { return freed_.size(); }

 private:
  const std::size_t allocSize_;
  const std::size_t poolSize_;
  std::byte* pool_;
  std::size_t used_ = 0;
  std::vector<void*> freed_;
#ifndef NDEBUG
  std::unordered_set<void*> freedSet_;
#endif
};

/**
 * Arena for fixed-size blocks that grows by acquiring pools from the system
 * on demand and releases them all at reset() or destruction.
 *
 * A fresh instance starts with used == poolSize so the first allocation
 * acquires a pool. The pool size is rounded up to a whole number of blocks
 * (and at least one block) so a block can never extend past its pool.
 * Single-threaded.
 */
class GrowableArena {
 public:
  GrowableArena(std::size_t allocSize, std::size_t poolSize = kDefaultPoolSize) noexcept
      : allocSize_(allocSize),
        poolSize_(((poolSize < allocSize ? allocSize : poolSize) + allocSize - 1) / allocSize *
                  allocSize),
        used_(poolSize_) {
    assert(allocSize_ > 0);
  }

  GrowableArena(const GrowableArena&) = delete;
  GrowableArena& operator=(const GrowableArena&) = delete;
  GrowableArena(GrowableArena&& o) noexcept
      : allocSize_(o.allocSize_), poolSize_(o.poolSize_), used_(o.used_),
        pools_(std::move(o.pools_)), freed_(std::move(o.freed_)) {
    o.pools_.clear();
    o.used_ = o.poolSize_;
#ifndef NDEBUG
    freedSet_ = std::move(o.freedSet_);
    o.freedSet_.clear();
#endif
  }
  GrowableArena& operator=(GrowableArena&&) = delete;

  ~GrowableArena() { releasePools(); }

  /**
   * Allocate one block: freed stack first, then the tail of the newest pool,
   * then a newly acquired pool. Returns null only if the system allocation
   * of a new pool fails.
   */
  void* allocate() {
    if (!freed_.empty()) {
      void* ptr = freed_.back();
      freed_.pop_back();
#ifndef NDEBUG
      freedSet_.erase(ptr);
#endif
      return ptr;
    }
    if (!pools_.empty() && used_ < poolSize_) {
      void* ptr = pools_.back() + used_;
      used_ += allocSize_;
      return ptr;
    }
    auto* pool = static_cast<std::byte*>(::operator new(poolSize_, std::nothrow));
    if (!pool) return nullptr;
    pools_.push_back(pool);
    used_ = allocSize_;
    return pool;
  }

  /** Return a block for reuse; same contract as FixedArena::deallocate. */
  void deallocate(void* ptr) {
#ifndef NDEBUG
    assert(freedSet_.insert(ptr).second && "double free");
#endif
    freed_.push_back(ptr);
  }

  /** Invalidate all blocks and release every pool back to the system. */
  void reset() {
    releasePools();
    pools_.clear();
    freed_.clear();
    used_ = 0;
#ifndef NDEBUG
    freedSet_.clear();
#endif
  }

  std::size_t allocSize() const noexcept { return allocSize_; }
  std::size_t poolSize() const noexcept { return poolSize_; }
  std::size_t usedBytes() const noexcept { return used_; }
  std::size_t poolCount() const noexcept { return pools_.size(); }
  std::size_t freedCount() const noexcept { return freed_.size(); }

  /** Bytes currently held in pools (for leak accounting). */
  std::size_t reservedBytes() const noexcept { return pools_.size() * poolSize_; }

 private:
  void releasePools() noexcept {
    for (std::byte* pool : pools_) ::operator delete(pool);
  }

  const std::size_t allocSize_;
  const std::size_t poolSize_;
  std::size_t used_;
  std::vector<std::byte*> pools_;
  std::vector<void*> freed_;
#ifndef NDEBUG
  std::unordered_set<void*> freedSet_;
#endif
};

/**
 * Arena that serves arbitrary sizes by routing power-of-two requests between
 * 16 and 8192 bytes to a dedicated GrowableArena per size class; every other
 * size goes straight to the system allocator.
 *
 * Callers are expected to round requests with allocationSize() first, and
 * must pass the same size to deallocate() that they passed to allocate().
 * Single-threaded.
 */
class SizeClassArena {
 public:
  static constexpr std::size_t kMinClassSize = 16;
  static constexpr std::size_t kMaxClassSize = 8192;
  static constexpr int kClassCount = 10;  // 16, 32, ..., 8192

  explicit SizeClassArena(std::size_t poolSize = kDefaultPoolSize) : poolSize_(poolSize) {
    classes_.reserve(kClassCount);
    for (int c = 0; c < kClassCount; ++c)
      classes_.emplace_back(kMinClassSize << c, poolSize);
  }

  SizeClassArena(const SizeClassArena&) = delete;
  SizeClassArena& operator=(const SizeClassArena&) = delete;
  SizeClassArena(SizeClassArena&&) noexcept = default;

  void* allocate(std::size_t size) {
    int c = classIndex(size);
    if (c >= 0) return classes_[static_cast<std::size_t>(c)].allocate();
    return ::operator new(size, std::nothrow);
  }

  void deallocate(void* ptr, std::size_t size) {
    int c = classIndex(size);
    if (c >= 0) classes_[static_cast<std::size_t>(c)].deallocate(ptr);
    else ::operator delete(ptr);
  }

  /** Reset every size class, releasing all their pools. */
  void reset() {
    for (GrowableArena& a : classes_) a.reset();
  }

  /**
   * Recommended allocation size for a desired size: at least 16 bytes, the
   * next power of two below 8192, and a whole number of pages from there up.
   * The result is always >= size.
   */
  static constexpr std::size_t allocationSize(std::size_t size) noexcept {
    if (size <= kMinClassSize) return kMinClassSize;
    if (size < kMaxClassSize) return std::bit_ceil(size);
    return ceilDivPage(size) * kPageSize;
  }

  std::size_t poolSize() const noexcept { return poolSize_; }
  static constexpr std::size_t pageSize() noexcept { return kPageSize; }

  /** Bytes currently held in class pools. */
  std::size_t reservedBytes() const noexcept {
    std::size_t total = 0;
    for (const GrowableArena& a : classes_) total += a.reservedBytes();
    return total;
  }

  /** Direct access to one size class (16 << c bytes), for inspection. */
  const GrowableArena& sizeClass(int c) const noexcept {
    return classes_[static_cast<std::size_t>(c)];
  }

 private:
  static constexpr std::size_t ceilDivPage(std::size_t size) noexcept {
    return (size + kPageSize - 1) / kPageSize;
  }

  /** Class index for a handled size, or -1 for sizes served by the system. */
  static constexpr int classIndex(std::size_t size) noexcept {
    if (size < kMinClassSize || size > kMaxClassSize) return -1;
    if (!std::has_single_bit(size)) return -1;
    return std::countr_zero(size) - 4;
  }

  std::size_t poolSize_;
  std::vector<GrowableArena> classes_;
};

/**
 * Concurrent arena built from one SizeClassArena per worker thread, each
 * padded onto its own cache lines.
 *
 * Threads are identified by a dense index in [0, threads); the zero-argument
 * overloads take the index from the current OpenMP thread. Allocation and
 * deallocation never synchronize across threads: a block freed by a thread
 * other than its allocator simply migrates to the freeing thread's freed
 * stack, which is valid because pools are only released at reset. reset()
 * and destruction require exclusive access.
 */
class ConcurrentArena {
 public:
  /**
   * @param poolSize size of each underlying pool
   * @param threads worker thread count; 0 means the current OpenMP maximum
   */
  explicit ConcurrentArena(std::size_t poolSize = kDefaultPoolSize, int threads = 0);

  ConcurrentArena(const ConcurrentArena&) = delete;
  ConcurrentArena& operator=(const ConcurrentArena&) = delete;

  /** Allocate from the calling thread's arena. */
  void* allocate(std::size_t size);
  /** Deallocate into the calling thread's arena (cross-thread frees migrate). */
  void deallocate(void* ptr, std::size_t size);

  /** Allocate on behalf of an explicit thread index. */
  void* allocate(int thread, std::size_t size) {
    assert(thread >= 0 && thread < threads());
    return perThread_[static_cast<std::size_t>(thread)].arena.allocate(size);
  }

  /** Deallocate on behalf of an explicit thread index. */
  void deallocate(int thread, void* ptr, std::size_t size) {
    assert(thread >= 0 && thread < threads());
    if (!ptr) return;
    perThread_[static_cast<std::size_t>(thread)].arena.deallocate(ptr, size);
  }

  /** Reset every thread's arena; requires exclusive access. */
  void reset() {
    for (PerThread& p : perThread_) p.arena.reset();
  }

  static constexpr std::size_t allocationSize(std::size_t size) noexcept {
    return SizeClassArena::allocationSize(size);
  }

  int threads() const noexcept { return static_cast<int>(perThread_.size()); }
  std::size_t poolSize() const noexcept { return poolSize_; }

  /** Bytes currently held in pools across all threads. */
  std::size_t reservedBytes() const noexcept {
    std::size_t total = 0;
    for (const PerThread& p : perThread_) total += p.arena.reservedBytes();
    return total;
  }

 private:
  struct alignas(64) PerThread {
    SizeClassArena arena;
    explicit PerThread(std::size_t poolSize) : arena(poolSize) {}
  };

  std::size_t poolSize_;
  std::vector<PerThread> perThread_;
};

}  // namespace grapharena
