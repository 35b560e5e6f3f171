#pragma once
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <type_traits>

namespace grapharena {

/** Ceiling division for non-negative integers. */
template <class T>
constexpr T ceilDiv(T x, T y) noexcept {
  return (x + y - 1) / y;
}

/** Test bit u of a packed 64-bit word array. */
inline bool getBit(const std::uint64_t* bits, std::size_t u) noexcept {
  return (bits[u >> 6] >> (u & 63)) & 1u;
}

/** Set bit u of a packed 64-bit word array (no synchronization). */
inline void setBit(std::uint64_t* bits, std::size_t u) noexcept {
  bits[u >> 6] |= std::uint64_t(1) << (u & 63);
}

/**
 * Set bit u atomically, so that distinct bits of the same word may be set
 * concurrently from different threads.
 */
inline void setBitAtomic(std::uint64_t* bits, std::size_t u) noexcept {
  std::atomic_ref<std::uint64_t> word(bits[u >> 6]);
  word.fetch_or(std::uint64_t(1) << (u & 63), std::memory_order_relaxed);
}

/**
 * Resize an array of trivially copyable values, preserving existing data.
 * When the reserved amount is unchanged, the array is reused and only the
 * newly exposed slots [n0, n1) are zeroed. Otherwise a fresh array of r1
 * slots is allocated, min(n0, n1) values are copied over, the remainder up
 * to n1 is zeroed, and the old array is freed.
 * @param ptr current array (may be null when n0 == r0 == 0)
 * @param n0 old visible size
 * @param r0 old reserved size
 * @param n1 new visible size
 * @param r1 new reserved size
 * @returns array with r1 reserved slots
 */
template <class T>
T* reallocate(T* ptr, std::size_t n0, std::size_t r0, std::size_t n1, std::size_t r1) {
  static_assert(std::is_trivially_copyable_v<T>);
  if (r1 == r0) {
    #pragma omp parallel for schedule(static)
    for (std::size_t i = n0; i < n1; ++i) ptr[i] = T();
    return ptr;
  }
  T* tmp = new T[r1];
  std::size_t k = n0 < n1 ? n0 : n1;
  #pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < k; ++i) tmp[i] = ptr[i];
  #pragma omp parallel for schedule(static)
  for (std::size_t i = k; i < n1; ++i) tmp[i] = T();
  delete[] ptr;
  return tmp;
}

/**
 * Exclusive prefix sum of n counters into dst; returns the total.
 * dst and src may not overlap.
 */
template <class TD, class TS>
TD exclusiveScan(TD* dst, const TS* src, std::size_t n) noexcept {
  TD sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = sum;
    sum += src[i];
  }
  return sum;
}

}  // namespace grapharena
