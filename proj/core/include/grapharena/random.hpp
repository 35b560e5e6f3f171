#pragma once
#include <cstdint>

namespace grapharena {

/**
 * SplitMix64 pseudo-random generator (Steele, Lea, Flood; as used in
 * java.util.SplittableRandom). Chosen because it is seedable, splittable,
 * and fully specified by a handful of constants, so any sequence drawn from
 * it can be reproduced exactly from its seed alone.
 */
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}

  constexpr std::uint64_t operator()() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /** Derive an independent generator; both streams stay reproducible. */
  constexpr SplitMix64 split() noexcept {
    return SplitMix64((*this)() ^ 0x6a09e667f3bcc909ull);
  }

  /** Uniform value in [0, bound) via Lemire's multiply-shift rejection. */
  std::uint64_t below(std::uint64_t bound) noexcept {
    if (bound == 0) return 0;
    while (true) {
      std::uint64_t x = (*this)();
      __uint128_t m = static_cast<__uint128_t>(x) * bound;
      auto lo = static_cast<std::uint64_t>(m);
      if (lo >= bound || lo >= std::uint64_t(-bound) % bound) {
        return static_cast<std::uint64_t>(m >> 64);
      }
    }
  }

  /** Uniform double in [0, 1). */
  double uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  static constexpr std::uint64_t min() noexcept { return 0; }
  static constexpr std::uint64_t max() noexcept { return ~std::uint64_t(0); }

 private:
  std::uint64_t state_;
};

}  // namespace grapharena
