#pragma once

#include <cstdint>
#include <random>

namespace mgrrt {

/**
 * @brief Seeded random source with a fully specified uniform mapping.
 *
 * mt19937_64 output is pinned by the standard; the [0,1) mapping below uses
 * the top 53 bits directly instead of std::uniform_real_distribution, whose
 * algorithm is implementation-defined. Same seed, same sequence, everywhere
 * this library builds.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform double in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::uint64_t next_u64() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace mgrrt
