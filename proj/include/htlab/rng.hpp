// Seeded random numbers with portable output: distributions are derived
// from raw mt19937_64 words only, never from std::*_distribution, so the
// same seed yields the same stream on every platform.

#ifndef HTLAB_RNG_HPP
#define HTLAB_RNG_HPP

#include <cstdint>
#include <random>

#include "htlab/trigpoly.hpp"

namespace htlab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /** Uniform in [0, 1). */
  double uniform() { return (eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /** Uniform integer in [lo, hi] inclusive. */
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(uniform() * static_cast<double>(hi - lo + 1));
  }

  /** Complex with both parts uniform in [-1, 1]. */
  cplx box() { return cplx(uniform(-1.0, 1.0), uniform(-1.0, 1.0)); }

  std::uint64_t word() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace htlab

#endif  // HTLAB_RNG_HPP
