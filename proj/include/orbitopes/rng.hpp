#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace orbitopes {

/// Deterministic random stream. Gaussians use an explicit Box-Muller on
/// top of the raw mt19937_64 output so that identical seeds give
/// identical samples on every platform (std::normal_distribution does
/// not guarantee that).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() {
    // 53 random bits in [0, 1).
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double gaussian() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace orbitopes
