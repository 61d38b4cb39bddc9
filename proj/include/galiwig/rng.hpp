#pragma once

#include <cstdint>
#include <random>

namespace galiwig {

/// Seeded uniform generator with a fixed bit-to-double mapping, so that
/// identical seeds give identical streams independent of the standard
/// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Uniform over [lo, hi) with a random sign.
  double signed_uniform(double lo, double hi) {
    const double mag = uniform(lo, hi);
    return (engine_() & 1u) ? mag : -mag;
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace galiwig
