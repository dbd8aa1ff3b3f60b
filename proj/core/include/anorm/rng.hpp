#pragma once

#include <complex>
#include <cstdint>

namespace anorm {

/// Deterministic random stream (splitmix64). Fully specified arithmetic, so a
/// given seed produces identical values on every platform; this is what makes
/// campaign reports byte-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (second value cached).
  double normal();

  /// Standard complex normal: E|z|^2 = 1.
  std::complex<double> cnormal() {
    const double s = 0.7071067811865476;  // 1/sqrt(2)
    return {normal() * s, normal() * s};
  }

  /// Derive an independent stream seed from this seed and a salt without
  /// advancing this stream.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t salt);

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace anorm
