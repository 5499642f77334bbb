#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "riesz/numeric/rational.hpp"

namespace riesz {

/// Seeded random stream. Bounded draws avoid std distributions so that the
/// same seed produces the same values on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent sub-stream derived from (seed, name).
  static Rng stream(std::uint64_t seed, std::string_view name);
  Rng substream(std::string_view name) { return stream(next(), name); }

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return (next() >> 63) != 0; }
  bool chance(long num, long den) { return uniform(0, den - 1) < num; }
  /// p/q with |p| <= num_max and 1 <= q <= den_max.
  num::Rational rational(long num_max, long den_max);
  /// Nonnegative variant.
  num::Rational nonneg_rational(long num_max, long den_max);

 private:
  std::mt19937_64 engine_;
};

}  // namespace riesz
