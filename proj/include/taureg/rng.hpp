#pragma once

#include "taureg/scalar.hpp"

#include <cstdint>
#include <random>

namespace taureg {

/// Seedable, splittable PRNG. A stream is an mt19937_64 engine seeded through
/// SplitMix64; split(i) derives the i-th child stream from the stream's seed
/// without consuming draws from the parent.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 42) : seed_(seed), engine_(mix(seed)) {}

  std::uint64_t seed() const { return seed_; }

  Rng split(std::uint64_t index) const {
    return Rng(mix(seed_ ^ mix(index + 0x9E3779B97F4A7C15ULL)));
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi] by rejection (portable across standard libraries).
  long long uniform(long long lo, long long hi) {
    if (hi <= lo) return lo;
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
    std::uint64_t x = next();
    while (limit != 0 && x >= limit) x = next();
    return lo + static_cast<long long>(span == 0 ? x : x % span);
  }

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Draws one scalar: over Q a uniform integer in [-range, range]; over F_p a
/// uniform field element (range is ignored unless it is 0, which yields 0).
template <typename Scalar>
Scalar sample_scalar(Rng& rng, long long range);

template <>
inline Rational sample_scalar<Rational>(Rng& rng, long long range) {
  if (range <= 0) return Rational(0);
  return Rational(rng.uniform(-range, range));
}

template <>
inline Fp sample_scalar<Fp>(Rng& rng, long long range) {
  if (range <= 0) return Fp(0);
  return Fp(rng.uniform(0, static_cast<long long>(Fp::modulus() - 1)));
}

}  // namespace taureg
