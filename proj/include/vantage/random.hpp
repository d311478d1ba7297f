#pragma once

#include <cstdint>
#include <random>

#include "vantage/field.hpp"
#include "vantage/rational.hpp"

namespace vantage {

/// splitmix64 finalizer; used to derive independent stream seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic generator for (seed, stream); streams do not overlap in practice.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) : engine_(mix_seed(mix_seed(seed) ^ mix_seed(~stream))) {}

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    // Rejection sampling on raw 64-bit output keeps results library-independent.
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// p/q with q in [1, max_den] and |p/q| <= bound.
  Rational rational(std::int64_t bound, std::int64_t max_den) {
    const std::int64_t q = uniform_int(1, max_den);
    const std::int64_t p = uniform_int(-bound * q, bound * q);
    return Rational(BigInt(static_cast<long>(p)), BigInt(static_cast<long>(q)));
  }

  Vec2<Rational> point2(std::int64_t bound, std::int64_t max_den) { return {rational(bound, max_den), rational(bound, max_den)}; }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace vantage
