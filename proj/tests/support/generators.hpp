#pragma once

// Seeded random rationals for the property suites. Numerators and
// denominators stay within [1, max_component].

#include <cstdint>
#include <random>

#include "heron/rational.hpp"

namespace heron::testing {

inline constexpr long kMaxComponent = 1'000'000;

class RationalGen {
 public:
  explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// Positive rational a/b with 1 <= a, b <= max.
  Rational positive(long max = kMaxComponent) { return Rational(integer(1, max), integer(1, max)); }

  /// Rational of either sign (or zero).
  Rational any(long max = kMaxComponent) {
    long num = integer(-max, max);
    return Rational(num, integer(1, max));
  }

  /// Strictly inside (lo, hi); lo < hi required.
  Rational between(const Rational& lo, const Rational& hi, long max = kMaxComponent) {
    // lo + (hi - lo) * t with t = a/b in (0, 1).
    long b = integer(2, max);
    long a = integer(1, b - 1);
    return lo + (hi - lo) * Rational(a, b);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace heron::testing
