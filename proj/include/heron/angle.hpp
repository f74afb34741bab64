#pragma once

// Heron angles: angles in (0, pi) with rational sine and cosine, stored by
// their half-angle tangent ("generator") m = sin/(1+cos). Rational m and
// Heron angles are in one-to-one correspondence.

#include <compare>

#include "heron/rational.hpp"

namespace heron {

struct SinCos {
  Rational sin;
  Rational cos;

  friend bool operator==(const SinCos&, const SinCos&) = default;
};

class HeronAngle {
 public:
  /// Throws Error(range) unless generator > 0.
  explicit HeronAngle(Rational generator);

  const Rational& generator() const noexcept { return generator_; }

  /// Generators are increasing in the angle, so this is angle order.
  friend std::strong_ordering operator<=>(const HeronAngle& a, const HeronAngle& b) {
    return a.generator_ <=> b.generator_;
  }
  friend bool operator==(const HeronAngle&, const HeronAngle&) = default;

 private:
  Rational generator_;
};

/// cos = (1-m^2)/(1+m^2), sin = 2m/(1+m^2).
SinCos sincos_from_generator(const HeronAngle& angle);

/// m = sin/(1+cos). Throws Error(out_of_domain) when sin <= 0 or cos = -1,
/// Error(invalid_input) when sin^2 + cos^2 != 1.
HeronAngle generator_from_sincos(const SinCos& sc);

inline std::strong_ordering compare(const HeronAngle& a, const HeronAngle& b) { return a <=> b; }

/// Generator of a + b, i.e. (m1+m2)/(1-m1 m2). Throws Error(range) when the
/// sum reaches or exceeds pi (m1 m2 >= 1).
HeronAngle sum_generator(const HeronAngle& a, const HeronAngle& b);

}  // namespace heron
