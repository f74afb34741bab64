#pragma once

// Test-only oracles. None of these call into the parametrization code;
// they restate the geometry from first principles.

#include <cstdint>
#include <optional>

#include "heron/rational.hpp"

namespace heron::testing {

/// Integer Heron triangle test via 128-bit arithmetic and a floating seed
/// refined by integer correction. Returns 4A when the area is rational.
inline std::optional<std::int64_t> integer_four_area(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a <= 0 || b <= 0 || c <= 0 || a >= b + c || b >= a + c || c >= a + b) return std::nullopt;
  __int128 product = static_cast<__int128>(a + b + c) * (b + c - a) * (a - b + c) * (a + b - c);
  auto root = static_cast<std::int64_t>(__builtin_sqrtl(static_cast<long double>(product)));
  while (static_cast<__int128>(root) * root > product) --root;
  while (static_cast<__int128>(root + 1) * (root + 1) <= product) ++root;
  if (static_cast<__int128>(root) * root != product) return std::nullopt;
  return root;
}

/// Law of cosines: cosine of the angle opposite side c.
inline Rational cos_opposite(const Rational& a, const Rational& b, const Rational& c) {
  return (a * a + b * b - c * c) / (Rational(2) * a * b);
}

/// Half-angle tangent from sine and cosine, tan(x/2) = (1 - cos)/sin.
/// Uses a different identity from the library's sin/(1+cos).
inline Rational half_angle_tangent(const Rational& sin, const Rational& cos) {
  return (Rational(1) - cos) / sin;
}

}  // namespace heron::testing
