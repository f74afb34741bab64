#pragma once

// Heron triangles (rational sides and area) and their three-parameter
// bijection with (p, q, v), where p and q are the generators of the angles
// opposite u3 and u2 and v is a positive rational scale:
//
//   u1 = (p+q)(1-pq) v,  u2 = q(1+p^2) v,  u3 = p(1+q^2) v,
//   A  = pq(p+q)(1-pq) v^2,          with p, q, v > 0 and pq < 1.

#include <optional>

#include "heron/rational.hpp"

namespace heron {

struct TriangleParams {
  Rational p;  // generator of the angle opposite u3
  Rational q;  // generator of the angle opposite u2
  Rational v;  // scale

  friend bool operator==(const TriangleParams&, const TriangleParams&) = default;
};

/// Throws Error(range) unless p, q, v > 0 and pq < 1.
void validate(const TriangleParams& params);

/// Labeled triangle with rational sides and area. The constructor checks
/// positivity, the strict triangle inequality (Error(degenerate)) and
/// 16A^2 = (u1+u2+u3)(-u1+u2+u3)(u1-u2+u3)(u1+u2-u3) (Error(invalid_input)).
class HeronTriangle {
 public:
  HeronTriangle(Rational u1, Rational u2, Rational u3, Rational area);

  const Rational& u1() const noexcept { return u1_; }
  const Rational& u2() const noexcept { return u2_; }
  const Rational& u3() const noexcept { return u3_; }
  const Rational& area() const noexcept { return area_; }

  friend bool operator==(const HeronTriangle&, const HeronTriangle&) = default;

 private:
  Rational u1_, u2_, u3_, area_;
};

/// Generators of the interior angles opposite u1, u2, u3 respectively.
struct AngleGenerators {
  Rational r;
  Rational q;
  Rational p;

  friend bool operator==(const AngleGenerators&, const AngleGenerators&) = default;
};

/// Throws Error(degenerate) unless all sides are positive and strictly satisfy
/// the triangle inequality.
void require_strict_triangle(const Rational& u1, const Rational& u2, const Rational& u3);

/// 16 A^2 as the four-factor Heron product.
Rational heron_product(const Rational& u1, const Rational& u2, const Rational& u3);

HeronTriangle triangle_from_params(const TriangleParams& params);
TriangleParams params_from_triangle(const HeronTriangle& triangle);

/// Area by Heron's formula when it is rational, nullopt otherwise.
/// Throws Error(degenerate) on a triangle-inequality violation.
std::optional<Rational> area_heron(const Rational& u1, const Rational& u2, const Rational& u3);

AngleGenerators angle_generators(const HeronTriangle& triangle);

}  // namespace heron
