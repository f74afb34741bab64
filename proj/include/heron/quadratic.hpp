#pragma once

// Rational parametrization of the conic x^2 + 2axy + y^2 = z^2 by a scale
// lambda and a slope sigma, and of its normalized form
// m^2 + eps*m*n + n^2 = 1 by sigma alone. Both maps have exact inverses.

#include "heron/rational.hpp"

namespace heron {

struct ParamPair {
  Rational lambda;
  Rational sigma;

  friend bool operator==(const ParamPair&, const ParamPair&) = default;
};

/// A point on x^2 + 2axy + y^2 = z^2. The relation is checked on construction.
class QuadraticTriple {
 public:
  QuadraticTriple(Rational a, Rational x, Rational y, Rational z);

  const Rational& a() const noexcept { return a_; }
  const Rational& x() const noexcept { return x_; }
  const Rational& y() const noexcept { return y_; }
  const Rational& z() const noexcept { return z_; }

  friend bool operator==(const QuadraticTriple&, const QuadraticTriple&) = default;

 private:
  Rational a_, x_, y_, z_;
};

/// A point on m^2 + eps*m*n + n^2 = 1. The relation is checked on construction.
class UnitRelationPoint {
 public:
  UnitRelationPoint(Rational epsilon, Rational m, Rational n);

  const Rational& epsilon() const noexcept { return epsilon_; }
  const Rational& m() const noexcept { return m_; }
  const Rational& n() const noexcept { return n_; }

  friend bool operator==(const UnitRelationPoint&, const UnitRelationPoint&) = default;

 private:
  Rational epsilon_, m_, n_;
};

bool satisfies_quadratic(const Rational& a, const Rational& x, const Rational& y, const Rational& z);
bool satisfies_unit_relation(const Rational& epsilon, const Rational& m, const Rational& n);

/// x = lambda(1-s^2)/(1+as), y = 2 lambda s, z = lambda(1+2as+s^2)/(1+as).
/// Throws Error(pole) when 1 + a*sigma = 0.
QuadraticTriple parametrize(const Rational& a, const ParamPair& params);

/// lambda = (x+z)/2, sigma = y/(x+z). Throws Error(degenerate) when x + z = 0
/// or when the triple sits on the pole line and has no preimage.
ParamPair recover(const QuadraticTriple& triple);

/// m = (1-s^2)/(1+eps s+s^2), n = s(2+eps s)/(1+eps s+s^2).
/// Throws Error(pole) when the common denominator vanishes.
UnitRelationPoint unit_relation_point(const Rational& epsilon, const Rational& sigma);

/// sigma = n/(1+m). Throws Error(degenerate) when m = -1 or the point has no
/// preimage under unit_relation_point.
Rational unit_relation_sigma(const UnitRelationPoint& point);

}  // namespace heron
