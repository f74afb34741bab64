#include "heron/quadratic.hpp"

#include "heron/error.hpp"

namespace heron {

bool satisfies_quadratic(const Rational& a, const Rational& x, const Rational& y, const Rational& z) {
  return x * x + Rational(2) * a * x * y + y * y == z * z;
}

bool satisfies_unit_relation(const Rational& epsilon, const Rational& m, const Rational& n) {
  return m * m + epsilon * m * n + n * n == Rational(1);
}

QuadraticTriple::QuadraticTriple(Rational a, Rational x, Rational y, Rational z)
    : a_(std::move(a)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
  if (!satisfies_quadratic(a_, x_, y_, z_))
    fail(ErrorCode::invalid_input, "(" + x_.to_string() + ", " + y_.to_string() + ", " +
                                       z_.to_string() + ") violates x^2+2axy+y^2=z^2 for a=" +
                                       a_.to_string());
}

UnitRelationPoint::UnitRelationPoint(Rational epsilon, Rational m, Rational n)
    : epsilon_(std::move(epsilon)), m_(std::move(m)), n_(std::move(n)) {
  if (!satisfies_unit_relation(epsilon_, m_, n_))
    fail(ErrorCode::invalid_input, "(" + m_.to_string() + ", " + n_.to_string() +
                                       ") violates m^2+eps*m*n+n^2=1 for eps=" +
                                       epsilon_.to_string());
}

QuadraticTriple parametrize(const Rational& a, const ParamPair& params) {
  const Rational& lambda = params.lambda;
  const Rational& sigma = params.sigma;
  Rational pole = Rational(1) + a * sigma;
  if (pole.is_zero())
    fail(ErrorCode::pole, "pole 1 + a*sigma = 0 at a=" + a.to_string() + ", sigma=" + sigma.to_string());
  Rational scale = lambda / pole;
  Rational s2 = sigma * sigma;
  return QuadraticTriple(a, scale * (Rational(1) - s2), Rational(2) * lambda * sigma,
                         scale * (Rational(1) + Rational(2) * a * sigma + s2));
}

ParamPair recover(const QuadraticTriple& triple) {
  Rational sum = triple.x() + triple.z();
  if (sum.is_zero()) fail(ErrorCode::degenerate, "x + z = 0 has no parameter preimage");
  ParamPair params{sum / Rational(2), triple.y() / sum};
  // For a = +-1 the relation factors into lines; the line x + z = -a*y maps to the pole.
  if ((Rational(1) + triple.a() * params.sigma).is_zero())
    fail(ErrorCode::degenerate, "triple lies on the pole line 1 + a*sigma = 0");
  return params;
}

UnitRelationPoint unit_relation_point(const Rational& epsilon, const Rational& sigma) {
  Rational denom = Rational(1) + epsilon * sigma + sigma * sigma;
  if (denom.is_zero())
    fail(ErrorCode::pole, "pole 1 + eps*sigma + sigma^2 = 0 at eps=" + epsilon.to_string() +
                              ", sigma=" + sigma.to_string());
  Rational m = (Rational(1) - sigma * sigma) / denom;
  Rational n = sigma * (Rational(2) + epsilon * sigma) / denom;
  return UnitRelationPoint(epsilon, std::move(m), std::move(n));
}

Rational unit_relation_sigma(const UnitRelationPoint& point) {
  Rational shifted = Rational(1) + point.m();
  if (shifted.is_zero()) fail(ErrorCode::degenerate, "m = -1 has no sigma preimage");
  Rational sigma = point.n() / shifted;
  if ((Rational(1) + point.epsilon() * sigma + sigma * sigma).is_zero())
    fail(ErrorCode::degenerate, "point maps onto the pole 1 + eps*sigma + sigma^2 = 0");
  return sigma;
}

}  // namespace heron
