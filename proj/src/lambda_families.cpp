#include "heron/lambda_families.hpp"

#include "heron/error.hpp"
#include "heron/quadratic.hpp"

namespace heron {

std::string_view to_string(LambdaFamily family) noexcept {
  return family == LambdaFamily::type_i ? "I" : "II";
}

LambdaSolution type1_from_sigma(const Rational& sigma) {
  if (sigma <= Rational(0) || sigma >= Rational(1))
    fail(ErrorCode::range, "type I sigma must lie in (0, 1), got " + sigma.to_string());
  UnitRelationPoint point = unit_relation_point(Rational(1), sigma);
  Rational lambda = point.m() / point.n();
  return {point.m(), point.n(), std::move(lambda), LambdaFamily::type_i, sigma};
}

Rational sigma_from_type1(const Rational& m, const Rational& n) {
  if (!satisfies_unit_relation(Rational(1), m, n))
    fail(ErrorCode::not_in_family,
         "(" + m.to_string() + ", " + n.to_string() + ") violates m^2+mn+n^2=1");
  if (m == Rational(-1)) fail(ErrorCode::degenerate, "m = -1 has no type I sigma");
  return n / (Rational(1) + m);
}

LambdaSolution type2_from_sigma(const Rational& sigma) {
  if (sigma <= Rational(1, 2) || sigma >= Rational(1))
    fail(ErrorCode::range, "type II sigma must lie in (1/2, 1), got " + sigma.to_string());
  // The pair (m, 1/n) lies on the unit relation with eps = -1.
  UnitRelationPoint point = unit_relation_point(Rational(-1), sigma);
  Rational n = point.n().reciprocal();
  Rational lambda = point.m() * n;
  return {point.m(), std::move(n), std::move(lambda), LambdaFamily::type_ii, sigma};
}

Rational sigma_from_type2(const Rational& m, const Rational& n) {
  if (n.is_zero()) fail(ErrorCode::degenerate, "n = 0 has no type II sigma");
  Rational inv_n = n.reciprocal();
  if (!satisfies_unit_relation(Rational(-1), inv_n, m))
    fail(ErrorCode::not_in_family,
         "(" + m.to_string() + ", " + n.to_string() + ") violates (1/n)^2-m/n+m^2=1");
  if (m == Rational(-1)) fail(ErrorCode::degenerate, "m = -1 has no type II sigma");
  return (n * (Rational(1) + m)).reciprocal();
}

bool check_lambda_relation(const Rational& m, const Rational& n, const Rational& lambda) {
  if (n.is_zero()) fail(ErrorCode::degenerate, "lambda relation undefined at n = 0");
  if (m * m == Rational(1)) fail(ErrorCode::degenerate, "lambda relation undefined at m^2 = 1");
  return lambda * lambda * n * (Rational(1) - m * m) == m * (Rational(1) - n * n);
}

}  // namespace heron
