#include "heron/triangle.hpp"

#include "heron/error.hpp"

namespace heron {

namespace {

std::string sides_text(const Rational& u1, const Rational& u2, const Rational& u3) {
  return "(" + u1.to_string() + ", " + u2.to_string() + ", " + u3.to_string() + ")";
}

// 4A / ((a+b)^2 - c^2): generator of the angle opposite side c.
Rational opposite_generator(const Rational& area, const Rational& a, const Rational& b,
                            const Rational& c) {
  Rational denom = (a + b) * (a + b) - c * c;
  if (denom.sign() <= 0) fail(ErrorCode::degenerate, "vanishing generator denominator");
  return Rational(4) * area / denom;
}

}  // namespace

void validate(const TriangleParams& params) {
  if (params.p.sign() <= 0 || params.q.sign() <= 0 || params.v.sign() <= 0)
    fail(ErrorCode::range, "triangle parameters must be positive");
  if (params.p * params.q >= Rational(1))
    fail(ErrorCode::range, "triangle parameters require p*q < 1, got p*q = " +
                               (params.p * params.q).to_string());
}

void require_strict_triangle(const Rational& u1, const Rational& u2, const Rational& u3) {
  if (u1.sign() <= 0 || u2.sign() <= 0 || u3.sign() <= 0)
    fail(ErrorCode::degenerate, "non-positive side in " + sides_text(u1, u2, u3));
  if (u1 >= u2 + u3 || u2 >= u1 + u3 || u3 >= u1 + u2)
    fail(ErrorCode::degenerate, "triangle inequality fails for " + sides_text(u1, u2, u3));
}

Rational heron_product(const Rational& u1, const Rational& u2, const Rational& u3) {
  return (u1 + u2 + u3) * (u2 + u3 - u1) * (u1 - u2 + u3) * (u1 + u2 - u3);
}

HeronTriangle::HeronTriangle(Rational u1, Rational u2, Rational u3, Rational area)
    : u1_(std::move(u1)), u2_(std::move(u2)), u3_(std::move(u3)), area_(std::move(area)) {
  require_strict_triangle(u1_, u2_, u3_);
  if (area_.sign() <= 0 || Rational(16) * area_ * area_ != heron_product(u1_, u2_, u3_))
    fail(ErrorCode::invalid_input,
         "area " + area_.to_string() + " inconsistent with sides " + sides_text(u1_, u2_, u3_));
}

HeronTriangle triangle_from_params(const TriangleParams& params) {
  validate(params);
  const auto& [p, q, v] = params;
  Rational one(1);
  Rational u1 = (p + q) * (one - p * q) * v;
  Rational u2 = q * (one + p * p) * v;
  Rational u3 = p * (one + q * q) * v;
  Rational area = p * q * u1 * v;
  return HeronTriangle(std::move(u1), std::move(u2), std::move(u3), std::move(area));
}

TriangleParams params_from_triangle(const HeronTriangle& t) {
  Rational p = opposite_generator(t.area(), t.u1(), t.u2(), t.u3());
  Rational q = opposite_generator(t.area(), t.u1(), t.u3(), t.u2());
  Rational v = t.u3() / (p * (Rational(1) + q * q));
  return {std::move(p), std::move(q), std::move(v)};
}

std::optional<Rational> area_heron(const Rational& u1, const Rational& u2, const Rational& u3) {
  require_strict_triangle(u1, u2, u3);
  auto root = sqrt_exact(heron_product(u1, u2, u3));
  if (!root) return std::nullopt;
  return *root / Rational(4);
}

AngleGenerators angle_generators(const HeronTriangle& t) {
  return {opposite_generator(t.area(), t.u2(), t.u3(), t.u1()),
          opposite_generator(t.area(), t.u1(), t.u3(), t.u2()),
          opposite_generator(t.area(), t.u1(), t.u2(), t.u3())};
}

}  // namespace heron
