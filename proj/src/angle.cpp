#include "heron/angle.hpp"

#include "heron/error.hpp"

namespace heron {

HeronAngle::HeronAngle(Rational generator) : generator_(std::move(generator)) {
  if (generator_.sign() <= 0)
    fail(ErrorCode::range, "angle generator must be positive, got " + generator_.to_string());
}

SinCos sincos_from_generator(const HeronAngle& angle) {
  const Rational& m = angle.generator();
  Rational m2 = m * m;
  Rational denom = Rational(1) + m2;
  return {Rational(2) * m / denom, (Rational(1) - m2) / denom};
}

HeronAngle generator_from_sincos(const SinCos& sc) {
  if (sc.cos == Rational(-1)) fail(ErrorCode::out_of_domain, "straight angle (cos = -1)");
  if (sc.sin.sign() <= 0)
    fail(ErrorCode::out_of_domain, "sin must be positive for an angle in (0, pi), got " +
                                       sc.sin.to_string());
  if (sc.sin * sc.sin + sc.cos * sc.cos != Rational(1))
    fail(ErrorCode::invalid_input, "sin^2 + cos^2 != 1 for (" + sc.sin.to_string() + ", " +
                                       sc.cos.to_string() + ")");
  return HeronAngle(sc.sin / (Rational(1) + sc.cos));
}

HeronAngle sum_generator(const HeronAngle& a, const HeronAngle& b) {
  Rational product = a.generator() * b.generator();
  if (product >= Rational(1))
    fail(ErrorCode::range, "angle sum reaches pi (m1*m2 = " + product.to_string() + ")");
  return HeronAngle((a.generator() + b.generator()) / (Rational(1) - product));
}

}  // namespace heron
