#include <doctest.h>

#include "heron/angle.hpp"
#include "support/errors.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace heron;
using heron::testing::code_of;

TEST_CASE("sin and cos from generator") {
  CHECK(sincos_from_generator(HeronAngle(Rational(1))) == SinCos{Rational(1), Rational(0)});
  CHECK(sincos_from_generator(HeronAngle(Rational(1, 3))) == SinCos{Rational(3, 5), Rational(4, 5)});
  CHECK(sincos_from_generator(HeronAngle(Rational(2))) == SinCos{Rational(4, 5), Rational(-3, 5)});
  CHECK(code_of([] { HeronAngle(Rational(0)); }) == ErrorCode::range);
  CHECK(code_of([] { HeronAngle(Rational(-1, 2)); }) == ErrorCode::range);
}

TEST_CASE("generator from sin and cos") {
  CHECK(generator_from_sincos({Rational(1), Rational(0)}).generator() == Rational(1));
  CHECK(generator_from_sincos({Rational(3, 5), Rational(4, 5)}).generator() == Rational(1, 3));
  CHECK(generator_from_sincos({Rational(4, 5), Rational(-3, 5)}).generator() == Rational(2));

  CHECK(code_of([] { generator_from_sincos({Rational(0), Rational(-1)}); }) == ErrorCode::out_of_domain);
  CHECK(code_of([] { generator_from_sincos({Rational(0), Rational(1)}); }) == ErrorCode::out_of_domain);
  CHECK(code_of([] { generator_from_sincos({Rational(-3, 5), Rational(4, 5)}); }) == ErrorCode::out_of_domain);
  CHECK(code_of([] { generator_from_sincos({Rational(1, 2), Rational(1, 2)}); }) == ErrorCode::invalid_input);
}

TEST_CASE("compare follows the angle") {
  CHECK(compare(HeronAngle(Rational(1, 3)), HeronAngle(Rational(1))) == std::strong_ordering::less);
  CHECK(compare(HeronAngle(Rational(2)), HeronAngle(Rational(1))) == std::strong_ordering::greater);
  CHECK(compare(HeronAngle(Rational(1, 2)), HeronAngle(Rational(1, 2))) == std::strong_ordering::equal);
}

TEST_CASE("sum of angles") {
  CHECK(sum_generator(HeronAngle(Rational(1, 3)), HeronAngle(Rational(1, 2))).generator() == Rational(1));
  CHECK(sum_generator(HeronAngle(Rational(1, 4)), HeronAngle(Rational(2))).generator() == Rational(9, 2));
  CHECK(code_of([] { sum_generator(HeronAngle(Rational(2)), HeronAngle(Rational(1, 2))); }) == ErrorCode::range);
  CHECK(code_of([] { sum_generator(HeronAngle(Rational(3)), HeronAngle(Rational(1))); }) == ErrorCode::range);

  // Cross-check 1/4 + 2 through the addition formulas for sin and cos.
  SinCos a = sincos_from_generator(HeronAngle(Rational(1, 4)));
  SinCos b = sincos_from_generator(HeronAngle(Rational(2)));
  Rational sin_sum = a.sin * b.cos + a.cos * b.sin;
  Rational cos_sum = a.cos * b.cos - a.sin * b.sin;
  CHECK(heron::testing::half_angle_tangent(sin_sum, cos_sum) == Rational(9, 2));
}

TEST_CASE("property: generator round trip") {
  heron::testing::RationalGen gen(4242);
  for (int i = 0; i < 1000; ++i) {
    HeronAngle angle(gen.positive());
    SinCos sc = sincos_from_generator(angle);
    CHECK(sc.sin.sign() > 0);
    CHECK(sc.sin * sc.sin + sc.cos * sc.cos == Rational(1));
    CHECK(generator_from_sincos(sc) == angle);
    CHECK(heron::testing::half_angle_tangent(sc.sin, sc.cos) == angle.generator());

    // cos decreases strictly on (0, pi).
    HeronAngle other(gen.positive());
    SinCos sc_other = sincos_from_generator(other);
    CHECK((angle <=> other) == (sc_other.cos <=> sc.cos));
  }
}
