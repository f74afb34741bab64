#include <doctest.h>

#include "heron/parallelogram.hpp"
#include "support/errors.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace heron;
using heron::testing::code_of;

namespace {

RationalParallelogram shape(long a, long b, long c, long d) {
  return RationalParallelogram(Rational(a), Rational(b), Rational(c), Rational(d));
}

HeronParallelogram heron_shape(long a, long b, long c, long d, long area) {
  return HeronParallelogram(shape(a, b, c, d), Rational(area));
}

}  // namespace

TEST_CASE("forward map") {
  CHECK(pgram_from_params({Rational(3, 7), Rational(5, 7), Rational(49, 2)}) == shape(17, 28, 25, 39));
  CHECK(pgram_from_params({Rational(5, 7), Rational(7, 8), Rational(56)}) == shape(21, 89, 82, 100));
  CHECK(pgram_from_params({Rational(1, 2), Rational(1, 2), Rational(4)}) == shape(3, 4, 5, 5));
  CHECK(code_of([] { pgram_from_params({Rational(1), Rational(1, 2), Rational(1)}); }) == ErrorCode::range);
  CHECK(code_of([] { pgram_from_params({Rational(1, 2), Rational(0), Rational(1)}); }) == ErrorCode::range);
  CHECK(code_of([] { pgram_from_params({Rational(1, 2), Rational(1, 2), Rational(0)}); }) == ErrorCode::range);
}

TEST_CASE("recovery") {
  CHECK(params_from_pgram(shape(17, 28, 25, 39)) == ParallelogramParams{Rational(3, 7), Rational(5, 7), Rational(49, 2)});
  CHECK(params_from_pgram(shape(21, 89, 82, 100)) == ParallelogramParams{Rational(5, 7), Rational(7, 8), Rational(56)});
  CHECK(params_from_pgram(shape(3, 4, 5, 5)) == ParallelogramParams{Rational(1, 2), Rational(1, 2), Rational(4)});
}

TEST_CASE("shape validation") {
  CHECK(code_of([] { shape(3, 4, 5, 6); }) == ErrorCode::invalid_input);  // law fails
  CHECK(code_of([] { shape(0, 4, 5, 5); }) == ErrorCode::invalid_input);
  // Flat: 2(1 + 4) = 1 + 9, |9 - 1| = 8 = 4*1*2.
  CHECK(code_of([] { shape(1, 2, 1, 3); }) == ErrorCode::degenerate);
  CHECK(code_of([] { heron_shape(17, 28, 25, 39, 421); }) == ErrorCode::invalid_input);
}

TEST_CASE("sin and cos of phi") {
  CHECK(cos_sin_phi(shape(17, 28, 25, 39), Rational(420)) == SinCos{Rational(15, 17), Rational(8, 17)});
  CHECK(cos_sin_phi(shape(17, 28, 25, 39)) == SinCos{Rational(15, 17), Rational(8, 17)});
  CHECK(cos_sin_phi(shape(3, 4, 5, 5)) == SinCos{Rational(1), Rational(0)});
  CHECK(cos_sin_phi(shape(21, 89, 82, 100), Rational(1680)) == SinCos{Rational(80, 89), Rational(39, 89)});
  CHECK(code_of([] { cos_sin_phi(shape(17, 28, 25, 39), Rational(400)); }) == ErrorCode::invalid_input);

  // cos phi by the law of cosines agrees with the diagonal form.
  CHECK(shape(21, 89, 82, 100).cos_phi() == heron::testing::cos_opposite(Rational(21), Rational(89), Rational(82)));

  // A rational parallelogram that is not Heron: lambda^2 = 5/2 at m = 1/2, n = 1/4.
  RationalParallelogram plain = pgram_from_params({Rational(1, 2), Rational(1, 4), Rational(8)});
  CHECK(code_of([&] { cos_sin_phi(plain); }) == ErrorCode::not_heron);
}

TEST_CASE("area from parameters") {
  CHECK(area_from_params({Rational(3, 7), Rational(5, 7), Rational(49, 2)}, Rational(3, 5)) == Rational(420));
  CHECK(area_from_params({Rational(5, 7), Rational(7, 8), Rational(56)}, Rational(5, 8)) == Rational(1680));
  CHECK(area_from_params({Rational(1, 2), Rational(1, 2), Rational(4)}, Rational(1)) == Rational(12));
  CHECK(code_of([] { area_from_params({Rational(3, 7), Rational(5, 7), Rational(1)}, Rational(1, 2)); }) ==
        ErrorCode::not_heron);
  CHECK(code_of([] { area_from_params({Rational(1, 2), Rational(1, 2), Rational(4)}, Rational(-1)); }) ==
        ErrorCode::not_heron);
}

TEST_CASE("Heron parallelograms from sigma") {
  HeronParallelogram a = heron_pgram_from_sigma(LambdaFamily::type_i, Rational(1, 2), Rational(49, 2));
  CHECK(a == heron_shape(17, 28, 25, 39, 420));
  HeronParallelogram b = heron_pgram_from_sigma(LambdaFamily::type_ii, Rational(2, 3), Rational(56));
  CHECK(b == heron_shape(21, 89, 82, 100, 1680));

  HeronParallelogram c = heron_pgram_from_sigma(LambdaFamily::type_i, Rational(1, 3), Rational(13));
  CHECK(c.shape() == RationalParallelogram(Rational(113, 13), Rational(15), Rational(238, 13), Rational(212, 13)));
  CHECK(c.area() == Rational(1680, 13));

  CHECK(code_of([] { heron_pgram_from_sigma(LambdaFamily::type_i, Rational(1), Rational(1)); }) == ErrorCode::range);
  CHECK(code_of([] { heron_pgram_from_sigma(LambdaFamily::type_ii, Rational(1, 2), Rational(1)); }) ==
        ErrorCode::range);
  CHECK(code_of([] { heron_pgram_from_sigma(LambdaFamily::type_i, Rational(1, 2), Rational(0)); }) ==
        ErrorCode::range);
}

TEST_CASE("classification") {
  PgramClassification a = classify(heron_shape(17, 28, 25, 39, 420));
  CHECK(a.family == PgramFamily::type_i);
  CHECK(a.sigma == Rational(1, 2));
  CHECK(a.lambda == Rational(3, 5));
  // Side-only expressions of m/n and mn.
  CHECK(a.lambda == Rational(2 * 28 + 25 - 39, 2 * 28 - 25 + 39));

  PgramClassification b = classify(heron_shape(21, 89, 82, 100, 1680));
  CHECK(b.family == PgramFamily::type_ii);
  CHECK(b.sigma == Rational(2, 3));
  CHECK(b.lambda == Rational(5, 8));
  CHECK(b.lambda == Rational(82 + 100 - 2 * 21, 82 + 100 + 2 * 21));

  PgramClassification rect = classify(heron_shape(3, 4, 5, 5, 12));
  CHECK(rect.family == PgramFamily::type_i);
  CHECK(rect.sigma == Rational(1, 3));
  CHECK(rect.lambda == Rational(1));

  // Found by the integer census: neither lambda = m/n nor lambda = mn.
  PgramClassification other = classify(heron_shape(5, 5, 6, 8, 24));
  CHECK(other.family == PgramFamily::other);
  CHECK_FALSE(other.sigma.has_value());
  CHECK(check_lambda_relation(other.m, other.n, other.lambda));
}

TEST_CASE("median triangle") {
  MedianTriangle a = median_triangle(heron_shape(17, 28, 25, 39, 420));
  CHECK(a.triangle == HeronTriangle(Rational(17), Rational(28), Rational(25), Rational(210)));
  CHECK(a.median == Rational(39, 2));
  CHECK(area_heron(Rational(17), Rational(28), Rational(25)) == Rational(210));

  MedianTriangle b = median_triangle(heron_shape(3, 4, 5, 5, 12));
  CHECK(b.triangle == HeronTriangle(Rational(3), Rational(4), Rational(5), Rational(6)));
  CHECK(b.median == Rational(5, 2));

  MedianTriangle c = median_triangle(heron_shape(21, 89, 82, 100, 1680));
  CHECK(c.triangle.area() == Rational(840));
  CHECK(c.median == Rational(50));

  // Apollonius: median^2 = (2 u1^2 + 2 u2^2 - u3^2) / 4.
  CHECK(c.median * c.median == (Rational(2 * 21 * 21 + 2 * 89 * 89) - Rational(82 * 82)) / Rational(4));
}

TEST_CASE("property: bijection and structure") {
  heron::testing::RationalGen gen(8128);
  const Rational zero(0), one(1);
  for (int i = 0; i < 1000; ++i) {
    ParallelogramParams pp{gen.between(zero, one), gen.between(zero, one), gen.positive()};
    RationalParallelogram pg = pgram_from_params(pp);
    CHECK(params_from_pgram(pg) == pp);
    CHECK(pgram_from_params(params_from_pgram(pg)) == pg);
    CHECK(Rational(2) * (pg.u1() * pg.u1() + pg.u2() * pg.u2()) == pg.u3() * pg.u3() + pg.u4() * pg.u4());

    ParallelogramParams swapped = params_from_pgram(RationalParallelogram(pg.u1(), pg.u2(), pg.u4(), pg.u3()));
    CHECK(swapped == ParallelogramParams{pp.n, pp.m, pp.u});

    const auto& [m, n, u] = pp;
    CHECK(pg.cos_phi() == (n - m) * (one + m * n) / ((n + m) * (one - m * n)));
    CHECK(pg.cos_phi() == heron::testing::cos_opposite(pg.u1(), pg.u2(), pg.u3()));
    CHECK((pg.u4() >= pg.u3()) == (n >= m));
  }
}

TEST_CASE("property: family parallelograms") {
  heron::testing::RationalGen gen(496);
  const Rational zero(0), half(1, 2), one(1);
  for (int i = 0; i < 500; ++i) {
    const bool first = i % 2 == 0;
    Rational sigma = first ? gen.between(zero, one) : gen.between(half, one);
    Rational u = gen.positive();
    HeronParallelogram hp = heron_pgram_from_sigma(first ? LambdaFamily::type_i : LambdaFamily::type_ii, sigma, u);
    LambdaSolution sol = first ? type1_from_sigma(sigma) : type2_from_sigma(sigma);
    const Rational& m = sol.m;
    const Rational& n = sol.n;

    SinCos sc = cos_sin_phi(hp.shape(), hp.area());
    CHECK(one + sc.cos == Rational(2) * n * (one - m * m) / ((n + m) * (one - m * n)));
    CHECK(sc.sin / (one + sc.cos) == sol.lambda);
    CHECK(sc.sin == Rational(2) * n * (one - m * m) * sol.lambda / ((n + m) * (one - m * n)));

    PgramClassification cls = classify(hp);
    CHECK(cls.family == (first ? PgramFamily::type_i : PgramFamily::type_ii));
    CHECK(cls.sigma == sigma);
    CHECK(cls.lambda == sol.lambda);

    MedianTriangle mt = median_triangle(hp);
    CHECK(area_heron(mt.triangle.u1(), mt.triangle.u2(), mt.triangle.u3()) == mt.triangle.area());
  }
}
