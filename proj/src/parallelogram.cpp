#include "heron/parallelogram.hpp"

#include "heron/error.hpp"

namespace heron {

namespace {

std::string shape_text(const Rational& u1, const Rational& u2, const Rational& u3, const Rational& u4) {
  return "(" + u1.to_string() + ", " + u2.to_string() + ", " + u3.to_string() + ", " +
         u4.to_string() + ")";
}

}  // namespace

void validate(const ParallelogramParams& params) {
  const Rational zero(0), one(1);
  if (params.m <= zero || params.m >= one)
    fail(ErrorCode::range, "m must lie in (0, 1), got " + params.m.to_string());
  if (params.n <= zero || params.n >= one)
    fail(ErrorCode::range, "n must lie in (0, 1), got " + params.n.to_string());
  if (params.u <= zero) fail(ErrorCode::range, "u must be positive, got " + params.u.to_string());
}

RationalParallelogram::RationalParallelogram(Rational u1, Rational u2, Rational u3, Rational u4)
    : u1_(std::move(u1)), u2_(std::move(u2)), u3_(std::move(u3)), u4_(std::move(u4)) {
  if (u1_.sign() <= 0 || u2_.sign() <= 0 || u3_.sign() <= 0 || u4_.sign() <= 0)
    fail(ErrorCode::invalid_input, "non-positive side or diagonal in " + shape_text(u1_, u2_, u3_, u4_));
  if (Rational(2) * (u1_ * u1_ + u2_ * u2_) != u3_ * u3_ + u4_ * u4_)
    fail(ErrorCode::invalid_input, "parallelogram law violated by " + shape_text(u1_, u2_, u3_, u4_));
  if ((u4_ * u4_ - u3_ * u3_).abs() >= Rational(4) * u1_ * u2_)
    fail(ErrorCode::degenerate, "flat parallelogram " + shape_text(u1_, u2_, u3_, u4_));
}

Rational RationalParallelogram::cos_phi() const {
  return (u4_ * u4_ - u3_ * u3_) / (Rational(4) * u1_ * u2_);
}

HeronParallelogram::HeronParallelogram(RationalParallelogram shape, Rational area)
    : shape_(std::move(shape)), area_(std::move(area)) {
  const Rational side_product = shape_.u1() * shape_.u2();
  const Rational half_gap = (shape_.u4() * shape_.u4() - shape_.u3() * shape_.u3()) / Rational(4);
  if (area_.sign() <= 0 || area_ * area_ != side_product * side_product - half_gap * half_gap)
    fail(ErrorCode::invalid_input,
         "area " + area_.to_string() + " inconsistent with " +
             shape_text(shape_.u1(), shape_.u2(), shape_.u3(), shape_.u4()));
}

std::string_view to_string(PgramFamily family) noexcept {
  switch (family) {
    case PgramFamily::type_i: return "I";
    case PgramFamily::type_ii: return "II";
    case PgramFamily::other: return "other";
  }
  return "other";
}

RationalParallelogram pgram_from_params(const ParallelogramParams& params) {
  validate(params);
  const auto& [m, n, u] = params;
  const Rational one(1);
  const Rational mn = m * n;
  const Rational spread = n - m;
  return RationalParallelogram((one - mn) * u, (m + n) * u, (one + mn - spread) * u,
                               (one + mn + spread) * u);
}

ParallelogramParams params_from_pgram(const RationalParallelogram& pg) {
  const Rational two(2);
  const Rational outer = pg.u4() + pg.u3() + two * pg.u1();
  const Rational inner = pg.u4() - pg.u3() + two * pg.u2();
  if (outer.is_zero() || inner.is_zero())
    fail(ErrorCode::invalid_input, "vanishing recovery denominator");
  ParallelogramParams params{(pg.u4() + pg.u3() - two * pg.u1()) / inner, inner / outer,
                             outer / Rational(4)};
  try {
    validate(params);
  } catch (const Error& e) {
    fail(ErrorCode::invalid_input, std::string("recovered parameters out of range: ") + e.what());
  }
  return params;
}

SinCos cos_sin_phi(const RationalParallelogram& pg, const std::optional<Rational>& area) {
  Rational cos = pg.cos_phi();
  if (area) {
    Rational sin = *area / (pg.u1() * pg.u2());
    if (sin.sign() <= 0 || sin * sin + cos * cos != Rational(1))
      fail(ErrorCode::invalid_input, "area " + area->to_string() + " inconsistent with sides");
    return {std::move(sin), std::move(cos)};
  }
  auto sin = sqrt_exact(Rational(1) - cos * cos);
  if (!sin) fail(ErrorCode::not_heron, "sin(phi) is irrational");
  return {std::move(*sin), std::move(cos)};
}

Rational area_from_params(const ParallelogramParams& params, const Rational& lambda) {
  validate(params);
  if (lambda.sign() <= 0 || !check_lambda_relation(params.m, params.n, lambda))
    fail(ErrorCode::not_heron, "lambda " + lambda.to_string() + " does not solve the lambda relation");
  return Rational(2) * lambda * params.n * (Rational(1) - params.m * params.m) * params.u * params.u;
}

HeronParallelogram heron_pgram_from_sigma(LambdaFamily family, const Rational& sigma, const Rational& u) {
  LambdaSolution sol = family == LambdaFamily::type_i ? type1_from_sigma(sigma) : type2_from_sigma(sigma);
  ParallelogramParams params{sol.m, sol.n, u};
  RationalParallelogram shape = pgram_from_params(params);
  Rational area = area_from_params(params, sol.lambda);
  return HeronParallelogram(std::move(shape), std::move(area));
}

PgramClassification classify(const HeronParallelogram& hp) {
  SinCos sc = cos_sin_phi(hp.shape(), hp.area());
  Rational lambda = sc.sin / (Rational(1) + sc.cos);
  ParallelogramParams params = params_from_pgram(hp.shape());
  const Rational one(1);
  if (lambda * params.n == params.m) {
    Rational sigma = params.n / (one + params.m);
    return {PgramFamily::type_i, std::move(sigma), std::move(lambda), params.m, params.n};
  }
  if (lambda == params.m * params.n) {
    Rational sigma = (params.n * (one + params.m)).reciprocal();
    return {PgramFamily::type_ii, std::move(sigma), std::move(lambda), params.m, params.n};
  }
  return {PgramFamily::other, std::nullopt, std::move(lambda), params.m, params.n};
}

MedianTriangle median_triangle(const HeronParallelogram& hp) {
  const RationalParallelogram& pg = hp.shape();
  return {HeronTriangle(pg.u1(), pg.u2(), pg.u3(), hp.area() / Rational(2)), pg.u4() / Rational(2)};
}

}  // namespace heron
