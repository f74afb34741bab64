#pragma once

/**
 * @file parallelogram.hpp
 * @brief Rational and Heron parallelograms.
 *
 * A parallelogram has sides u1, u2 meeting at angle phi and diagonals u3, u4,
 * where u3 is the diagonal opposite phi. Rational parallelograms are in
 * bijection with parameters 0 < m, n < 1 and u > 0:
 *
 *     u1 = (1 - mn) u            u3 = (1 + mn - (n - m)) u
 *     u2 = (m + n) u             u4 = (1 + mn + (n - m)) u
 *
 * The area is rational exactly when lambda^2 = m(1-n^2) / (n(1-m^2)) has a
 * rational root lambda > 0, which is then the generator of phi, and
 * A = 2 lambda n (1-m^2) u^2.
 */

#include <optional>
#include <string_view>

#include "heron/angle.hpp"
#include "heron/lambda_families.hpp"
#include "heron/rational.hpp"
#include "heron/triangle.hpp"

namespace heron {

struct ParallelogramParams {
  Rational m;
  Rational n;
  Rational u;

  friend bool operator==(const ParallelogramParams&, const ParallelogramParams&) = default;
};

/// Throws Error(range) unless 0 < m < 1, 0 < n < 1 and u > 0.
void validate(const ParallelogramParams& params);

/// Sides and diagonals of a non-degenerate parallelogram.
///
/// The constructor requires positive values (Error(invalid_input)), the
/// parallelogram law 2(u1^2 + u2^2) = u3^2 + u4^2 (Error(invalid_input)) and
/// |u4^2 - u3^2| < 4 u1 u2 (Error(degenerate)).
class RationalParallelogram {
 public:
  RationalParallelogram(Rational u1, Rational u2, Rational u3, Rational u4);

  const Rational& u1() const noexcept { return u1_; }
  const Rational& u2() const noexcept { return u2_; }
  const Rational& u3() const noexcept { return u3_; }
  const Rational& u4() const noexcept { return u4_; }

  /// cos phi = (u4^2 - u3^2) / (4 u1 u2).
  Rational cos_phi() const;

  friend bool operator==(const RationalParallelogram&, const RationalParallelogram&) = default;

 private:
  Rational u1_, u2_, u3_, u4_;
};

/// A rational parallelogram with its rational area. The constructor checks
/// A > 0 and A^2 = (u1 u2)^2 - ((u4^2 - u3^2)/4)^2 (Error(invalid_input)).
class HeronParallelogram {
 public:
  HeronParallelogram(RationalParallelogram shape, Rational area);

  const RationalParallelogram& shape() const noexcept { return shape_; }
  const Rational& area() const noexcept { return area_; }

  friend bool operator==(const HeronParallelogram&, const HeronParallelogram&) = default;

 private:
  RationalParallelogram shape_;
  Rational area_;
};

enum class PgramFamily { type_i, type_ii, other };

std::string_view to_string(PgramFamily family) noexcept;

struct PgramClassification {
  PgramFamily family;
  std::optional<Rational> sigma;  // absent for PgramFamily::other
  Rational lambda;                // generator of phi
  Rational m;
  Rational n;

  friend bool operator==(const PgramClassification&, const PgramClassification&) = default;
};

struct MedianTriangle {
  HeronTriangle triangle;  // sides (u1, u2, u3), area A/2
  Rational median;         // to side u3, equal to u4/2
};

RationalParallelogram pgram_from_params(const ParallelogramParams& params);

/// u = (u4+u3+2u1)/4, m = (u4+u3-2u1)/(u4-u3+2u2), n = (u4-u3+2u2)/(u4+u3+2u1).
ParallelogramParams params_from_pgram(const RationalParallelogram& pg);

/// Sine and cosine of phi. With `area`, sin = A/(u1 u2) and the pair must
/// satisfy sin^2 + cos^2 = 1 (Error(invalid_input)). Without it, sin is the
/// exact root of 1 - cos^2 or Error(not_heron).
SinCos cos_sin_phi(const RationalParallelogram& pg, const std::optional<Rational>& area = std::nullopt);

/// A = 2 lambda n (1-m^2) u^2. Throws Error(not_heron) unless lambda > 0
/// solves the lambda relation for (m, n).
Rational area_from_params(const ParallelogramParams& params, const Rational& lambda);

/// Heron parallelogram built from a family parameter and scale.
HeronParallelogram heron_pgram_from_sigma(LambdaFamily family, const Rational& sigma, const Rational& u);

/// Classifies by the generator of phi. Type I when lambda = m/n (sigma =
/// n/(1+m)), Type II when lambda = mn (sigma = 1/(n(1+m))), else Other.
PgramClassification classify(const HeronParallelogram& hp);

/// The triangle (u1, u2, u3) cut off by diagonal u3, with its rational
/// median u4/2.
MedianTriangle median_triangle(const HeronParallelogram& hp);

}  // namespace heron
