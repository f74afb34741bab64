#pragma once

// Fundamental solutions of lambda^2 * n * (1 - m^2) = m * (1 - n^2).
//
//   Type I  : lambda = m/n, equivalently m^2 + mn + n^2 = 1, sigma in (0, 1)
//   Type II : lambda = mn,  equivalently (1/n)^2 - m/n + m^2 = 1, sigma in (1/2, 1)

#include <string_view>

#include "heron/rational.hpp"

namespace heron {

enum class LambdaFamily { type_i, type_ii };

std::string_view to_string(LambdaFamily family) noexcept;

struct LambdaSolution {
  Rational m;
  Rational n;
  Rational lambda;
  LambdaFamily family;
  Rational sigma;

  friend bool operator==(const LambdaSolution&, const LambdaSolution&) = default;
};

/// Throws Error(range) unless 0 < sigma < 1.
LambdaSolution type1_from_sigma(const Rational& sigma);

/// sigma = n/(1+m). Throws Error(not_in_family) if m^2+mn+n^2 != 1 and
/// Error(degenerate) if m = -1. No range check on the result.
Rational sigma_from_type1(const Rational& m, const Rational& n);

/// Throws Error(range) unless 1/2 < sigma < 1.
LambdaSolution type2_from_sigma(const Rational& sigma);

/// sigma = 1/(n(1+m)). Throws Error(degenerate) for n = 0 or m = -1, and
/// Error(not_in_family) if (1/n)^2 - m/n + m^2 != 1.
Rational sigma_from_type2(const Rational& m, const Rational& n);

/// Exact test of lambda^2 * n * (1-m^2) == m * (1-n^2).
/// Throws Error(degenerate) when n = 0 or m^2 = 1.
bool check_lambda_relation(const Rational& m, const Rational& n, const Rational& lambda);

}  // namespace heron
