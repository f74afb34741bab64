#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rational numbers.
 *
 * Values are always stored in lowest terms with a positive denominator, so
 * zero is uniquely 0/1 and equality is structural. Integers are GMP
 * `mpz_class` and never overflow.
 *
 * Textual form is "num/den", with "/den" omitted when the denominator is 1.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace heron {

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT: implicit on purpose
  Rational(int value) : num_(value), den_(1) {}   // NOLINT
  Rational(long numerator, long denominator);
  Rational(mpz_class numerator, mpz_class denominator);
  explicit Rational(mpz_class integer) : num_(std::move(integer)), den_(1) {}

  const mpz_class& numerator() const noexcept { return num_; }
  const mpz_class& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return sgn(num_) == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  /// -1, 0 or +1.
  int sign() const noexcept { return sgn(num_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws Error(division_by_zero) when rhs is zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  /// Multiplicative inverse; throws on zero.
  Rational reciprocal() const;
  Rational abs() const;
  Rational squared() const { return *this * *this; }

  /// Lossy; for display only.
  double to_double() const;
  /// Fixed-point decimal rendering with `digits` fractional digits, truncated.
  std::string to_decimal(int digits = 12) const;

  std::string to_string() const;
  /// Accepts `[+-]digits[/digits]`. Throws Error(parse) on malformed text,
  /// Error(division_by_zero) on a zero denominator.
  static Rational parse(std::string_view text);

  std::size_t hash() const noexcept;

 private:
  void normalize();

  mpz_class num_;
  mpz_class den_;
};

/// Exact square root. Returns the non-negative root when `r` is the square of
/// a rational and nullopt otherwise. Throws Error(negative_sqrt) for r < 0.
std::optional<Rational> sqrt_exact(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace heron

template <>
struct std::hash<heron::Rational> {
  std::size_t operator()(const heron::Rational& r) const noexcept { return r.hash(); }
};
