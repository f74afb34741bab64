#include "heron/rational.hpp"

#include <cctype>
#include <functional>
#include <ostream>
#include <utility>

#include "heron/error.hpp"

namespace heron {

Rational::Rational(long numerator, long denominator)
    : num_(numerator), den_(denominator) {
  normalize();
}

Rational::Rational(mpz_class numerator, mpz_class denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  normalize();
}

void Rational::normalize() {
  if (sgn(den_) == 0) fail(ErrorCode::division_by_zero, "rational with zero denominator");
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (sgn(num_) == 0) {
    den_ = 1;
    return;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) fail(ErrorCode::division_by_zero, "division by zero");
  // Copy first: rhs may alias *this.
  mpz_class rn = rhs.num_;
  num_ *= rhs.den_;
  den_ *= rn;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  int c = cmp(lhs.num_ * rhs.den_, rhs.num_ * lhs.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::reciprocal() const { return Rational(1) / *this; }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

double Rational::to_double() const {
  mpq_class q(num_, den_);
  return q.get_d();
}

std::string Rational::to_decimal(int digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled = (::abs(num_) * scale) / den_;
  std::string body = scaled.get_str();
  if (static_cast<int>(body.size()) <= digits)
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  std::string out = sign() < 0 ? "-" : "";
  out += body.substr(0, body.size() - static_cast<std::size_t>(digits));
  if (digits > 0) out += "." + body.substr(body.size() - static_cast<std::size_t>(digits));
  return out;
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num_text = body;
  std::string_view den_text = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_text = body.substr(0, slash);
    den_text = body.substr(slash + 1);
  }
  if (!all_digits(num_text) || !all_digits(den_text))
    fail(ErrorCode::parse, "malformed rational '" + std::string(text) + "'");
  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (sgn(den) == 0)
    fail(ErrorCode::division_by_zero, "zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

std::size_t Rational::hash() const noexcept {
  std::size_t h = std::hash<std::string>{}(num_.get_str(16));
  return h ^ (std::hash<std::string>{}(den_.get_str(16)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::optional<Rational> sqrt_exact(const Rational& r) {
  if (r.sign() < 0) fail(ErrorCode::negative_sqrt, "square root of negative " + r.to_string());
  // Reduced form means r is a rational square iff num and den are both squares.
  if (!mpz_perfect_square_p(r.numerator().get_mpz_t()) ||
      !mpz_perfect_square_p(r.denominator().get_mpz_t()))
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), r.numerator().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.denominator().get_mpz_t());
  return Rational(std::move(n), std::move(d));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace heron
