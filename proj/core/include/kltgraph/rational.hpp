#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kltgraph {

using BigInt = mpz_class;

/// Arbitrary-precision rational number kept in canonical reduced form
/// (gcd(|num|, den) = 1, den >= 1). Backed by GMP's mpq_t.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  /// Throws std::domain_error when `den` is zero.
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "p/q", "p" or "-p/q" (decimal integers, optional leading sign on
  /// the numerator only). Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Exact "p/q" form, or "p" when the denominator is 1. Re-parseable.
  std::string str() const { return value_.get_str(); }

  double to_double() const { return value_.get_d(); }

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& v) {
    Rational out;
    out.value_ = -v.value_;
    return out;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

Rational abs(const Rational& v);

/// Integer power for non-negative exponents.
Rational pow(const Rational& base, unsigned exponent);

/// Decimal rendering to `significant` digits, for display only. The exact
/// value is always Rational::str().
std::string approx_decimal(const Rational& v, int significant = 6);

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace kltgraph
