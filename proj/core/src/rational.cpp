#include "kltgraph/rational.hpp"

#include <cctype>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace kltgraph {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw std::invalid_argument("not a rational of the form p/q: '" + original + "'");
  }
  BigInt num(std::string(num_text), 10);
  BigInt den(std::string(den_text), 10);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + original + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.sign() == 0) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational abs(const Rational& v) { return v.sign() < 0 ? -v : v; }

Rational pow(const Rational& base, unsigned exponent) {
  Rational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

std::string approx_decimal(const Rational& v, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, v.to_double());
  return buf;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

}  // namespace kltgraph
