#include "kltgraph/hj.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace kltgraph {

CyclicQuotient::CyclicQuotient(std::int64_t n, std::int64_t a) : n_(n), a_(a) {
  if (n < 2) throw std::invalid_argument("cyclic quotient order must be >= 2");
  if (a < 1 || a >= n) {
    throw std::invalid_argument("weight a must satisfy 1 <= a < n (got a=" + std::to_string(a) +
                                ", n=" + std::to_string(n) + ")");
  }
  if (std::gcd(n, a) != 1) {
    throw std::invalid_argument("gcd(a, n) must be 1 (got a=" + std::to_string(a) +
                                ", n=" + std::to_string(n) + ")");
  }
}

std::vector<int> hj_expansion(const CyclicQuotient& q) {
  std::vector<int> out;
  std::int64_t n = q.order();
  std::int64_t a = q.weight();
  while (a != 0) {
    const std::int64_t m = (n + a - 1) / a;
    out.push_back(static_cast<int>(m));
    const std::int64_t next = m * a - n;
    n = a;
    a = next;
  }
  return out;
}

DualGraph chain_from_quotient(const CyclicQuotient& q) { return DualGraph::chain(hj_expansion(q)); }

Rational evaluate_continued_fraction(std::span<const int> entries) {
  if (entries.empty()) throw std::invalid_argument("empty continued fraction");
  Rational value(entries.back());
  for (auto it = entries.rbegin() + 1; it != entries.rend(); ++it) {
    value = Rational(*it) - Rational(1) / value;
  }
  return value;
}

std::int64_t inverse_weight(const CyclicQuotient& q) {
  // Extended Euclid on (a, n).
  std::int64_t r0 = q.weight(), r1 = q.order();
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    const std::int64_t t = r0 / r1;
    r0 = std::exchange(r1, r0 - t * r1);
    s0 = std::exchange(s1, s0 - t * s1);
  }
  const std::int64_t inv = s0 % q.order();
  return inv < 0 ? inv + q.order() : inv;
}

}  // namespace kltgraph
