#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kltgraph/dual_graph.hpp"
#include "kltgraph/rational.hpp"

namespace kltgraph {

/// The cyclic quotient singularity (1/n)(1, a), with n >= 2, 1 <= a < n and
/// gcd(a, n) = 1.
class CyclicQuotient {
 public:
  /// Throws std::invalid_argument when the pair is out of range or not coprime.
  CyclicQuotient(std::int64_t n, std::int64_t a);

  std::int64_t order() const { return n_; }
  std::int64_t weight() const { return a_; }

 private:
  std::int64_t n_;
  std::int64_t a_;
};

/// Hirzebruch-Jung expansion n/a = m_1 - 1/(m_2 - 1/(... - 1/m_r)), all
/// m_i >= 2, via m = ceil(n/a), (n, a) <- (a, m a - n) until a = 0.
std::vector<int> hj_expansion(const CyclicQuotient& q);

/// Minimal-resolution chain of (1/n)(1, a).
DualGraph chain_from_quotient(const CyclicQuotient& q);

/// Value of m_1 - 1/(m_2 - 1/(...)). Throws std::domain_error if an
/// intermediate denominator vanishes.
Rational evaluate_continued_fraction(std::span<const int> entries);

/// a' with a a' = 1 mod n, in [1, n).
std::int64_t inverse_weight(const CyclicQuotient& q);

}  // namespace kltgraph
