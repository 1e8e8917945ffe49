#pragma once

// Test-only reference computations. Nothing here calls the path-deletion
// formulas or the Bareiss determinant of the library.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "kltgraph/discrepancy.hpp"
#include "kltgraph/dual_graph.hpp"
#include "kltgraph/rational.hpp"

namespace kltgraph::oracle {

struct Overflow : std::overflow_error {
  Overflow() : std::overflow_error("machine fraction overflow") {}
};

/// Fraction over int64 that throws Overflow instead of wrapping.
class SmallFraction {
 public:
  SmallFraction(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  friend SmallFraction operator+(const SmallFraction& a, const SmallFraction& b);
  friend SmallFraction operator-(const SmallFraction& a, const SmallFraction& b);
  friend SmallFraction operator*(const SmallFraction& a, const SmallFraction& b);
  friend SmallFraction operator/(const SmallFraction& a, const SmallFraction& b);

  Rational to_rational() const { return Rational(BigInt(num_), BigInt(den_)); }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// Solves M X = B by Gauss-Jordan elimination with exact rationals. M is
/// the intersection matrix of `graph`; B is n x cols, row-major. Returns X
/// row-major. Throws std::domain_error if M is singular.
std::vector<Rational> solve_intersection_system(const DualGraph& graph,
                                                const std::vector<std::int64_t>& rhs,
                                                std::size_t cols);

/// Log discrepancies from adjunction: K.E_j = m_j - 2 and pi^*K_Y.E_j = 0
/// give sum_i (a_i - 1) (E_i.E_j) = m_j - 2.
std::vector<Rational> adjunction_log_discrepancies(const DualGraph& graph);

/// mult_{E_k} pi^*C from (pi^{-1}_*C + sum_i x_i E_i).E_j = 0.
std::vector<Rational> pullback_multiplicities(const DualGraph& graph, const CurveAttachment& curve);

/// Both of the above at once; column 0 holds log discrepancies and column
/// 1 + j the multiplicities for a curve meeting E_j once. Row-major n x (n+1).
std::vector<Rational> discrepancy_and_unit_multiplicities(const DualGraph& graph);

/// Determinant by Laplace expansion along the first row (small n only).
BigInt cofactor_determinant(const IntMatrix& m);

/// One representative of every isomorphism class of trees on n vertices.
std::vector<std::vector<std::pair<Vertex, Vertex>>> unlabeled_trees(std::size_t n);

/// Uniformly random labeled tree on n vertices (random Pruefer code).
std::vector<std::pair<Vertex, Vertex>> random_tree(std::size_t n, std::mt19937_64& rng);

}  // namespace kltgraph::oracle
