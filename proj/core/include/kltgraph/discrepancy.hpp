#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kltgraph/dual_graph.hpp"
#include "kltgraph/rational.hpp"

namespace kltgraph {

/// Intersection numbers c_j = (strict transform of C . E_j) of a curve C
/// through the singular point with each exceptional curve.
class CurveAttachment {
 public:
  /// Throws std::invalid_argument on a negative entry.
  explicit CurveAttachment(std::vector<std::int64_t> values);

  std::size_t size() const { return values_.size(); }
  std::int64_t operator[](Vertex j) const { return values_.at(j); }
  std::span<const std::int64_t> values() const { return values_; }
  bool is_zero() const;

 private:
  std::vector<std::int64_t> values_;
};

/// Table of Delta(G \ path(k, j)) for all vertex pairs of a tree G together
/// with Delta(G). Every closed-form discrepancy and multiplicity is a linear
/// combination of these over Delta(G).
class PathDeterminants {
 public:
  /// Throws GraphError if the graph is not a tree or its intersection matrix
  /// is singular.
  explicit PathDeterminants(const DualGraph& graph);

  const BigInt& total() const { return total_; }
  const BigInt& without_path(Vertex k, Vertex j) const { return table_[k * n_ + j]; }

 private:
  std::size_t n_;
  BigInt total_;
  std::vector<BigInt> table_;
};

/// a(E_k, Y, 0) = sum_j (2 - deg v_j) * Delta(G \ path(k, j)) / Delta(G).
/// The factor 2 - deg v_j stands for 2 - sum_{i != j} E_i.E_j and relies on
/// every edge being simple.
Rational log_discrepancy(const DualGraph& graph, Vertex k);
std::vector<Rational> log_discrepancies(const DualGraph& graph);

/// mult_{E_k} pi^*C = sum_j c_j * Delta(G \ path(k, j)) / Delta(G).
/// Throws std::invalid_argument when the attachment length differs from the
/// vertex count.
Rational mult_pullback(const DualGraph& graph, const CurveAttachment& curve, Vertex k);
std::vector<Rational> mult_pullbacks(const DualGraph& graph, const CurveAttachment& curve);

/// a(E_k, Y, (1 - delta) C) = a(E_k, Y, 0) - (1 - delta) mult_{E_k} pi^*C.
/// Requires 0 < delta < 1.
Rational boundary_discrepancy(const DualGraph& graph, const CurveAttachment& curve, Vertex k,
                              const Rational& delta);
std::vector<Rational> boundary_discrepancies(const DualGraph& graph, const CurveAttachment& curve,
                                             const Rational& delta);

struct LcTest {
  bool holds = false;
  Vertex worst_vertex = 0;  ///< vertex attaining the minimum
  Rational minimum;         ///< smallest log discrepancy over the exceptional curves
};

/// delta-lc test over the exceptional curves of the resolution: every
/// a(E_k, Y, (1 - delta) C) >= delta, or a(E_k, Y, 0) >= delta without a
/// curve. The boundary coefficient 1 - delta of C itself is admissible by
/// construction. Requires 0 < delta < 1.
LcTest lc_test(const DualGraph& graph, const std::optional<CurveAttachment>& curve,
               const Rational& delta);
bool is_delta_lc(const DualGraph& graph, const std::optional<CurveAttachment>& curve,
                 const Rational& delta);

}  // namespace kltgraph
