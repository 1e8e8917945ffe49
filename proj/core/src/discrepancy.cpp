#include "kltgraph/discrepancy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kltgraph {

namespace {

void require_open_unit(const Rational& delta) {
  if (delta <= Rational(0) || delta >= Rational(1)) {
    throw std::invalid_argument("delta must lie in (0, 1), got " + delta.str());
  }
}

void require_matching(const DualGraph& graph, const CurveAttachment& curve) {
  if (curve.size() != graph.size()) {
    throw std::invalid_argument("curve attachment has " + std::to_string(curve.size()) +
                                " entries for a graph with " + std::to_string(graph.size()) +
                                " vertices");
  }
}

void require_vertex(const DualGraph& graph, Vertex k) {
  if (k >= graph.size()) throw GraphError("vertex index out of range");
}

Rational log_discrepancy_from(const DualGraph& graph, const PathDeterminants& table, Vertex k) {
  BigInt sum = 0;
  for (Vertex j = 0; j < graph.size(); ++j) {
    const long factor = 2 - static_cast<long>(graph.degree(j));
    if (factor != 0) sum += factor * table.without_path(k, j);
  }
  return Rational(sum, table.total());
}

Rational mult_from(const CurveAttachment& curve, const PathDeterminants& table, Vertex k) {
  BigInt sum = 0;
  for (Vertex j = 0; j < curve.size(); ++j) {
    if (curve[j] != 0) sum += static_cast<long>(curve[j]) * table.without_path(k, j);
  }
  return Rational(sum, table.total());
}

}  // namespace

CurveAttachment::CurveAttachment(std::vector<std::int64_t> values) : values_(std::move(values)) {
  for (auto c : values_) {
    if (c < 0) throw std::invalid_argument("curve intersection numbers must be non-negative");
  }
}

bool CurveAttachment::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](auto c) { return c == 0; });
}

PathDeterminants::PathDeterminants(const DualGraph& graph)
    : n_(graph.size()), table_(graph.size() * graph.size()) {
  if (!graph.is_tree()) throw GraphError("discrepancies require a connected tree");
  total_ = delta(graph);
  if (total_ == 0) throw GraphError("intersection matrix is singular");
  // One breadth-first search per source vertex; the path to j is read off
  // the parent pointers.
  std::vector<Vertex> parent(n_);
  std::vector<Vertex> queue;
  queue.reserve(n_);
  for (Vertex k = 0; k < n_; ++k) {
    std::fill(parent.begin(), parent.end(), n_);
    parent[k] = k;
    queue.assign(1, k);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : graph.neighbors(queue[head])) {
        if (parent[w] == n_) {
          parent[w] = queue[head];
          queue.push_back(w);
        }
      }
    }
    for (Vertex j = k; j < n_; ++j) {
      VertexSet removed(n_);
      for (Vertex v = j;; v = parent[v]) {
        removed.insert(v);
        if (v == k) break;
      }
      table_[k * n_ + j] = delta(graph, removed);
      table_[j * n_ + k] = table_[k * n_ + j];
    }
  }
}

Rational log_discrepancy(const DualGraph& graph, Vertex k) {
  require_vertex(graph, k);
  return log_discrepancy_from(graph, PathDeterminants(graph), k);
}

std::vector<Rational> log_discrepancies(const DualGraph& graph) {
  const PathDeterminants table(graph);
  std::vector<Rational> out;
  out.reserve(graph.size());
  for (Vertex k = 0; k < graph.size(); ++k) out.push_back(log_discrepancy_from(graph, table, k));
  return out;
}

Rational mult_pullback(const DualGraph& graph, const CurveAttachment& curve, Vertex k) {
  require_matching(graph, curve);
  require_vertex(graph, k);
  return mult_from(curve, PathDeterminants(graph), k);
}

std::vector<Rational> mult_pullbacks(const DualGraph& graph, const CurveAttachment& curve) {
  require_matching(graph, curve);
  const PathDeterminants table(graph);
  std::vector<Rational> out;
  out.reserve(graph.size());
  for (Vertex k = 0; k < graph.size(); ++k) out.push_back(mult_from(curve, table, k));
  return out;
}

Rational boundary_discrepancy(const DualGraph& graph, const CurveAttachment& curve, Vertex k,
                              const Rational& delta) {
  require_open_unit(delta);
  require_matching(graph, curve);
  require_vertex(graph, k);
  const PathDeterminants table(graph);
  return log_discrepancy_from(graph, table, k) - (Rational(1) - delta) * mult_from(curve, table, k);
}

std::vector<Rational> boundary_discrepancies(const DualGraph& graph, const CurveAttachment& curve,
                                             const Rational& delta) {
  require_open_unit(delta);
  require_matching(graph, curve);
  const PathDeterminants table(graph);
  const Rational coefficient = Rational(1) - delta;
  std::vector<Rational> out;
  out.reserve(graph.size());
  for (Vertex k = 0; k < graph.size(); ++k) {
    out.push_back(log_discrepancy_from(graph, table, k) - coefficient * mult_from(curve, table, k));
  }
  return out;
}

LcTest lc_test(const DualGraph& graph, const std::optional<CurveAttachment>& curve,
               const Rational& delta) {
  require_open_unit(delta);
  const auto values =
      curve ? boundary_discrepancies(graph, *curve, delta) : log_discrepancies(graph);
  const auto worst = std::min_element(values.begin(), values.end());
  LcTest out;
  out.worst_vertex = static_cast<Vertex>(worst - values.begin());
  out.minimum = *worst;
  out.holds = out.minimum >= delta;
  return out;
}

bool is_delta_lc(const DualGraph& graph, const std::optional<CurveAttachment>& curve,
                 const Rational& delta) {
  return lc_test(graph, curve, delta).holds;
}

}  // namespace kltgraph
