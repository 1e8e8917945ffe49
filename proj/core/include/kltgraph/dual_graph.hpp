#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kltgraph/determinant.hpp"
#include "kltgraph/rational.hpp"

namespace kltgraph {

/// Vertex index, 0-based. File formats and the CLI use 1-based indices.
using Vertex = std::size_t;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A subset of the vertices of a graph with `universe` vertices. Used to
/// select the vertices deleted before taking a determinant, e.g. the path
/// between two vertices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, false) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  /// Throws GraphError when `v` is outside the universe.
  void insert(Vertex v);
  bool contains(Vertex v) const { return v < bits_.size() && bits_[v]; }

  /// Members in increasing order.
  std::vector<Vertex> members() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

/// Weighted dual graph of a resolution: vertex i is an exceptional curve E_i
/// with weight m_i = -E_i^2, and every edge is a transversal intersection
/// point (E_i . E_j = 1).
///
/// The constructor only rejects malformed input (no vertices, self-loops,
/// repeated edges, out-of-range endpoints). Weight bounds, tree shape and
/// negative definiteness are reported by validate() so that enumerators can
/// generate first and filter afterwards.
class DualGraph {
 public:
  DualGraph(std::vector<int> weights, std::vector<std::pair<Vertex, Vertex>> edges);

  /// Chain v_0 - v_1 - ... - v_{n-1} with the given weights.
  static DualGraph chain(std::vector<int> weights);

  std::size_t size() const { return weights_.size(); }
  int weight(Vertex v) const { return weights_.at(v); }
  std::span<const int> weights() const { return weights_; }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex a, Vertex b) const;

  bool is_connected() const;
  bool is_forest() const;
  bool is_tree() const { return is_forest() && is_connected(); }
  /// True iff the edges are exactly {i, i+1} for 0 <= i < n-1.
  bool is_ordered_chain() const;

  /// Intersection matrix: -m_i on the diagonal, 1 for edges, 0 elsewhere.
  IntMatrix intersection_matrix() const;
  /// Intersection matrix of the subgraph induced on the vertices not in
  /// `deleted`, in increasing vertex order.
  IntMatrix intersection_matrix(const VertexSet& deleted) const;

  /// Graph with vertex v renamed to perm[v].
  DualGraph relabeled(std::span<const Vertex> perm) const;

 private:
  std::vector<int> weights_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

struct ValidationReport {
  bool weights_ok = true;
  bool connected = true;
  bool acyclic = true;
  bool negative_definite = true;
  /// Leading principal minors of the negated intersection matrix.
  std::vector<BigInt> minors;
  std::vector<std::string> problems;

  bool is_tree() const { return connected && acyclic; }
  bool valid() const { return weights_ok && is_tree() && negative_definite; }
};

/// Checks the standing hypotheses on a resolution graph: weights >= 2, tree
/// shape, and negative definiteness (all leading principal minors of -M
/// positive, exact).
ValidationReport validate(const DualGraph& graph);

/// Vertex set of the unique tree path from i to j, both ends included.
/// Throws GraphError if the graph is not a tree or i, j are out of range.
VertexSet path(const DualGraph& graph, Vertex i, Vertex j);

/// |det| of the intersection matrix restricted to the vertices that are not
/// deleted. Deleting everything gives 1.
BigInt delta(const DualGraph& graph, const VertexSet& deleted);
BigInt delta(const DualGraph& graph);

}  // namespace kltgraph
