#include "kltgraph/dual_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace kltgraph {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : bits_(universe, false) {
  for (Vertex v : members) insert(v);
}

void VertexSet::insert(Vertex v) {
  if (v >= bits_.size()) throw GraphError("vertex " + std::to_string(v) + " outside vertex set");
  if (!bits_[v]) {
    bits_[v] = true;
    ++count_;
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (Vertex v = 0; v < bits_.size(); ++v)
    if (bits_[v]) out.push_back(v);
  return out;
}

DualGraph::DualGraph(std::vector<int> weights, std::vector<std::pair<Vertex, Vertex>> edges)
    : weights_(std::move(weights)), edges_(std::move(edges)), adjacency_(weights_.size()) {
  if (weights_.empty()) throw GraphError("graph has no vertices");
  for (auto& [a, b] : edges_) {
    if (a >= size() || b >= size()) throw GraphError("edge endpoint out of range");
    if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a + 1));
    if (a > b) std::swap(a, b);
    if (adjacent(a, b)) {
      throw GraphError("repeated edge " + std::to_string(a + 1) + "-" + std::to_string(b + 1) +
                       " (only simple edges are supported)");
    }
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

DualGraph DualGraph::chain(std::vector<int> weights) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i + 1 < weights.size(); ++i) edges.emplace_back(i, i + 1);
  return DualGraph(std::move(weights), std::move(edges));
}

bool DualGraph::adjacent(Vertex a, Vertex b) const {
  const auto& nbrs = adjacency_.at(a);
  return std::find(nbrs.begin(), nbrs.end(), b) != nbrs.end();
}

bool DualGraph::is_connected() const {
  std::vector<bool> seen(size(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == size();
}

bool DualGraph::is_forest() const {
  // Union-find; an edge joining two vertices already connected closes a cycle.
  std::vector<Vertex> parent(size());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [a, b] : edges_) {
    const Vertex ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

bool DualGraph::is_ordered_chain() const {
  if (edges_.size() + 1 != size()) return false;
  for (Vertex i = 0; i + 1 < size(); ++i)
    if (!adjacent(i, i + 1)) return false;
  return true;
}

IntMatrix DualGraph::intersection_matrix() const { return intersection_matrix(VertexSet(size())); }

IntMatrix DualGraph::intersection_matrix(const VertexSet& deleted) const {
  std::vector<Vertex> keep;
  keep.reserve(size());
  for (Vertex v = 0; v < size(); ++v)
    if (!deleted.contains(v)) keep.push_back(v);
  std::vector<std::size_t> position(size(), size());
  for (std::size_t i = 0; i < keep.size(); ++i) position[keep[i]] = i;

  IntMatrix m(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    m(i, i) = -weights_[keep[i]];
    for (Vertex w : adjacency_[keep[i]]) {
      if (position[w] != size()) m(i, position[w]) = 1;
    }
  }
  return m;
}

DualGraph DualGraph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != size()) throw GraphError("permutation size mismatch");
  std::vector<int> weights(size());
  for (Vertex v = 0; v < size(); ++v) weights.at(perm[v]) = weights_[v];
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(edges_.size());
  for (auto [a, b] : edges_) edges.emplace_back(perm[a], perm[b]);
  return DualGraph(std::move(weights), std::move(edges));
}

ValidationReport validate(const DualGraph& graph) {
  ValidationReport report;
  for (Vertex v = 0; v < graph.size(); ++v) {
    if (graph.weight(v) < 2) {
      report.weights_ok = false;
      report.problems.push_back("vertex " + std::to_string(v + 1) + " has weight " +
                                std::to_string(graph.weight(v)) + " < 2");
    }
  }
  report.connected = graph.is_connected();
  if (!report.connected) report.problems.emplace_back("graph is not connected");
  report.acyclic = graph.is_forest();
  if (!report.acyclic) report.problems.emplace_back("graph contains a cycle");

  IntMatrix negated = graph.intersection_matrix();
  for (std::size_t i = 0; i < negated.size(); ++i)
    for (std::size_t j = 0; j < negated.size(); ++j) negated(i, j) = -negated(i, j);
  report.minors = leading_principal_minors(negated);
  for (std::size_t k = 0; k < report.minors.size(); ++k) {
    if (report.minors[k] <= 0) {
      report.negative_definite = false;
      report.problems.push_back("intersection matrix is not negative definite (leading minor " +
                                std::to_string(k + 1) + " of -M is " +
                                report.minors[k].get_str() + ")");
      break;
    }
  }
  return report;
}

VertexSet path(const DualGraph& graph, Vertex i, Vertex j) {
  const std::size_t n = graph.size();
  if (i >= n || j >= n) throw GraphError("path endpoint out of range");
  if (!graph.is_tree()) throw GraphError("path requires a tree");

  std::vector<Vertex> parent(n, n);
  parent[i] = i;
  std::queue<Vertex> queue;
  queue.push(i);
  while (!queue.empty() && parent[j] == n) {
    const Vertex v = queue.front();
    queue.pop();
    for (Vertex w : graph.neighbors(v)) {
      if (parent[w] == n) {
        parent[w] = v;
        queue.push(w);
      }
    }
  }
  VertexSet out(n);
  for (Vertex v = j;; v = parent[v]) {
    out.insert(v);
    if (v == i) break;
  }
  return out;
}

BigInt delta(const DualGraph& graph, const VertexSet& deleted) {
  if (deleted.universe() != graph.size()) throw GraphError("vertex set does not match graph");
  BigInt det = determinant(graph.intersection_matrix(deleted));
  return det < 0 ? BigInt(-det) : det;
}

BigInt delta(const DualGraph& graph) { return delta(graph, VertexSet(graph.size())); }

}  // namespace kltgraph
