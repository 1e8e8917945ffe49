#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kltgraph/discrepancy.hpp"
#include "kltgraph/dual_graph.hpp"
#include "kltgraph/rational.hpp"

namespace kltgraph {

/// All chains with 1..max_len vertices and weights in [2, max_weight].
struct ChainSpace {
  int max_len = 1;
  int max_weight = 2;
};

/// Streams the chains of a ChainSpace, shorter chains first and
/// lexicographically by weight vector within one length. Restricting the
/// first weight partitions the space for parallel sweeps.
class ChainEnumerator {
 public:
  /// Throws std::invalid_argument unless max_len >= 1 and max_weight >= 2.
  explicit ChainEnumerator(ChainSpace space, std::optional<int> first_weight = std::nullopt);

  /// Next weight vector, or nullopt when exhausted.
  const std::vector<int>* next_weights();
  std::optional<DualGraph> next();

  /// sum_{n=1..max_len} (max_weight - 1)^n.
  static std::uint64_t count(ChainSpace space);

 private:
  ChainSpace space_;
  std::optional<int> first_weight_;
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

enum class Outcome { kPass, kFail, kVacuous };

const char* to_string(Outcome outcome);

struct AssertionResult {
  std::string id;
  Outcome outcome = Outcome::kPass;
  // Both sides of the checked relation, exact. Always set on failure.
  std::string lhs;
  std::string rhs;
};

struct LemmaReport {
  std::string instance;
  std::vector<AssertionResult> assertions;

  bool passed() const;
};

/// Checks the determinant identities and inequalities for a chain
/// v_1 - ... - v_n with D_0 = Delta(G) and D_k = Delta(G minus v_1..v_k):
///   first_row_recurrence  D_0 = m_1 D_1 - D_2 (D_{n+1} := 0)
///   shifted_recurrence    D_k = m_{k+1} D_{k+1} - D_{k+2}, 1 <= k <= n-2
///   strict_descent        D_0 > D_1 > ... > D_n = 1
///   lower_bound           D_0 >= n+1, D_k >= n-k+1; equal when all m_i = 2
///   unit_step_forces_all_two   D_0 = D_1 + 1  =>  D_0 = n+1
///   heavy_vertex_gap      m_i >= 3  =>  D_0 > (i+1) D_i, for every such i
/// Implications whose hypothesis fails (and empty index ranges) are
/// reported as vacuous. Throws GraphError if `chain` is not an ordered chain.
LemmaReport verify_chain_lemma(const DualGraph& chain);

/// The three shapes of a log canonical pair (Y, C) at a singular point.
enum class LcShape {
  kTwoEnds = 1,  ///< chain, C meets both ends (or a single curve twice)
  kFork = 2,     ///< one fork with two (-2)-leaves and C at the end of the
                 ///< remaining arm, or [2, w, 2] with C through the middle
  kOneEnd = 3,   ///< chain, C meets the first end only
};

struct KMConfig {
  LcShape shape;
  DualGraph graph;
  CurveAttachment curve;
  /// Vertex where the shape's closed-form boundary discrepancy lives: the
  /// first vertex (two ends, n >= 2), the fork or middle vertex (fork), or
  /// the first vertex of weight >= 3 (one end). Empty when the shape has
  /// no closed form for this instance.
  std::optional<Vertex> key_vertex;
};

std::string describe(const KMConfig& config);

/// All configurations of the given shape with at most max_n vertices and
/// weights in [2, max_weight], restricted to negative definite graphs.
std::vector<KMConfig> enumerate_km_configs(LcShape shape, int max_n, int max_weight);

/// If (Y, (1 - delta) C) passes the delta-lc test, checks
///   multiplicity_floor  mult_{E_k} pi^*C > delta / (cap_n + 1) for every k
///   determinant_cap     Delta(G) < (cap_n + 1) / delta
/// Both are vacuous otherwise. Requires 0 < delta < 1/6 and
/// config.graph.size() <= cap_n (throws std::invalid_argument).
LemmaReport verify_mult_bound(const KMConfig& config, const Rational& delta, int cap_n);

/// Closed-form boundary discrepancy at the key vertex, computed from
/// determinants of explicit vertex deletions:
///   two ends:  delta (Delta(G - v_1) + 1) / Delta(G)
///   fork:      4 delta / Delta(G)
///   one end:   i / Delta(G) + delta Delta(G - v_1..v_i) / Delta(G)
std::optional<Rational> closed_form_boundary(const KMConfig& config, const Rational& delta);

/// Compares closed_form_boundary against boundary_discrepancy ("closed_form")
/// and, for the one-end shape, checks the strict bound
/// value < i / Delta(G) + delta / (i + 1) ("closed_form_gap").
std::vector<AssertionResult> check_closed_form(const KMConfig& config, const Rational& delta);

struct AssertionTally {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t vacuous = 0;

  friend bool operator==(const AssertionTally&, const AssertionTally&) = default;
};

struct SweepSummary {
  std::uint64_t instances = 0;
  std::map<std::string, AssertionTally> tallies;
  /// Reports of failing instances, in enumeration order.
  std::vector<LemmaReport> failures;
  /// When set, ok() also requires at least one non-vacuous outcome for
  /// every tallied assertion.
  bool require_non_vacuous = false;

  void add(const LemmaReport& report);
  void merge(const SweepSummary& other);
  std::uint64_t failure_count() const;
  std::uint64_t non_vacuous(const std::string& id) const;
  bool ok() const;

  std::string summary_line(const std::string& label) const;
  std::string to_json() const;
};

using ProgressFn = std::function<void(std::uint64_t done, std::uint64_t total)>;

/// verify_chain_lemma over every chain in `space`. With workers > 1 the
/// space is split by first weight; the merged result does not depend on the
/// worker count.
SweepSummary sweep_chain_lemma(ChainSpace space, unsigned workers = 1,
                               const ProgressFn& progress = {});

/// verify_mult_bound and check_closed_form over every configuration of
/// `shape`. cap_n defaults to each configuration's own vertex count.
SweepSummary sweep_mult_bound(LcShape shape, int max_n, int max_weight, const Rational& delta,
                              std::optional<int> cap_n = std::nullopt, unsigned workers = 1,
                              const ProgressFn& progress = {});

/// Exploration of forks whose two short arms are arbitrary single vertices
/// (not necessarily (-2)-curves), curve at the end of the long arm. Counts
/// only; nothing is asserted.
struct ForkSurvey {
  std::uint64_t configs = 0;
  std::uint64_t delta_lc = 0;
  std::uint64_t bound_violations = 0;
};
ForkSurvey survey_generalized_forks(int max_n, int max_weight, const Rational& delta);

}  // namespace kltgraph
