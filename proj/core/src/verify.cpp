#include "kltgraph/verify.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace kltgraph {

namespace {

std::string join_ints(const auto& values) {
  std::string out = "[";
  bool first = true;
  for (auto v : values) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "]";
}

AssertionResult judged(std::string id, bool ok, std::string lhs, std::string rhs) {
  AssertionResult r{std::move(id), ok ? Outcome::kPass : Outcome::kFail, {}, {}};
  if (!ok) {
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
  }
  return r;
}

AssertionResult vacuous(std::string id) { return {std::move(id), Outcome::kVacuous, {}, {}}; }

std::string d_name(std::size_t k) { return "D_" + std::to_string(k); }

std::string d_value(std::size_t k, const BigInt& v) { return d_name(k) + "=" + v.get_str(); }

const char* shape_name(LcShape shape) {
  switch (shape) {
    case LcShape::kTwoEnds: return "two-ends";
    case LcShape::kFork: return "fork";
    case LcShape::kOneEnd: return "one-end";
  }
  return "?";
}

void require_bounds(int max_n, int max_weight) {
  if (max_n < 1 || max_weight < 2) {
    throw std::invalid_argument("need max_n >= 1 and max_weight >= 2");
  }
}

// Odometer over weight vectors of a fixed length, positions [from, len).
bool advance(std::vector<int>& w, std::size_t from, int max_weight) {
  for (std::size_t i = w.size(); i-- > from;) {
    if (w[i] < max_weight) {
      ++w[i];
      std::fill(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end(), 2);
      return true;
    }
  }
  return false;
}

template <typename Fn>
void for_each_weight_vector(std::size_t len, int max_weight, Fn&& fn) {
  std::vector<int> w(len, 2);
  do {
    fn(w);
  } while (advance(w, 0, max_weight));
}

}  // namespace

// ---------------------------------------------------------------------------
// Chain enumeration

ChainEnumerator::ChainEnumerator(ChainSpace space, std::optional<int> first_weight)
    : space_(space), first_weight_(first_weight) {
  if (space.max_len < 1 || space.max_weight < 2) {
    throw std::invalid_argument("chain space needs max_len >= 1 and max_weight >= 2");
  }
  if (first_weight && (*first_weight < 2 || *first_weight > space.max_weight)) {
    throw std::invalid_argument("first weight outside [2, max_weight]");
  }
}

const std::vector<int>* ChainEnumerator::next_weights() {
  if (done_) return nullptr;
  const std::size_t fixed = first_weight_ ? 1 : 0;
  if (!started_) {
    started_ = true;
    current_.assign(1, first_weight_.value_or(2));
    return &current_;
  }
  if (advance(current_, fixed, space_.max_weight)) return &current_;
  if (current_.size() == static_cast<std::size_t>(space_.max_len)) {
    done_ = true;
    return nullptr;
  }
  current_.assign(current_.size() + 1, 2);
  if (first_weight_) current_[0] = *first_weight_;
  return &current_;
}

std::optional<DualGraph> ChainEnumerator::next() {
  const auto* w = next_weights();
  if (!w) return std::nullopt;
  return DualGraph::chain(*w);
}

std::uint64_t ChainEnumerator::count(ChainSpace space) {
  std::uint64_t total = 0, power = 1;
  for (int n = 1; n <= space.max_len; ++n) {
    power *= static_cast<std::uint64_t>(space.max_weight - 1);
    total += power;
  }
  return total;
}

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kPass: return "pass";
    case Outcome::kFail: return "fail";
    case Outcome::kVacuous: return "vacuous";
  }
  return "?";
}

bool LemmaReport::passed() const {
  return std::none_of(assertions.begin(), assertions.end(),
                      [](const auto& a) { return a.outcome == Outcome::kFail; });
}

// ---------------------------------------------------------------------------
// Chain determinant lemma

LemmaReport verify_chain_lemma(const DualGraph& chain) {
  if (!chain.is_ordered_chain()) throw GraphError("chain lemma needs an ordered chain");
  const std::size_t n = chain.size();
  const std::vector<int> weights(chain.weights().begin(), chain.weights().end());
  auto m = [&](std::size_t i) { return static_cast<long>(weights[i - 1]); };  // 1-based

  // d[k] = Delta(G minus v_1..v_k); d[n] = Delta(empty) = 1; d[n+1] := 0.
  std::vector<BigInt> d(n + 2);
  d[0] = delta(chain);
  for (std::size_t k = 1; k <= n; ++k) d[k] = delta(chain, path(chain, 0, k - 1));
  d[n + 1] = 0;

  LemmaReport report;
  report.instance = "chain" + join_ints(weights);
  auto& out = report.assertions;

  {
    const BigInt rhs = m(1) * d[1] - d[2];
    out.push_back(judged("first_row_recurrence", d[0] == rhs, d_value(0, d[0]),
                         "m_1*D_1-D_2=" + rhs.get_str()));
  }

  if (n < 3) {
    out.push_back(vacuous("shifted_recurrence"));
  } else {
    AssertionResult r{"shifted_recurrence", Outcome::kPass, {}, {}};
    for (std::size_t k = 1; k + 2 <= n; ++k) {
      const BigInt rhs = m(k + 1) * d[k + 1] - d[k + 2];
      if (d[k] != rhs) {
        r = judged(r.id, false, d_value(k, d[k]),
                   "m_" + std::to_string(k + 1) + "*" + d_name(k + 1) + "-" + d_name(k + 2) +
                       "=" + rhs.get_str());
        break;
      }
    }
    out.push_back(std::move(r));
  }

  {
    AssertionResult r{"strict_descent", Outcome::kPass, {}, {}};
    for (std::size_t k = 0; k < n; ++k) {
      if (!(d[k] > d[k + 1])) {
        r = judged(r.id, false, d_value(k, d[k]), d_value(k + 1, d[k + 1]));
        break;
      }
    }
    if (r.outcome == Outcome::kPass && d[n] != 1) r = judged(r.id, false, d_value(n, d[n]), "1");
    out.push_back(std::move(r));
  }

  {
    const bool all_two = std::all_of(weights.begin(), weights.end(), [](int w) { return w == 2; });
    AssertionResult r{"lower_bound", Outcome::kPass, {}, {}};
    for (std::size_t k = 0; k <= n; ++k) {
      const long bound = static_cast<long>(n - k + 1);
      const bool ok = all_two ? d[k] == bound : d[k] >= bound;
      if (!ok) {
        r = judged(r.id, false, d_value(k, d[k]),
                   std::string(all_two ? "== " : ">= ") + std::to_string(bound));
        break;
      }
    }
    out.push_back(std::move(r));
  }

  if (d[0] == d[1] + 1) {
    out.push_back(judged("unit_step_forces_all_two", d[0] == static_cast<long>(n + 1),
                         d_value(0, d[0]), "n+1=" + std::to_string(n + 1)));
  } else {
    out.push_back(vacuous("unit_step_forces_all_two"));
  }

  {
    AssertionResult r = vacuous("heavy_vertex_gap");
    for (std::size_t i = 1; i <= n; ++i) {
      if (m(i) < 3) continue;
      const BigInt rhs = static_cast<long>(i + 1) * d[i];
      if (d[0] > rhs) {
        r.outcome = Outcome::kPass;
      } else {
        r = judged(r.id, false, d_value(0, d[0]),
                   "(" + std::to_string(i + 1) + ")*" + d_value(i, d[i]) + "=" + rhs.get_str());
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Log canonical configurations

std::string describe(const KMConfig& config) {
  std::ostringstream os;
  os << shape_name(config.shape) << " w=" << join_ints(config.graph.weights()) << " e=[";
  bool first = true;
  for (auto [a, b] : config.graph.edges()) {
    os << (first ? "" : ",") << a + 1 << "-" << b + 1;
    first = false;
  }
  os << "] c=" << join_ints(config.curve.values());
  return os.str();
}

std::vector<KMConfig> enumerate_km_configs(LcShape shape, int max_n, int max_weight) {
  require_bounds(max_n, max_weight);
  std::vector<KMConfig> out;
  auto keep = [&](DualGraph graph, std::vector<std::int64_t> curve, std::optional<Vertex> key) {
    if (!validate(graph).negative_definite) return;
    out.push_back(KMConfig{shape, std::move(graph), CurveAttachment(std::move(curve)), key});
  };

  switch (shape) {
    case LcShape::kTwoEnds:
      for (int n = 1; n <= max_n; ++n) {
        for_each_weight_vector(n, max_weight, [&](const std::vector<int>& w) {
          std::vector<std::int64_t> c(n, 0);
          if (n == 1) {
            c[0] = 2;
          } else {
            c.front() = 1;
            c.back() = 1;
          }
          keep(DualGraph::chain(w), std::move(c), Vertex{0});
        });
      }
      break;

    case LcShape::kFork:
      if (max_n >= 3) {
        for (int w = 2; w <= max_weight; ++w) keep(DualGraph::chain({2, w, 2}), {0, 1, 0}, 1);
      }
      // Vertices: leaves 0 and 1, fork 2, long arm 3..n-1 with C at n-1.
      for (int n = 4; n <= max_n; ++n) {
        for_each_weight_vector(n - 2, max_weight, [&](const std::vector<int>& rest) {
          std::vector<int> weights{2, 2};
          weights.insert(weights.end(), rest.begin(), rest.end());
          std::vector<std::pair<Vertex, Vertex>> edges{{0, 2}, {1, 2}};
          for (Vertex v = 2; v + 1 < static_cast<Vertex>(n); ++v) edges.emplace_back(v, v + 1);
          std::vector<std::int64_t> c(n, 0);
          c.back() = 1;
          keep(DualGraph(std::move(weights), std::move(edges)), std::move(c), Vertex{2});
        });
      }
      break;

    case LcShape::kOneEnd:
      for (int n = 1; n <= max_n; ++n) {
        for_each_weight_vector(n, max_weight, [&](const std::vector<int>& w) {
          std::vector<std::int64_t> c(n, 0);
          c.front() = 1;
          std::optional<Vertex> key;
          const auto heavy = std::find_if(w.begin(), w.end(), [](int x) { return x >= 3; });
          if (heavy != w.end()) key = static_cast<Vertex>(heavy - w.begin());
          keep(DualGraph::chain(w), std::move(c), key);
        });
      }
      break;
  }
  return out;
}

LemmaReport verify_mult_bound(const KMConfig& config, const Rational& delta, int cap_n) {
  if (delta <= Rational(0) || delta >= Rational(1, 6)) {
    throw std::invalid_argument("multiplicity bound needs 0 < delta < 1/6, got " + delta.str());
  }
  if (cap_n < 0 || static_cast<std::size_t>(cap_n) < config.graph.size()) {
    throw std::invalid_argument("cap N must be at least the number of exceptional curves");
  }
  LemmaReport report;
  report.instance = describe(config) + " delta=" + delta.str() + " N=" + std::to_string(cap_n);

  if (!is_delta_lc(config.graph, config.curve, delta)) {
    report.assertions.push_back(vacuous("multiplicity_floor"));
    report.assertions.push_back(vacuous("determinant_cap"));
    return report;
  }

  const Rational floor = delta / Rational(cap_n + 1);
  const auto mults = mult_pullbacks(config.graph, config.curve);
  const auto smallest = std::min_element(mults.begin(), mults.end());
  report.assertions.push_back(judged(
      "multiplicity_floor", *smallest > floor,
      "mult_E" + std::to_string(smallest - mults.begin() + 1) + "=" + smallest->str(),
      "delta/(N+1)=" + floor.str()));

  const Rational det(kltgraph::delta(config.graph));
  const Rational cap = Rational(cap_n + 1) / delta;
  report.assertions.push_back(judged("determinant_cap", det < cap, "Delta=" + det.str(),
                                     "(N+1)/delta=" + cap.str()));
  return report;
}

std::optional<Rational> closed_form_boundary(const KMConfig& config, const Rational& delta) {
  if (!config.key_vertex) return std::nullopt;
  const DualGraph& g = config.graph;
  const Rational total(kltgraph::delta(g));
  switch (config.shape) {
    case LcShape::kTwoEnds: {
      if (g.size() == 1) return Rational(2) * delta / total;
      const Rational rest(kltgraph::delta(g, VertexSet(g.size(), {0})));
      return delta * (rest + Rational(1)) / total;
    }
    case LcShape::kFork:
      return Rational(4) * delta / total;
    case LcShape::kOneEnd: {
      const Vertex i = *config.key_vertex;  // 0-based; the 1-based index is i + 1
      VertexSet head(g.size());
      for (Vertex v = 0; v <= i; ++v) head.insert(v);
      const Rational tail(kltgraph::delta(g, head));
      return Rational(static_cast<long>(i + 1)) / total + delta * tail / total;
    }
  }
  return std::nullopt;
}

std::vector<AssertionResult> check_closed_form(const KMConfig& config, const Rational& delta) {
  std::vector<AssertionResult> out;
  const auto expected = closed_form_boundary(config, delta);
  if (!expected) {
    out.push_back(vacuous("closed_form"));
    if (config.shape == LcShape::kOneEnd) out.push_back(vacuous("closed_form_gap"));
    return out;
  }
  const Vertex k = *config.key_vertex;
  const Rational actual = boundary_discrepancy(config.graph, config.curve, k, delta);
  out.push_back(judged("closed_form", actual == *expected,
                       "a(E_" + std::to_string(k + 1) + ")=" + actual.str(),
                       "closed form=" + expected->str()));
  if (config.shape == LcShape::kOneEnd) {
    const long i = static_cast<long>(k + 1);
    const Rational gap =
        Rational(i) / Rational(kltgraph::delta(config.graph)) + delta / Rational(i + 1);
    out.push_back(judged("closed_form_gap", *expected < gap, "value=" + expected->str(),
                         "i/Delta+delta/(i+1)=" + gap.str()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps

void SweepSummary::add(const LemmaReport& report) {
  ++instances;
  for (const auto& a : report.assertions) {
    auto& t = tallies[a.id];
    switch (a.outcome) {
      case Outcome::kPass: ++t.pass; break;
      case Outcome::kFail: ++t.fail; break;
      case Outcome::kVacuous: ++t.vacuous; break;
    }
  }
  if (!report.passed()) failures.push_back(report);
}

void SweepSummary::merge(const SweepSummary& other) {
  instances += other.instances;
  for (const auto& [id, t] : other.tallies) {
    auto& mine = tallies[id];
    mine.pass += t.pass;
    mine.fail += t.fail;
    mine.vacuous += t.vacuous;
  }
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::uint64_t SweepSummary::failure_count() const {
  std::uint64_t total = 0;
  for (const auto& [id, t] : tallies) total += t.fail;
  return total;
}

std::uint64_t SweepSummary::non_vacuous(const std::string& id) const {
  const auto it = tallies.find(id);
  return it == tallies.end() ? 0 : it->second.pass + it->second.fail;
}

bool SweepSummary::ok() const {
  if (failure_count() != 0) return false;
  if (require_non_vacuous) {
    for (const auto& [id, t] : tallies)
      if (t.pass + t.fail == 0) return false;
  }
  return true;
}

std::string SweepSummary::summary_line(const std::string& label) const {
  AssertionTally total;
  for (const auto& [id, t] : tallies) {
    total.pass += t.pass;
    total.fail += t.fail;
    total.vacuous += t.vacuous;
  }
  std::ostringstream os;
  os << label << ": instances=" << instances << " pass=" << total.pass << " fail=" << total.fail
     << " vacuous=" << total.vacuous << " -> " << (ok() ? "OK" : "FAIL");
  return os.str();
}

std::string SweepSummary::to_json() const {
  nlohmann::ordered_json j;
  j["instances"] = instances;
  j["ok"] = ok();
  auto& counts = j["assertions"];
  counts = nlohmann::ordered_json::object();
  for (const auto& [id, t] : tallies) {
    counts[id] = {{"pass", t.pass}, {"fail", t.fail}, {"vacuous", t.vacuous}};
  }
  auto& fails = j["failures"];
  fails = nlohmann::ordered_json::array();
  for (const auto& report : failures) {
    nlohmann::ordered_json entry;
    entry["instance"] = report.instance;
    entry["assertions"] = nlohmann::ordered_json::array();
    for (const auto& a : report.assertions) {
      if (a.outcome != Outcome::kFail) continue;
      entry["assertions"].push_back({{"id", a.id}, {"lhs", a.lhs}, {"rhs", a.rhs}});
    }
    fails.push_back(std::move(entry));
  }
  return j.dump(2);
}

namespace {

// Runs `parts` independent jobs on up to `workers` threads and merges their
// summaries in job order.
template <typename Job>
SweepSummary run_partitioned(std::size_t parts, unsigned workers, const ProgressFn& progress,
                             Job&& job) {
  std::vector<SweepSummary> results(parts);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t p; (p = next.fetch_add(1)) < parts;) results[p] = job(p);
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(parts)));
  if (workers == 1) {
    for (std::size_t p = 0; p < parts; ++p) {
      results[p] = job(p);
      if (progress) progress(p + 1, parts);
    }
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (progress) progress(parts, parts);
  }
  SweepSummary merged;
  for (const auto& r : results) merged.merge(r);
  return merged;
}

}  // namespace

SweepSummary sweep_chain_lemma(ChainSpace space, unsigned workers, const ProgressFn& progress) {
  (void)ChainEnumerator(space);  // validates
  const auto parts = static_cast<std::size_t>(space.max_weight - 1);
  return run_partitioned(parts, workers, progress, [&](std::size_t p) {
    SweepSummary s;
    ChainEnumerator chains(space, static_cast<int>(p) + 2);
    while (auto chain = chains.next()) s.add(verify_chain_lemma(*chain));
    return s;
  });
}

SweepSummary sweep_mult_bound(LcShape shape, int max_n, int max_weight, const Rational& delta,
                              std::optional<int> cap_n, unsigned workers,
                              const ProgressFn& progress) {
  const auto configs = enumerate_km_configs(shape, max_n, max_weight);
  constexpr std::size_t kChunk = 256;
  const std::size_t parts = std::max<std::size_t>(1, (configs.size() + kChunk - 1) / kChunk);
  SweepSummary merged = run_partitioned(parts, workers, progress, [&](std::size_t p) {
    SweepSummary s;
    const std::size_t end = std::min(configs.size(), (p + 1) * kChunk);
    for (std::size_t i = p * kChunk; i < end; ++i) {
      const auto& config = configs[i];
      LemmaReport report = verify_mult_bound(
          config, delta, cap_n.value_or(static_cast<int>(config.graph.size())));
      for (auto& a : check_closed_form(config, delta)) report.assertions.push_back(std::move(a));
      s.add(report);
    }
    return s;
  });
  merged.require_non_vacuous = true;
  return merged;
}

ForkSurvey survey_generalized_forks(int max_n, int max_weight, const Rational& delta) {
  require_bounds(max_n, max_weight);
  ForkSurvey survey;
  for (int n = 4; n <= max_n; ++n) {
    for_each_weight_vector(n, max_weight, [&](const std::vector<int>& weights) {
      if (weights[0] == 2 && weights[1] == 2) return;  // the standard shape
      std::vector<std::pair<Vertex, Vertex>> edges{{0, 2}, {1, 2}};
      for (Vertex v = 2; v + 1 < static_cast<Vertex>(n); ++v) edges.emplace_back(v, v + 1);
      DualGraph graph(weights, std::move(edges));
      if (!validate(graph).negative_definite) return;
      std::vector<std::int64_t> c(n, 0);
      c.back() = 1;
      KMConfig config{LcShape::kFork, std::move(graph), CurveAttachment(std::move(c)), Vertex{2}};
      ++survey.configs;
      const auto report = verify_mult_bound(config, delta, n);
      if (report.assertions.front().outcome == Outcome::kVacuous) return;
      ++survey.delta_lc;
      if (!report.passed()) ++survey.bound_violations;
    });
  }
  return survey;
}

}  // namespace kltgraph
