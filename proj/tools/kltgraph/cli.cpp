#include "kltgraph/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "kltgraph/bounds.hpp"
#include "kltgraph/discrepancy.hpp"
#include "kltgraph/dual_graph.hpp"
#include "kltgraph/graph_io.hpp"
#include "kltgraph/hj.hpp"
#include "kltgraph/verify.hpp"

namespace kltgraph::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned worker_count() {
  if (const char* env = std::getenv("KLTGRAPH_WORKERS")) {
    try {
      int n = std::stoi(env);
      if (n >= 1) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("KLTGRAPH_WORKERS must be a positive integer, got '") + env + "'");
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

Rational parse_rational(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(flag + " expects an exact rational p/q, got '" + text + "'");
  }
}

GraphInput load_valid(const std::string& file) {
  GraphInput input = load_graph_file(file);
  ValidationReport report = validate(input.graph);
  if (!report.valid()) {
    std::string message;
    for (const auto& p : report.problems) message += (message.empty() ? "" : "; ") + p;
    throw ParseError(file, 0, "invalid graph: " + message);
  }
  return input;
}

Vertex vertex_arg(const GraphInput& input, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > input.graph.size()) {
    throw UsageError("--vertex " + std::to_string(k) + " out of range 1.." +
                     std::to_string(input.graph.size()));
  }
  return static_cast<Vertex>(k - 1);
}

const CurveAttachment& require_curve(const GraphInput& input, const std::string& file) {
  if (!input.curve) throw ParseError(file, 0, "graph has no curve attachment");
  return *input.curve;
}

Rational open_unit(const std::string& flag, const std::string& text) {
  Rational d = parse_rational(flag, text);
  if (d <= Rational(0) || d >= Rational(1)) throw UsageError(flag + " must lie in (0, 1)");
  return d;
}

ProgressFn progress_to(std::ostream& err, const std::string& label) {
  return [&err, label](std::uint64_t done, std::uint64_t total) {
    err << label << ": " << done << "/" << total << "\n";
  };
}

void emit(std::ostream& out, const std::string& format, const Json& json,
          const std::vector<std::pair<std::string, std::string>>& text) {
  if (format == "json") {
    out << json.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : text) out << key << ": " << value << "\n";
}

struct Options {
  std::string format = "text";
  std::string file;
  std::vector<int> remove;
  int vertex = 0;
  std::optional<std::string> delta;
  std::string epsilon;
  std::int64_t hj_n = 0;
  std::int64_t hj_a = 0;
  int max_len = 0;
  int max_weight = 0;
  int max_n = 0;
  int km_case = 0;
  std::optional<int> cap_n;
  std::int64_t q = 0;
  std::int64_t qmax = 0;
};

int cmd_delta(const Options& o, std::ostream& out) {
  GraphInput input = load_graph_file(o.file);
  VertexSet removed(input.graph.size());
  Json indices = Json::array();
  for (int i : o.remove) {
    if (i < 1 || static_cast<std::size_t>(i) > input.graph.size()) {
      throw UsageError("--remove index " + std::to_string(i) + " out of range 1.." +
                       std::to_string(input.graph.size()));
    }
    removed.insert(static_cast<Vertex>(i - 1));
    indices.push_back(i);
  }
  std::string value = delta(input.graph, removed).get_str();
  if (o.format == "json") {
    out << Json{{"removed", indices}, {"delta", value}}.dump(2) << "\n";
  } else {
    out << value << "\n";
  }
  return kExitOk;
}

int cmd_discrepancy(const Options& o, std::ostream& out) {
  GraphInput input = load_valid(o.file);
  Vertex k = vertex_arg(input, o.vertex);
  Json json{{"vertex", o.vertex}};
  std::vector<std::pair<std::string, std::string>> text{{"vertex", std::to_string(o.vertex)}};
  std::string a = log_discrepancy(input.graph, k).str();
  json["log_discrepancy"] = a;
  text.emplace_back("log_discrepancy", a);
  if (o.delta) {
    Rational d = open_unit("--delta", *o.delta);
    json["delta"] = d.str();
    text.emplace_back("delta", d.str());
    if (input.curve) {
      std::string mult = mult_pullback(input.graph, *input.curve, k).str();
      std::string b = boundary_discrepancy(input.graph, *input.curve, k, d).str();
      json["mult_pullback"] = mult;
      json["boundary_discrepancy"] = b;
      text.emplace_back("mult_pullback", mult);
      text.emplace_back("boundary_discrepancy", b);
    } else {
      json["boundary_discrepancy"] = a;
      text.emplace_back("boundary_discrepancy", a);
    }
  }
  emit(out, o.format, json, text);
  return kExitOk;
}

int cmd_mult(const Options& o, std::ostream& out) {
  GraphInput input = load_valid(o.file);
  const CurveAttachment& curve = require_curve(input, o.file);
  Vertex k = vertex_arg(input, o.vertex);
  std::string mult = mult_pullback(input.graph, curve, k).str();
  emit(out, o.format, Json{{"vertex", o.vertex}, {"mult_pullback", mult}},
       {{"vertex", std::to_string(o.vertex)}, {"mult_pullback", mult}});
  return kExitOk;
}

int cmd_lc_test(const Options& o, std::ostream& out) {
  GraphInput input = load_valid(o.file);
  Rational d = open_unit("--delta", *o.delta);
  LcTest result = lc_test(input.graph, input.curve, d);
  std::string worst = std::to_string(result.worst_vertex + 1);
  emit(out, o.format,
       Json{{"delta", d.str()},
            {"delta_lc", result.holds},
            {"minimum", result.minimum.str()},
            {"worst_vertex", result.worst_vertex + 1}},
       {{"delta", d.str()},
        {"delta_lc", result.holds ? "yes" : "no"},
        {"minimum", result.minimum.str() + " at vertex " + worst}});
  return kExitOk;
}

std::string bracketed(const std::vector<int>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(values[i]);
  }
  return s + "]";
}

int cmd_hj(const Options& o, std::ostream& out) {
  CyclicQuotient q(o.hj_n, o.hj_a);
  std::vector<int> weights = hj_expansion(q);
  BigInt d = delta(DualGraph::chain(weights));
  bool matches = d == BigInt(static_cast<long>(q.order()));
  if (o.format == "json") {
    out << Json{{"n", q.order()},
                {"a", q.weight()},
                {"expansion", weights},
                {"delta", d.get_str()},
                {"matches", matches}}
               .dump(2)
        << "\n";
  } else {
    out << bracketed(weights) << "\n";
    out << "Δ = " << d.get_str()
        << (matches ? " (matches n)" : " (MISMATCH, n = " + std::to_string(q.order()) + ")")
        << "\n";
  }
  return matches ? kExitOk : kExitVerificationFailed;
}

int report_sweep(const SweepSummary& summary, const std::string& label, std::ostream& out) {
  out << summary.summary_line(label) << "\n";
  out << summary.to_json() << "\n";
  return summary.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_verify_chain_lemma(const Options& o, std::ostream& out, std::ostream& err) {
  ChainSpace space{o.max_len, o.max_weight};
  SweepSummary summary =
      sweep_chain_lemma(space, worker_count(), progress_to(err, "verify-chain-lemma"));
  return report_sweep(summary, "chain lemma", out);
}

int cmd_verify_mult_bound(const Options& o, std::ostream& out, std::ostream& err) {
  Rational d = parse_rational("--delta", *o.delta);
  if (d <= Rational(0) || d >= Rational(1, 6)) throw UsageError("--delta must lie in (0, 1/6)");
  auto shape = static_cast<LcShape>(o.km_case);
  SweepSummary summary = sweep_mult_bound(shape, o.max_n, o.max_weight, d, o.cap_n, worker_count(),
                                          progress_to(err, "verify-mult-bound"));
  return report_sweep(summary, "mult bound case " + std::to_string(o.km_case), out);
}

int cmd_bounds(const Options& o, std::ostream& out) {
  Rational eps = parse_rational("--epsilon", o.epsilon);
  std::optional<Rational> d;
  if (o.delta) d = parse_rational("--delta", *o.delta);
  BoundSheet sheet = bound_sheet(BoundParams(eps, d));
  out << (o.format == "text" ? sheet.to_text() : sheet.to_json() + "\n");
  return kExitOk;
}

int cmd_ambro(const Options& o, std::ostream& out) {
  Rational t = ambro_example_t(o.q);
  Json json{{"q", o.q}, {"t", t.str()}};
  std::vector<std::pair<std::string, std::string>> text{{"q", std::to_string(o.q)},
                                                        {"t", t.str()}};
  bool consistent = true;
  if (o.q >= 4) {
    Rational eps(1, o.q);
    Rational mu2 = mu2_lower_bound(eps);
    Rational ratio = t / mu2_floor(eps);
    consistent = exceeds(t, mu2);
    json["mu2_lb"] = mu2.str();
    json["t_over_mu2_floor"] = ratio.str();
    json["t_exceeds_mu2_lb"] = consistent;
    text.emplace_back("mu2_lb", mu2.str());
    text.emplace_back("t_over_mu2_floor", ratio.str() + " ~ " + approx_decimal(ratio));
    text.emplace_back("t_exceeds_mu2_lb", consistent ? "yes" : "no");
  }
  emit(out, o.format, json, text);
  return consistent ? kExitOk : kExitVerificationFailed;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  err << "sweep: q = 4.." << o.qmax << "\n";
  GridReport report = sweep_grid(o.qmax);
  std::uint64_t failed = 0;
  for (const auto& c : report.checks) failed += c.failed ? 1 : 0;
  out << "grid q=4.." << o.qmax << ": checks=" << report.checks.size() << " failed=" << failed
      << " -> " << (report.ok() ? "OK" : "FAIL") << "\n";
  out << report.to_json() << "\n";
  return report.ok() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact discrepancy and bound computations on surface singularity dual graphs",
               "kltgraph"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"text", "json"};

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  };

  auto* delta_cmd = app.add_subcommand("delta", "|det| of the intersection matrix");
  delta_cmd->add_option("file", o.file, "Graph file")->required();
  delta_cmd->add_option("--remove", o.remove, "1-based vertices to delete, comma separated")
      ->delimiter(',');
  add_format(delta_cmd);

  auto* disc_cmd = app.add_subcommand("discrepancy", "Log discrepancy of one exceptional curve");
  disc_cmd->add_option("file", o.file, "Graph file")->required();
  disc_cmd->add_option("--vertex", o.vertex, "1-based vertex")->required();
  disc_cmd->add_option("--delta", o.delta, "Boundary (1 - delta) C, delta = p/q");
  add_format(disc_cmd);

  auto* mult_cmd = app.add_subcommand("mult", "Multiplicity of the curve's pull-back");
  mult_cmd->add_option("file", o.file, "Graph file")->required();
  mult_cmd->add_option("--vertex", o.vertex, "1-based vertex")->required();
  add_format(mult_cmd);

  auto* lc_cmd = app.add_subcommand("lc-test", "delta-lc test of (Y, (1 - delta) C)");
  lc_cmd->add_option("file", o.file, "Graph file")->required();
  lc_cmd->add_option("--delta", o.delta, "delta = p/q")->required();
  add_format(lc_cmd);

  auto* hj_cmd = app.add_subcommand("hj", "Hirzebruch-Jung chain of (1/n)(1, a)");
  hj_cmd->add_option("n", o.hj_n, "Order")->required();
  hj_cmd->add_option("a", o.hj_a, "Weight")->required();
  add_format(hj_cmd);

  auto* chain_cmd = app.add_subcommand("verify-chain-lemma", "Exhaustive chain determinant checks");
  chain_cmd->add_option("--max-len", o.max_len, "Longest chain")->required()->check(
      CLI::PositiveNumber);
  chain_cmd->add_option("--max-weight", o.max_weight, "Largest weight")->required()->check(
      CLI::Range(2, 1000));

  auto* mult_bound_cmd =
      app.add_subcommand("verify-mult-bound", "Exhaustive multiplicity bound checks");
  mult_bound_cmd->add_option("--case", o.km_case, "Shape: 1 two ends, 2 fork, 3 one end")
      ->required()
      ->check(CLI::Range(1, 3));
  mult_bound_cmd->add_option("--max-n", o.max_n, "Most vertices")->required()->check(
      CLI::PositiveNumber);
  mult_bound_cmd->add_option("--max-weight", o.max_weight, "Largest weight")->required()->check(
      CLI::Range(2, 1000));
  mult_bound_cmd->add_option("--delta", o.delta, "delta = p/q in (0, 1/6)")->required();
  mult_bound_cmd->add_option("--cap-n", o.cap_n, "N in delta/(N+1); default: vertex count")
      ->check(CLI::PositiveNumber);

  auto* bounds_cmd = app.add_subcommand("bounds", "Exact bound sheet");
  bounds_cmd->add_option("--epsilon", o.epsilon, "epsilon = p/q in (0, 1/3)")->required();
  bounds_cmd->add_option("--delta", o.delta, "delta = p/q in (0, epsilon); default epsilon/2");
  bounds_cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember(formats))
      ->default_str("json");

  auto* ambro_cmd = app.add_subcommand("ambro", "Threshold of the toric example family");
  ambro_cmd->add_option("--q", o.q, "q >= 1")->required();
  add_format(ambro_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "Exact bound comparisons on epsilon = 1/q");
  sweep_cmd->add_option("--qmax", o.qmax, "Largest q (>= 4)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (bounds_cmd->parsed() && bounds_cmd->count("--format") == 0) o.format = "json";

  try {
    if (delta_cmd->parsed()) return cmd_delta(o, out);
    if (disc_cmd->parsed()) return cmd_discrepancy(o, out);
    if (mult_cmd->parsed()) return cmd_mult(o, out);
    if (lc_cmd->parsed()) return cmd_lc_test(o, out);
    if (hj_cmd->parsed()) return cmd_hj(o, out);
    if (chain_cmd->parsed()) return cmd_verify_chain_lemma(o, out, err);
    if (mult_bound_cmd->parsed()) return cmd_verify_mult_bound(o, out, err);
    if (bounds_cmd->parsed()) return cmd_bounds(o, out);
    if (ambro_cmd->parsed()) return cmd_ambro(o, out);
    if (sweep_cmd->parsed()) return cmd_sweep(o, out, err);
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace kltgraph::cli
