#include "kltgraph/bounds.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace kltgraph {

namespace {

const Rational kOneThird(1, 3);
const Rational kOneSixth(1, 6);

void require_epsilon(const Rational& epsilon) {
  if (epsilon <= Rational(0) || epsilon >= kOneThird) {
    throw std::invalid_argument("epsilon must lie in (0, 1/3), got " + epsilon.str());
  }
}

void require_small_delta(const Rational& delta) {
  if (delta <= Rational(0) || delta >= kOneSixth) {
    throw std::invalid_argument("delta must lie in (0, 1/6), got " + delta.str());
  }
}

}  // namespace

BoundParams::BoundParams(Rational epsilon, std::optional<Rational> delta)
    : epsilon_(std::move(epsilon)) {
  require_epsilon(epsilon_);
  delta_ = delta ? *delta : epsilon_ / Rational(2);
  if (delta_ <= Rational(0) || delta_ >= epsilon_) {
    throw std::invalid_argument("delta must lie in (0, epsilon), got " + delta_.str());
  }
}

Rational t0_lower_bound(const Rational& epsilon, const Rational& delta) {
  if (delta <= Rational(0) || delta >= epsilon || epsilon >= Rational(1)) {
    throw std::invalid_argument("t0 bound needs 0 < delta < epsilon < 1");
  }
  const Rational d2 = delta * delta;
  return d2 * (epsilon - delta) / (Rational(16) + Rational(4) * delta + d2 * (epsilon - Rational(1)));
}

Rational t0_lower_bound(const BoundParams& p) { return t0_lower_bound(p.epsilon(), p.delta()); }

Rational mu2_lower_bound(const Rational& epsilon) {
  require_epsilon(epsilon);
  return t0_lower_bound(epsilon, epsilon / Rational(2));
}

Rational mu2_floor(const Rational& epsilon) { return Rational(3) * pow(epsilon, 3) / Rational(400); }

Rational divisor_case_bound(const Rational& epsilon) {
  require_epsilon(epsilon);
  const Rational delta = epsilon / Rational(2);
  return epsilon * (epsilon - delta) / (Rational(2) + Rational(3) * epsilon + epsilon * epsilon);
}

Rational m2_upper_bound(const Rational& epsilon) {
  require_epsilon(epsilon);
  return Rational(2) / epsilon + Rational(4) + Rational(2, 3);
}

Rational volume_bound(const Rational& epsilon) {
  require_epsilon(epsilon);
  return Rational(3200) / pow(epsilon, 4);
}

DpfBound dpf_bound(const Rational& epsilon) {
  require_epsilon(epsilon);
  return {Rational(6) * (Rational(4) / epsilon) / mu2_floor(epsilon),
          Rational(6) * m2_upper_bound(epsilon) / mu2_lower_bound(epsilon)};
}

Rational conic_bound(const Rational& epsilon, int d) {
  if (d < 1 || d > 6) throw std::invalid_argument("conic bound needs 1 <= d <= 6");
  if (epsilon <= Rational(0) || epsilon >= Rational(1)) {
    throw std::invalid_argument("conic bound needs 0 < epsilon < 1");
  }
  return Rational(144 * (d + 2)) / (epsilon * epsilon);
}

Rational rank1_bound() { return Rational(64); }

AuxBounds aux_bounds(const Rational& delta) {
  require_small_delta(delta);
  const Rational inv = Rational(1) / delta;
  return {-Rational(2) * inv, Rational(8) * inv - Rational(1), inv,
          Rational(3) * inv - Rational(2), Rational(4) * inv - Rational(2)};
}

Rational ambro_example_t(std::int64_t q) {
  if (q < 1) throw std::invalid_argument("q must be a positive integer");
  const BigInt big(static_cast<long>(q));
  return Rational(BigInt(1), (big + 1) * (big * big + big + 1));
}

BoundSheet bound_sheet(const BoundParams& p) {
  const Rational& eps = p.epsilon();
  const auto dpf = dpf_bound(eps);
  BoundSheet s{eps,
               p.delta(),
               t0_lower_bound(p),
               mu2_lower_bound(eps),
               mu2_floor(eps),
               m2_upper_bound(eps),
               dpf.majorized,
               dpf.tight,
               conic_bound(eps, 6),
               rank1_bound(),
               volume_bound(eps),
               divisor_case_bound(eps),
               std::nullopt};
  if (p.delta() < kOneSixth) s.aux = aux_bounds(p.delta());
  return s;
}

namespace {

std::vector<std::pair<std::string, const Rational*>> sheet_fields(const BoundSheet& s) {
  return {{"epsilon", &s.epsilon},
          {"delta", &s.delta},
          {"t0_lb", &s.t0_lb},
          {"mu2_lb", &s.mu2_lb},
          {"mu2_floor", &s.mu2_floor},
          {"M2_ub", &s.m2_ub},
          {"dpf_bound", &s.dpf_bound},
          {"dpf_bound_tight", &s.dpf_bound_tight},
          {"conic_bound", &s.conic_bound},
          {"rank1_bound", &s.rank1_bound},
          {"volume_bound", &s.volume_bound},
          {"divisor_case_bound", &s.divisor_case_bound}};
}

std::vector<std::pair<std::string, const Rational*>> aux_fields(const AuxBounds& a) {
  return {{"c2_floor", &a.c2_floor},
          {"rho_cap", &a.rho_cap},
          {"p_cap", &a.p_cap},
          {"q_cap", &a.q_cap},
          {"pq_cap", &a.pq_cap}};
}

}  // namespace

std::string BoundSheet::to_json() const {
  nlohmann::ordered_json j;
  for (const auto& [name, value] : sheet_fields(*this)) j[name] = value->str();
  if (aux) {
    auto& a = j["aux"];
    for (const auto& [name, value] : aux_fields(*aux)) a[name] = value->str();
  }
  return j.dump(2);
}

std::string BoundSheet::to_text() const {
  std::ostringstream os;
  auto row = [&](const std::string& name, const Rational& v) {
    os << std::left << std::setw(20) << name << std::setw(28) << v.str() << "~ "
       << approx_decimal(v) << "\n";
  };
  for (const auto& [name, value] : sheet_fields(*this)) row(name, *value);
  if (aux) {
    for (const auto& [name, value] : aux_fields(*aux)) row("aux." + name, *value);
  }
  os << "(values after ~ are approximate)\n";
  return os.str();
}

bool exceeds(const Rational& lhs, const Rational& rhs) {
  return lhs.numerator() * rhs.denominator() > rhs.numerator() * lhs.denominator();
}

bool GridReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.failed == 0; });
}

std::string GridReport::to_json() const {
  nlohmann::ordered_json j;
  j["qmax"] = qmax;
  j["ok"] = ok();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json entry{{"name", c.name}, {"checked", c.checked}, {"failed", c.failed}};
    entry["first_failure_q"] =
        c.first_failure_q ? nlohmann::ordered_json(*c.first_failure_q) : nlohmann::ordered_json();
    j["checks"].push_back(std::move(entry));
  }
  return j.dump(2);
}

GridReport sweep_grid(std::int64_t qmax) {
  if (qmax < 4) throw std::invalid_argument("qmax must be at least 4");
  GridReport report;
  report.qmax = qmax;
  enum {
    kMuFloor,
    kVolumeDominance,
    kAmbroAbove,
    kAmbroRatio,
    kDivisorCase,
    kDpfTight,
    kT0Monotone,
    kCount
  };
  for (const char* name : {"mu2_exceeds_cubic_floor", "volume_dominates_other_cases",
                           "example_threshold_above_mu2", "example_ratio_between_1_and_140",
                           "divisor_case_exceeds_mu2", "dpf_tight_below_majorized",
                           "t0_increasing_in_epsilon"}) {
    report.checks.push_back(GridCheck{name, 0, 0, std::nullopt});
  }
  auto record = [&](int which, std::int64_t q, bool ok) {
    auto& c = report.checks[which];
    ++c.checked;
    if (!ok) {
      ++c.failed;
      if (!c.first_failure_q) c.first_failure_q = q;
    }
  };

  const Rational fixed_delta(BigInt(1), BigInt(static_cast<long>(qmax + 1)));
  std::optional<Rational> previous_t0;
  for (std::int64_t q = qmax; q >= 4; --q) {
    const Rational eps(BigInt(1), BigInt(static_cast<long>(q)));
    const Rational mu2 = mu2_lower_bound(eps);
    const Rational ambro = ambro_example_t(q);
    const Rational vol = volume_bound(eps);

    record(kMuFloor, q, exceeds(mu2, mu2_floor(eps)));
    record(kVolumeDominance, q,
           !exceeds(rank1_bound(), vol) && !exceeds(conic_bound(eps, 6), vol));
    record(kAmbroAbove, q, exceeds(ambro, mu2));
    const Rational ratio = ambro / mu2_floor(eps);
    record(kAmbroRatio, q, exceeds(ratio, Rational(1)) && exceeds(Rational(140), ratio));
    record(kDivisorCase, q, exceeds(divisor_case_bound(eps), mu2));
    const auto dpf = dpf_bound(eps);
    record(kDpfTight, q, !exceeds(dpf.tight, dpf.majorized));

    // q runs downward, so eps increases; t0 must increase with it.
    const Rational t0 = t0_lower_bound(eps, fixed_delta);
    if (previous_t0) record(kT0Monotone, q, exceeds(t0, *previous_t0));
    previous_t0 = t0;
  }
  static_assert(kCount == 7);
  return report;
}

DeltaChoice optimize_delta(const Rational& epsilon, int steps) {
  require_epsilon(epsilon);
  if (steps < 2) throw std::invalid_argument("need at least two grid steps");
  std::optional<DeltaChoice> best;
  for (int k = 1; k < steps; ++k) {
    const Rational delta = epsilon * Rational(k) / Rational(steps);
    if (delta >= kOneSixth) break;
    const Rational t0 = t0_lower_bound(epsilon, delta);
    if (!best || t0 > best->t0) best = DeltaChoice{delta, t0};
  }
  if (!best) throw std::invalid_argument("no grid point below 1/6");
  return *best;
}

}  // namespace kltgraph
