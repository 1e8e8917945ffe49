#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kltgraph/rational.hpp"

namespace kltgraph {

/// (epsilon, delta) with 0 < delta < epsilon < 1/3. delta defaults to
/// epsilon/2, the choice that yields the cubic lower bound.
class BoundParams {
 public:
  /// Throws std::invalid_argument when the range conditions fail.
  explicit BoundParams(Rational epsilon, std::optional<Rational> delta = std::nullopt);

  const Rational& epsilon() const { return epsilon_; }
  const Rational& delta() const { return delta_; }

 private:
  Rational epsilon_;
  Rational delta_;
};

/// delta^2 (eps - delta) / (16 + 4 delta + delta^2 (eps - 1)). Requires
/// 0 < delta < eps < 1.
Rational t0_lower_bound(const Rational& epsilon, const Rational& delta);
Rational t0_lower_bound(const BoundParams& p);

/// t0_lower_bound(eps, eps/2): the lower bound on the lct constant in
/// dimension two. Requires 0 < eps < 1/3.
Rational mu2_lower_bound(const Rational& epsilon);

/// 3 eps^3 / 400.
Rational mu2_floor(const Rational& epsilon);

/// eps (eps - delta) / (2 + 3 eps + eps^2) at delta = eps/2, the bound when
/// the divisor computing t0 lies on the surface itself.
Rational divisor_case_bound(const Rational& epsilon);

/// 2/eps + 4 + 2/3.
Rational m2_upper_bound(const Rational& epsilon);

/// 3200 / eps^4.
Rational volume_bound(const Rational& epsilon);

struct DpfBound {
  Rational majorized;  ///< 6 (4/eps) / (3 eps^3 / 400) = 3200/eps^4
  Rational tight;      ///< 6 (2/eps + 14/3) / mu2_lower_bound(eps)
};
DpfBound dpf_bound(const Rational& epsilon);

/// 144 (d + 2) / eps^2 for 1 <= d <= 6 and 0 < eps < 1.
Rational conic_bound(const Rational& epsilon, int d);

/// Volume bound when the Mori fiber space has Picard rank one over a point.
Rational rank1_bound();

struct AuxBounds {
  Rational c2_floor;  ///< -2/delta
  Rational rho_cap;   ///< 8/delta - 1
  Rational p_cap;     ///< 1/delta
  Rational q_cap;     ///< 3/delta - 2
  Rational pq_cap;    ///< 4/delta - 2
};
/// Requires 0 < delta < 1/6.
AuxBounds aux_bounds(const Rational& delta);

/// 1 / ((q+1)(q^2+q+1)), the threshold of the toric example family. q >= 1.
Rational ambro_example_t(std::int64_t q);

struct BoundSheet {
  Rational epsilon;
  Rational delta;
  Rational t0_lb;
  Rational mu2_lb;
  Rational mu2_floor;
  Rational m2_ub;
  Rational dpf_bound;
  Rational dpf_bound_tight;
  Rational conic_bound;
  Rational rank1_bound;
  Rational volume_bound;
  Rational divisor_case_bound;
  std::optional<AuxBounds> aux;  ///< present when delta < 1/6

  /// Every value as an exact "p/q" string.
  std::string to_json() const;
  /// Aligned table with exact values and 6-significant-digit approximations.
  std::string to_text() const;
};
BoundSheet bound_sheet(const BoundParams& p);

struct GridCheck {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::optional<std::int64_t> first_failure_q;
};

struct GridReport {
  std::int64_t qmax = 0;
  std::vector<GridCheck> checks;

  bool ok() const;
  std::string to_json() const;
};

/// Exact comparisons on eps = 1/q, q = 4..qmax: mu2 above its cubic floor,
/// volume dominance, consistency with the toric example family, the
/// divisor case being weaker, tight vs majorized del Pezzo bound, and
/// monotonicity of t0 in eps. Throws std::invalid_argument if qmax < 4.
GridReport sweep_grid(std::int64_t qmax);

/// a/b > c/d by cross-multiplication of the reduced fractions.
bool exceeds(const Rational& lhs, const Rational& rhs);

struct DeltaChoice {
  Rational delta;
  Rational t0;
};
/// Exploratory: best t0_lower_bound over delta = k eps / steps,
/// 0 < k < steps, delta < 1/6. Not part of the published bound chain.
DeltaChoice optimize_delta(const Rational& epsilon, int steps);

}  // namespace kltgraph
