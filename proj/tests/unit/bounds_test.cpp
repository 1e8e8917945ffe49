#include "kltgraph/bounds.hpp"

#include <stdexcept>

#include <gtest/gtest.h>

#include "json.hpp"

namespace kltgraph {
namespace {

Rational q(const char* text) { return Rational::parse(text); }
Rational inv(long n) { return Rational(BigInt(1), BigInt(n)); }

TEST(BoundParamsTest, Ranges) {
  EXPECT_EQ(BoundParams(q("1/4")).delta(), q("1/8"));
  EXPECT_THROW(BoundParams(q("1/3")), std::invalid_argument);
  EXPECT_THROW(BoundParams(q("0")), std::invalid_argument);
  EXPECT_THROW(BoundParams(q("1/4"), q("1/4")), std::invalid_argument);
  EXPECT_THROW(BoundParams(q("1/4"), q("-1/8")), std::invalid_argument);
}

TEST(T0BoundTest, Values) {
  EXPECT_EQ(t0_lower_bound(q("1/4"), q("1/8")), q("1/8442"));
  EXPECT_EQ(t0_lower_bound(BoundParams(q("1/4"))), q("1/8442"));
  EXPECT_EQ(t0_lower_bound(q("1/10"), q("1/20")), q("1/129582"));
  EXPECT_GT(t0_lower_bound(q("1/10"), q("1/20")), q("3/400000"));
  EXPECT_THROW(t0_lower_bound(q("1/4"), q("1/4")), std::invalid_argument);
}

TEST(T0BoundTest, VanishesAsDeltaApproachesEpsilon) {
  Rational previous = t0_lower_bound(q("1/4"), q("1/5"));
  for (long k = 2; k <= 12; ++k) {
    const Rational gap = pow(inv(10), static_cast<unsigned>(k));
    const Rational value = t0_lower_bound(q("1/4"), q("1/4") - gap);
    EXPECT_GT(value, Rational(0));
    EXPECT_LT(value, previous);
    EXPECT_LT(value, gap);
    previous = value;
  }
}

TEST(Mu2BoundTest, Values) {
  EXPECT_EQ(mu2_lower_bound(q("1/4")), q("1/8442"));
  EXPECT_GT(q("1/8442"), q("3/25600"));
  EXPECT_EQ(mu2_floor(q("1/4")), q("3/25600"));
  EXPECT_GT(mu2_lower_bound(q("1/10")), q("3/400000"));
  EXPECT_GT(mu2_lower_bound(inv(1000)), Rational(BigInt(3), BigInt("400000000000", 10)));
  EXPECT_THROW(mu2_lower_bound(q("1/3")), std::invalid_argument);
}

TEST(DivisorCaseTest, Values) {
  EXPECT_EQ(divisor_case_bound(q("1/4")), q("1/90"));
  for (long den = 4; den <= 1000; ++den) {
    EXPECT_GT(divisor_case_bound(inv(den)), mu2_lower_bound(inv(den)));
  }
  // Leading order eps^2/4.
  const Rational eps = inv(100000);
  const Rational ratio = divisor_case_bound(eps) / (eps * eps / Rational(4));
  EXPECT_GT(ratio, q("49999/50000"));
  EXPECT_LT(ratio, Rational(1));
}

TEST(VolumeBoundTest, Values) {
  EXPECT_EQ(volume_bound(q("1/4")), Rational(819200));
  EXPECT_EQ(volume_bound(q("1/10")), Rational(32000000));
  EXPECT_THROW(volume_bound(q("1/2")), std::invalid_argument);
}

TEST(DpfBoundTest, Values) {
  const auto dpf = dpf_bound(q("1/4"));
  EXPECT_EQ(dpf.majorized, Rational(819200));
  EXPECT_EQ(dpf.tight, Rational(641592));
  EXPECT_EQ(m2_upper_bound(q("1/4")), q("38/3"));
  for (long den = 4; den <= 1000; ++den) {
    const auto b = dpf_bound(inv(den));
    EXPECT_LE(b.tight, b.majorized);
    EXPECT_EQ(b.majorized, volume_bound(inv(den)));
    EXPECT_LT(m2_upper_bound(inv(den)), Rational(4 * den));
  }
}

TEST(ConicBoundTest, Values) {
  EXPECT_EQ(conic_bound(q("1/4"), 6), Rational(18432));
  EXPECT_EQ(conic_bound(q("1/4"), 1), Rational(6912));
  for (int d = 1; d < 6; ++d) EXPECT_LT(conic_bound(q("1/5"), d), conic_bound(q("1/5"), d + 1));
  EXPECT_THROW(conic_bound(q("1/4"), 0), std::invalid_argument);
  EXPECT_THROW(conic_bound(q("1/4"), 7), std::invalid_argument);
  EXPECT_THROW(conic_bound(q("1"), 3), std::invalid_argument);
}

TEST(AuxBoundsTest, Values) {
  const auto a = aux_bounds(q("1/10"));
  EXPECT_EQ(a.c2_floor, Rational(-20));
  EXPECT_EQ(a.rho_cap, Rational(79));
  EXPECT_EQ(a.p_cap, Rational(10));
  EXPECT_EQ(a.q_cap, Rational(28));
  EXPECT_EQ(a.pq_cap, Rational(38));
  EXPECT_EQ(aux_bounds(q("1/8")).rho_cap, Rational(63));
  for (long den = 7; den <= 60; ++den) {
    const auto b = aux_bounds(q("2") * inv(2 * den + 1));
    EXPECT_EQ(b.p_cap + b.q_cap, b.pq_cap);
  }
  EXPECT_THROW(aux_bounds(q("1/6")), std::invalid_argument);
}

TEST(AmbroExampleTest, Values) {
  EXPECT_EQ(ambro_example_t(1), q("1/6"));
  EXPECT_EQ(ambro_example_t(2), q("1/21"));
  EXPECT_THROW(ambro_example_t(0), std::invalid_argument);
  for (long den = 4; den <= 1000; ++den) {
    EXPECT_LT(mu2_lower_bound(inv(den)), ambro_example_t(den));
    const Rational ratio = ambro_example_t(den) / mu2_floor(inv(den));
    EXPECT_GT(ratio, Rational(1));
    EXPECT_LT(ratio, Rational(140));
  }
}

TEST(GridSweepTest, AllChecksHold) {
  const auto report = sweep_grid(1000);
  EXPECT_TRUE(report.ok());
  ASSERT_EQ(report.checks.size(), 7u);
  for (const auto& c : report.checks) {
    EXPECT_EQ(c.failed, 0u) << c.name;
    EXPECT_GT(c.checked, 0u) << c.name;
  }
  EXPECT_EQ(report.checks.front().checked, 997u);
  EXPECT_THROW(sweep_grid(3), std::invalid_argument);
}

TEST(GridSweepTest, CrossMultiplication) {
  EXPECT_TRUE(exceeds(q("1/8442"), q("3/25600")));
  EXPECT_FALSE(exceeds(q("3/25600"), q("1/8442")));
  EXPECT_FALSE(exceeds(q("1/2"), q("2/4")));
  EXPECT_TRUE(exceeds(q("-1/3"), q("-1/2")));
}

TEST(BoundSheetTest, JsonFieldsAreExactStrings) {
  const auto sheet = bound_sheet(BoundParams(q("1/4")));
  const auto j = nlohmann::json::parse(sheet.to_json());
  EXPECT_EQ(j["volume_bound"], "819200");
  EXPECT_EQ(j["t0_lb"], "1/8442");
  EXPECT_EQ(j["mu2_lb"], "1/8442");
  EXPECT_EQ(j["mu2_floor"], "3/25600");
  EXPECT_EQ(j["M2_ub"], "38/3");
  EXPECT_EQ(j["dpf_bound"], "819200");
  EXPECT_EQ(j["dpf_bound_tight"], "641592");
  EXPECT_EQ(j["conic_bound"], "18432");
  EXPECT_EQ(j["rank1_bound"], "64");
  EXPECT_EQ(j["aux"]["rho_cap"], "63");
  for (const auto& [key, value] : j.items()) {
    if (value.is_string()) {
      EXPECT_EQ(Rational::parse(value.get<std::string>()).str(), value.get<std::string>()) << key;
    }
  }
  // Dominance relations on the sheet.
  EXPECT_GE(sheet.volume_bound, sheet.rank1_bound);
  EXPECT_GE(sheet.volume_bound, sheet.conic_bound);
  EXPECT_EQ(sheet.volume_bound, sheet.dpf_bound);
}

TEST(BoundSheetTest, ExplicitDeltaAndNoAux) {
  const auto sheet = bound_sheet(BoundParams(q("3/10"), q("1/5")));
  EXPECT_EQ(sheet.t0_lb, t0_lower_bound(q("3/10"), q("1/5")));
  EXPECT_FALSE(sheet.aux.has_value());
  EXPECT_NE(sheet.to_text().find("(values after ~ are approximate)"), std::string::npos);
}

TEST(OptimizeDeltaTest, NotWorseThanHalfEpsilon) {
  for (long den : {4L, 10L, 100L}) {
    const auto best = optimize_delta(inv(den), 100);
    EXPECT_GE(best.t0, mu2_lower_bound(inv(den)));
    EXPECT_LT(best.delta, inv(den));
  }
}

}  // namespace
}  // namespace kltgraph
