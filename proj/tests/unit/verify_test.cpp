#include "kltgraph/verify.hpp"

#include <iostream>
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "json.hpp"

namespace kltgraph {
namespace {

Rational q(const char* text) { return Rational::parse(text); }

std::vector<std::vector<int>> all_weights(ChainSpace space) {
  std::vector<std::vector<int>> out;
  ChainEnumerator e(space);
  while (const auto* w = e.next_weights()) out.push_back(*w);
  return out;
}

const AssertionResult& find(const LemmaReport& r, const std::string& id) {
  for (const auto& a : r.assertions)
    if (a.id == id) return a;
  throw std::out_of_range(id);
}

TEST(ChainEnumeratorTest, Counts) {
  EXPECT_EQ(all_weights({1, 3}), (std::vector<std::vector<int>>{{2}, {3}}));
  EXPECT_EQ(all_weights({2, 3}).size(), 6u);
  EXPECT_EQ(ChainEnumerator::count({2, 3}), 6u);
  EXPECT_EQ(ChainEnumerator::count({7, 5}), 21844u);
  EXPECT_EQ(all_weights({7, 5}).size(), 21844u);
}

TEST(ChainEnumeratorTest, OrderIsDeterministicAndExhaustive) {
  const auto first = all_weights({4, 4});
  EXPECT_EQ(first, all_weights({4, 4}));
  EXPECT_EQ((std::vector<int>{2, 2, 3}), first[3 + 9 + 1]);
  std::set<std::vector<int>> unique(first.begin(), first.end());
  EXPECT_EQ(unique.size(), first.size());
  // Partitions by first weight cover the space exactly once.
  std::size_t total = 0;
  for (int w = 2; w <= 4; ++w) {
    ChainEnumerator part({4, 4}, w);
    while (const auto* v = part.next_weights()) {
      EXPECT_EQ(v->front(), w);
      EXPECT_TRUE(unique.count(*v));
      ++total;
    }
  }
  EXPECT_EQ(total, first.size());
}

TEST(ChainEnumeratorTest, RejectsBadSpace) {
  EXPECT_THROW(ChainEnumerator({0, 3}), std::invalid_argument);
  EXPECT_THROW(ChainEnumerator({2, 1}), std::invalid_argument);
  EXPECT_THROW(ChainEnumerator({2, 3}, 4), std::invalid_argument);
}

TEST(ChainLemmaTest, AllTwoChain) {
  const auto r = verify_chain_lemma(DualGraph::chain({2, 2, 2}));
  EXPECT_TRUE(r.passed());
  ASSERT_EQ(r.assertions.size(), 6u);
  EXPECT_EQ(find(r, "lower_bound").outcome, Outcome::kPass);
  // Delta = 4 = Delta(minus v_1) + 1, so the implication is live.
  EXPECT_EQ(find(r, "unit_step_forces_all_two").outcome, Outcome::kPass);
  EXPECT_EQ(find(r, "heavy_vertex_gap").outcome, Outcome::kVacuous);
}

TEST(ChainLemmaTest, HeavyFirstVertex) {
  const auto r = verify_chain_lemma(DualGraph::chain({3, 2}));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(find(r, "heavy_vertex_gap").outcome, Outcome::kPass);
  EXPECT_EQ(find(r, "unit_step_forces_all_two").outcome, Outcome::kVacuous);
  EXPECT_EQ(find(r, "shifted_recurrence").outcome, Outcome::kVacuous);
}

TEST(ChainLemmaTest, SingleVertex) {
  for (int m = 2; m <= 6; ++m) {
    const auto r = verify_chain_lemma(DualGraph::chain({m}));
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(find(r, "strict_descent").outcome, Outcome::kPass);
  }
}

TEST(ChainLemmaTest, RejectsNonChains) {
  EXPECT_THROW(verify_chain_lemma(DualGraph({2, 2, 2}, {{0, 2}, {1, 2}})), GraphError);
}

TEST(ChainLemmaTest, SweepIsIndependentOfWorkerCount) {
  const auto one = sweep_chain_lemma({5, 4}, 1);
  const auto three = sweep_chain_lemma({5, 4}, 3);
  EXPECT_EQ(one.instances, ChainEnumerator::count({5, 4}));
  EXPECT_EQ(one.instances, three.instances);
  EXPECT_EQ(one.tallies, three.tallies);
  EXPECT_TRUE(one.ok());
}

TEST(KMConfigTest, EnumerationShapes) {
  const auto two_ends = enumerate_km_configs(LcShape::kTwoEnds, 1, 2);
  ASSERT_EQ(two_ends.size(), 1u);
  EXPECT_EQ(two_ends[0].graph.weight(0), 2);
  EXPECT_EQ(two_ends[0].curve[0], 2);

  // Lengths 1 and 2: [2], [3], [2,2], [2,3], [3,2], [3,3], C at the first end.
  const auto one_end = enumerate_km_configs(LcShape::kOneEnd, 2, 3);
  ASSERT_EQ(one_end.size(), 6u);
  for (const auto& c : one_end) {
    EXPECT_EQ(c.curve[0], 1);
    if (c.graph.size() == 2) EXPECT_EQ(c.curve[1], 0);
  }

  const auto forks = enumerate_km_configs(LcShape::kFork, 3, 5);
  ASSERT_EQ(forks.size(), 4u);
  for (int w = 2; w <= 5; ++w) {
    const auto& c = forks[w - 2];
    EXPECT_EQ(describe(c), "fork w=[2," + std::to_string(w) + ",2] e=[1-2,2-3] c=[0,1,0]");
    EXPECT_EQ(c.key_vertex, Vertex{1});
  }
  const auto larger = enumerate_km_configs(LcShape::kFork, 5, 3);
  // n=3: 2 chains; n=4: 2 * 2; n=5: 2^3 (fork weight and arm weights).
  EXPECT_EQ(larger.size(), 2u + 4u + 8u);
  for (const auto& c : larger) {
    if (c.graph.size() < 4) continue;
    EXPECT_EQ(c.graph.degree(2), 3u);
    EXPECT_EQ(c.graph.weight(0), 2);
    EXPECT_EQ(c.graph.weight(1), 2);
  }
}

TEST(MultBoundTest, Examples) {
  const KMConfig twice{LcShape::kTwoEnds, DualGraph::chain({2}), CurveAttachment({2}), 0};
  const auto r = verify_mult_bound(twice, q("1/10"), 1);
  EXPECT_EQ(find(r, "multiplicity_floor").outcome, Outcome::kPass);
  EXPECT_EQ(find(r, "determinant_cap").outcome, Outcome::kPass);

  const KMConfig heavy{LcShape::kTwoEnds, DualGraph::chain({7}), CurveAttachment({2}), 0};
  const auto v = verify_mult_bound(heavy, q("1/10"), 1);
  EXPECT_EQ(find(v, "multiplicity_floor").outcome, Outcome::kVacuous);
  EXPECT_EQ(find(v, "determinant_cap").outcome, Outcome::kVacuous);

  for (int n = 2; n <= 8; ++n) {
    std::vector<std::int64_t> c(n, 0);
    c.front() = c.back() = 1;
    const KMConfig all_two{LcShape::kTwoEnds, DualGraph::chain(std::vector<int>(n, 2)),
                           CurveAttachment(c), 0};
    for (const char* d : {"1/7", "1/100"}) {
      const auto rr = verify_mult_bound(all_two, q(d), n);
      EXPECT_EQ(find(rr, "determinant_cap").outcome, Outcome::kPass);
      EXPECT_TRUE(rr.passed());
    }
  }
}

TEST(MultBoundTest, Preconditions) {
  const KMConfig config{LcShape::kTwoEnds, DualGraph::chain({2, 2}), CurveAttachment({1, 1}), 0};
  EXPECT_THROW(verify_mult_bound(config, q("1/6"), 2), std::invalid_argument);
  EXPECT_THROW(verify_mult_bound(config, q("0"), 2), std::invalid_argument);
  EXPECT_THROW(verify_mult_bound(config, q("1/10"), 1), std::invalid_argument);
}

TEST(ClosedFormTest, AgreesOnSmallConfigs) {
  for (auto shape : {LcShape::kTwoEnds, LcShape::kFork, LcShape::kOneEnd}) {
    for (const auto& config : enumerate_km_configs(shape, 4, 4)) {
      for (const auto& a : check_closed_form(config, q("1/8"))) {
        EXPECT_NE(a.outcome, Outcome::kFail) << describe(config) << " " << a.lhs << " " << a.rhs;
      }
    }
  }
}

TEST(ClosedFormTest, VacuousWithoutHeavyVertex) {
  const KMConfig light{LcShape::kOneEnd, DualGraph::chain({2, 2}), CurveAttachment({1, 0}),
                       std::nullopt};
  EXPECT_FALSE(closed_form_boundary(light, q("1/8")));
  for (const auto& a : check_closed_form(light, q("1/8"))) EXPECT_EQ(a.outcome, Outcome::kVacuous);
}

TEST(SweepSummaryTest, RecordsFailuresWithWitnesses) {
  SweepSummary s;
  s.add(LemmaReport{"ok", {{"x", Outcome::kPass, "", ""}}});
  s.add(LemmaReport{"bad", {{"x", Outcome::kFail, "3", "4"}, {"y", Outcome::kVacuous, "", ""}}});
  EXPECT_FALSE(s.ok());
  EXPECT_EQ(s.failure_count(), 1u);
  const auto j = nlohmann::json::parse(s.to_json());
  EXPECT_EQ(j["instances"], 2);
  EXPECT_EQ(j["assertions"]["x"]["fail"], 1);
  EXPECT_EQ(j["assertions"]["y"]["vacuous"], 1);
  ASSERT_EQ(j["failures"].size(), 1u);
  EXPECT_EQ(j["failures"][0]["instance"], "bad");
  EXPECT_EQ(j["failures"][0]["assertions"][0]["lhs"], "3");
  EXPECT_EQ(j["failures"][0]["assertions"][0]["rhs"], "4");
  EXPECT_EQ(s.summary_line("t"), "t: instances=2 pass=1 fail=1 vacuous=1 -> FAIL");
}

TEST(SweepSummaryTest, NonVacuousRequirement) {
  SweepSummary s;
  s.require_non_vacuous = true;
  s.add(LemmaReport{"v", {{"x", Outcome::kVacuous, "", ""}}});
  EXPECT_FALSE(s.ok());
  s.add(LemmaReport{"p", {{"x", Outcome::kPass, "", ""}}});
  EXPECT_TRUE(s.ok());
}

TEST(MultBoundSweepTest, SmallSweepsPass) {
  for (auto shape : {LcShape::kTwoEnds, LcShape::kFork, LcShape::kOneEnd}) {
    const auto s = sweep_mult_bound(shape, 4, 4, q("1/8"));
    EXPECT_TRUE(s.ok()) << s.to_json();
    EXPECT_GT(s.non_vacuous("multiplicity_floor"), 0u);
  }
}

TEST(GeneralizedForkSurveyTest, RunsAndLogs) {
  const auto survey = survey_generalized_forks(5, 4, q("1/8"));
  EXPECT_GT(survey.configs, 0u);
  std::cout << "generalized forks: configs=" << survey.configs << " delta-lc=" << survey.delta_lc
            << " bound violations=" << survey.bound_violations << "\n";
}

}  // namespace
}  // namespace kltgraph
