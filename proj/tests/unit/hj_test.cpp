#include "kltgraph/hj.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <gtest/gtest.h>

namespace kltgraph {
namespace {

TEST(HjExpansionTest, Examples) {
  EXPECT_EQ(hj_expansion(CyclicQuotient(2, 1)), (std::vector<int>{2}));
  EXPECT_EQ(hj_expansion(CyclicQuotient(5, 2)), (std::vector<int>{3, 2}));
  EXPECT_EQ(hj_expansion(CyclicQuotient(7, 3)), (std::vector<int>{3, 2, 2}));
  for (int n = 2; n <= 30; ++n) EXPECT_EQ(hj_expansion(CyclicQuotient(n, 1)), (std::vector<int>{n}));
  // (1/n)(1, n-1) is the A_{n-1} chain.
  EXPECT_EQ(hj_expansion(CyclicQuotient(6, 5)), (std::vector<int>(5, 2)));
}

TEST(HjExpansionTest, RejectsInvalidPairs) {
  EXPECT_THROW(CyclicQuotient(6, 4), std::invalid_argument);
  EXPECT_THROW(CyclicQuotient(5, 0), std::invalid_argument);
  EXPECT_THROW(CyclicQuotient(5, 5), std::invalid_argument);
  EXPECT_THROW(CyclicQuotient(1, 1), std::invalid_argument);
}

TEST(HjExpansionTest, ChainFromQuotient) {
  const auto g = chain_from_quotient(CyclicQuotient(7, 3));
  EXPECT_TRUE(g.is_ordered_chain());
  EXPECT_EQ(std::vector<int>(g.weights().begin(), g.weights().end()), (std::vector<int>{3, 2, 2}));
  EXPECT_EQ(chain_from_quotient(CyclicQuotient(2, 1)).size(), 1u);
}

TEST(HjExpansionTest, PropertiesOverAllCoprimePairs) {
  for (std::int64_t n = 2; n <= 200; ++n) {
    for (std::int64_t a = 1; a < n; ++a) {
      if (std::gcd(n, a) != 1) continue;
      const CyclicQuotient quotient(n, a);
      const auto entries = hj_expansion(quotient);
      ASSERT_TRUE(std::all_of(entries.begin(), entries.end(), [](int m) { return m >= 2; }));
      EXPECT_EQ(evaluate_continued_fraction(entries), Rational(BigInt(n), BigInt(a)));
      EXPECT_EQ(delta(chain_from_quotient(quotient)), n);

      const auto dual = hj_expansion(CyclicQuotient(n, inverse_weight(quotient)));
      EXPECT_EQ(std::vector<int>(entries.rbegin(), entries.rend()), dual) << n << "," << a;
    }
  }
}

TEST(HjExpansionTest, InverseWeight) {
  EXPECT_EQ(inverse_weight(CyclicQuotient(5, 2)), 3);
  EXPECT_EQ(inverse_weight(CyclicQuotient(7, 3)), 5);
  EXPECT_EQ(inverse_weight(CyclicQuotient(2, 1)), 1);
}

}  // namespace
}  // namespace kltgraph
