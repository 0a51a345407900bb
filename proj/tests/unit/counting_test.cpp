#include <gtest/gtest.h>

#include "genuskit/counting/counting.hpp"
#include "genuskit/counting/wick.hpp"
#include "genuskit/errors.hpp"

namespace genuskit {
namespace {

// One 2j-valent vertex: the gluings of a 2j-gon by genus (Harer-Zagier).
TEST(Counting, SingleVertexHarerZagier) {
  const KappaTable t8 = count_maps({8}, {1}, 1, 2);
  EXPECT_EQ(t8.at(0, {1}), 14);
  EXPECT_EQ(t8.at(1, {1}), 70);
  EXPECT_EQ(t8.at(2, {1}), 21);
  const KappaTable t10 = count_maps({10}, {1}, 1, 2);
  EXPECT_EQ(t10.at(0, {1}), 42);
  EXPECT_EQ(t10.at(1, {1}), 420);
  EXPECT_EQ(t10.at(2, {1}), 483);
}

TEST(Counting, EulerBoundGivesZeros) {
  const KappaTable t = count_maps({2, 4, 6}, {2, 2, 2}, 6, 3);
  for (const auto& n : t.vectors()) {
    const int V = n[0] + n[1] + n[2];
    const int E = n[0] + 2 * n[1] + 3 * n[2];
    for (int k = 0; k <= 3; ++k) {
      // V - E + F = 2 - 2k with F >= 1
      if (V == 0 || 2 * k > E - V + 1) EXPECT_EQ(t.at(k, n), 0) << k;
    }
  }
}

TEST(Counting, GaussianOnlyVertices) {
  // n bivalent vertices form a single cycle: (n - 1)! 2^(n - 1) labelings.
  const KappaTable t = count_maps({2}, {5}, 5, 1);
  EXPECT_EQ(t.at(0, {1}), 1);
  EXPECT_EQ(t.at(0, {3}), 8);
  EXPECT_EQ(t.at(0, {5}), 384);
  EXPECT_EQ(t.at(1, {5}), 0);
}

TEST(Counting, AgreesWithWickOnMixedValences) {
  const KappaTable t = count_maps({2, 4}, {2, 2}, 4, 2);
  for (const auto& n : t.vectors()) {
    if (n[0] + n[1] == 0) continue;
    const auto wick = wick_oracle({2, 4}, n);
    for (int k = 0; k <= 2; ++k) {
      const auto it = wick.find(k);
      EXPECT_EQ(t.at(k, n), it == wick.end() ? Integer(0) : it->second) << n[0] << "," << n[1] << " k=" << k;
    }
  }
}

TEST(Counting, TableShape) {
  const KappaTable t = count_maps({2, 4}, {4, 4}, 8, 2);
  EXPECT_EQ(t.vectors().size(), 25u);
  EXPECT_EQ(t.vectors().front(), (std::vector<int>{0, 0}));
  EXPECT_EQ(t.vectors().back(), (std::vector<int>{4, 4}));
  EXPECT_EQ(t.at(2, {4, 4}), Integer("97661583360"));
  // total cap 3 prunes (2, 2) from the vectors.
  const KappaTable capped = count_maps({2, 4}, {2, 2}, 3, 1);
  for (const auto& n : capped.vectors()) EXPECT_LE(n[0] + n[1], 3);
}

TEST(Counting, RejectsBadInput) {
  EXPECT_THROW(count_maps({3}, {1}, 1, 1), DomainError);
  EXPECT_THROW(count_maps({4, 2}, {1, 1}, 2, 1), DomainError);
  EXPECT_THROW(count_maps({2, 4}, {1}, 2, 1), DomainError);
  EXPECT_THROW(count_maps({2, 4}, {1, 1}, 2, -1), DomainError);
}

TEST(Counting, ExtractKappaRejectsFractions) {
  std::map<std::vector<int>, Rational> taylor{{{1}, ratio(-1, 3)}};
  EXPECT_THROW(extract_kappa(taylor), InternalInconsistency);
}

TEST(Wick, SmallCases) {
  EXPECT_EQ(wick_oracle({4}, {1}).at(0), 2);
  EXPECT_EQ(wick_oracle({4}, {1}).at(1), 1);
  EXPECT_EQ(wick_oracle({4}, {2}).at(0), 36);
  EXPECT_EQ(wick_oracle({4}, {2}).at(1), 60);
  EXPECT_THROW(wick_oracle({6}, {3}), DomainError);
}

}  // namespace
}  // namespace genuskit
