// Copyright 2026 The richdist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "richdist/constructions.hpp"
#include "richdist/errors.hpp"

namespace richdist {
namespace {

// Rich classes counted from the pairwise grouping, independent of hashing.
std::size_t pairwise_rich(const PointSet& ps, std::size_t q) {
  std::size_t out = 0;
  for (const auto& c : testing::pairwise_classes(ps)) out += c.witnesses.size() >= q;
  return out;
}

Decomposition enumerate(long n, long m) {
  for (long k = 1; k <= n; ++k)
    for (long r = 2; r <= m + 2; ++r)
      if ((m + 1) * k + r == n) return {k, r};
  return {0, 0};
}

TEST(Decompose, MatchesEnumeration) {
  EXPECT_EQ(decompose(8, 3).k, 1);
  EXPECT_EQ(decompose(8, 3).r, 4);
  EXPECT_EQ(decompose(25, 2).k, 7);
  EXPECT_EQ(decompose(25, 2).r, 4);
  for (long m = 1; m <= 8; ++m) {
    const Decomposition edge = decompose(m + 3, m);
    EXPECT_EQ(edge.k, 1);
    EXPECT_EQ(edge.r, 2);
    for (long n = m + 3; n <= 120; ++n) {
      const Decomposition want = enumerate(n, m);
      const Decomposition got = decompose(n, m);
      EXPECT_EQ(got.k, want.k) << n << " " << m;
      EXPECT_EQ(got.r, want.r) << n << " " << m;
    }
  }
  EXPECT_THROW(decompose(5, 3), BelowThresholdError);
  EXPECT_THROW(decompose(10, 0), std::invalid_argument);
}

TEST(Theorem1, SmallCasesAgainstPairwiseOracle) {
  for (long n = 4; n <= 16; ++n) {
    const Construction c = build_theorem1(n);
    ASSERT_EQ(c.points.size(), static_cast<std::size_t>(n));
    EXPECT_TRUE(c.verdict.pass) << n;
    EXPECT_GE(pairwise_rich(c.points, n + 1), static_cast<std::size_t>(n / 4)) << n;
  }
  EXPECT_THROW(build_theorem1(3), BelowThresholdError);
}

TEST(Theorem1, OddAndEvenShapes) {
  const Construction odd = build_theorem1(9);
  EXPECT_EQ(odd.plan.sides, 5);
  EXPECT_EQ(odd.plan.turns, (std::vector<Turn>{Turn(1, 2)}));
  const Construction even = build_theorem1(10);
  EXPECT_EQ(even.plan.sides, 6);
  ASSERT_EQ(even.plan.edges.size(), 1u);
  EXPECT_EQ(even.plan.edges[0], (EdgeChoice{0, 0, 1}));
}

TEST(Theorem2, TwentyPointsFiveClasses) {
  const Construction c = build_theorem2(20, 1);
  ASSERT_EQ(c.points.size(), 20u);
  EXPECT_TRUE(c.verdict.pass);
  EXPECT_GE(pairwise_rich(c.points, 21), 5u);
}

TEST(Theorem2, PointCountIdentity) {
  for (long m = 1; m <= 4; ++m) {
    for (long n = m + 3; n <= m + 20; ++n) {
      const Construction c = build_theorem2(n, m);
      const auto [k, r] = decompose(n, m);
      EXPECT_EQ(c.plan.sides, k + 2);
      EXPECT_EQ(static_cast<long>(c.plan.turns.size()), r - 2);
      EXPECT_EQ(static_cast<long>(c.plan.edges.size()), m + 2 - r);
      // (k+2) + (r-2)(k+1) + (m+2-r) k = n
      EXPECT_EQ((k + 2) + (r - 2) * (k + 1) + (m + 2 - r) * k, n);
      EXPECT_EQ(static_cast<long>(c.points.size()), n);
      EXPECT_TRUE(c.verdict.pass) << n << " " << m;
    }
  }
  EXPECT_THROW(build_theorem2(4, 2), BelowThresholdError);
}

TEST(Theorem2, ReflectionsShareExactlyTheEdge) {
  const Construction c = build_theorem2(30, 4);
  const auto& copies = c.points.copies();
  const std::size_t rotations = c.plan.turns.size();
  for (std::size_t e = 0; e < c.plan.edges.size(); ++e) {
    const auto& copy = copies[1 + rotations + e];
    std::set<std::size_t> earlier;
    for (std::size_t j = 0; j < 1 + rotations + e; ++j) earlier.insert(copies[j].begin(), copies[j].end());
    std::size_t shared = 0;
    for (std::size_t v : copy) shared += earlier.count(v);
    EXPECT_EQ(shared, 2u) << "reflection " << e;
  }
}

TEST(Plans, ReplayIsDeterministic) {
  for (auto [n, m] : {std::pair{11L, 1L}, {23L, 2L}, {17L, 5L}}) {
    const Construction a = build_theorem2(n, m);
    const Construction b = build_theorem2(n, m);
    EXPECT_EQ(a.plan, b.plan);
    EXPECT_EQ(a.points, b.points);
    EXPECT_EQ(replay_plan(a.plan), a.points);
  }
  const Construction t1 = build_theorem1(13);
  EXPECT_EQ(replay_plan(t1.plan), t1.points);
}

TEST(Verify, SquareClaims) {
  const PointSet sq = regular_ngon(4);
  const Verdict ok = verify_claim(sq, 1, 4);
  EXPECT_TRUE(ok.pass);
  EXPECT_EQ(ok.achieved_classes, 1u);
  EXPECT_EQ(ok.best_multiplicity, 4u);
  const Verdict bad = verify_claim(sq, 1, 5);
  EXPECT_FALSE(bad.pass);
  EXPECT_EQ(bad.achieved_classes, 0u);
  const Verdict two = verify_claim(sq, 2, 2);
  EXPECT_TRUE(two.pass);
  EXPECT_EQ(two.best_multiplicity, 2u);
}

TEST(Thresholds, FollowTheorem) {
  EXPECT_EQ(claim_thresholds(build_theorem1(12).plan), (std::pair<std::size_t, std::size_t>{3, 13}));
  EXPECT_EQ(claim_thresholds(build_theorem2(24, 2).plan), (std::pair<std::size_t, std::size_t>{4, 26}));
}

TEST(TurnPool, StartsWithCheapTurns) {
  const auto pool = turn_pool(6, 10);
  ASSERT_FALSE(pool.empty());
  EXPECT_LE(pool.size(), 10u);
  // Turns staying in Q(zeta_6) come first.
  EXPECT_EQ(6 % pool.front().denominator(), 0);
}

}  // namespace
}  // namespace richdist
