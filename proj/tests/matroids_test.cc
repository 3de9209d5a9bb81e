// Copyright 2026 The Authors.
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

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <gtest/gtest.h>

#include "core/query_ledger.h"
#include "core/random_source.h"
#include "matroids/matroids.h"
#include "matroids/operations.h"
#include "verify/verify.h"

namespace nols {
namespace {

PartitionMatroid TwoPairs() {
  return PartitionMatroid(4, {{0, 1}, {2, 3}}, {1, 1});
}

TEST(IsIndependentTest, Uniform) {
  const UniformMatroid m(5, 2);
  EXPECT_TRUE(m.IsIndependent(ElementSet(5, {0, 1})));
  EXPECT_FALSE(m.IsIndependent(ElementSet(5, {0, 1, 2})));
}

TEST(IsIndependentTest, GraphicTriangleIsDependent) {
  const GraphicMatroid triangle(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_FALSE(triangle.IsIndependent(ElementSet::Full(3)));
  EXPECT_TRUE(triangle.IsIndependent(ElementSet(3, {0, 2})));
}

TEST(IsIndependentTest, GraphicSelfLoopAndParallelEdges) {
  const GraphicMatroid g(2, {{0, 0}, {0, 1}, {1, 0}});
  EXPECT_FALSE(g.IsIndependent(ElementSet(3, {0})));
  EXPECT_TRUE(g.IsIndependent(ElementSet(3, {1})));
  EXPECT_FALSE(g.IsIndependent(ElementSet(3, {1, 2})));
}

TEST(IsIndependentTest, PartitionRejectsBadBlocks) {
  EXPECT_THROW(PartitionMatroid(4, {{0, 1}, {1, 2, 3}}, {1, 1}),
               std::invalid_argument);
  EXPECT_THROW(PartitionMatroid(4, {{0, 1}}, {1}), std::invalid_argument);
}

TEST(ExplicitMatroidTest, RejectsNonMatroidFamily) {
  EXPECT_THROW(ExplicitMatroid(3, {{}, {0}, {1}, {0, 1}, {2}}),
               std::invalid_argument);
  const ExplicitMatroid loose(3, {{}, {0}, {1}, {0, 1}, {2}},
                              ExplicitMatroid::Validation::kSkip);
  EXPECT_TRUE(loose.IsIndependent(ElementSet(3, {2})));
}

TEST(ExtendToBaseTest, Examples) {
  const UniformMatroid u(4, 2);
  EXPECT_EQ(ExtendToBase(u, ElementSet(4)), ElementSet(4, {0, 1}));
  EXPECT_EQ(ExtendToBase(u, ElementSet(4, {2, 3})), ElementSet(4, {2, 3}));
  EXPECT_EQ(ExtendToBase(TwoPairs(), ElementSet(4, {1})), ElementSet(4, {1, 2}));
  EXPECT_THROW(ExtendToBase(u, ElementSet(4, {0, 1, 2})), std::invalid_argument);
}

TEST(RankTest, Examples) {
  EXPECT_EQ(Rank(UniformMatroid(7, 3)), 3);
  const GraphicMatroid path(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  EXPECT_EQ(Rank(path), 5);
  EXPECT_EQ(Rank(LiftedMatroid(UniformMatroid(7, 3), 4)), 3);
}

TEST(LiftTest, ParallelCopiesAreDependent) {
  const UniformMatroid base(5, 3);
  const LiftedMatroid lifted(base, 3);
  const LiftedIndexer& ix = lifted.indexer();
  ElementSet s(ix.lifted_size());
  s.insert(ix.Flatten({2, 1}));
  s.insert(ix.Flatten({2, 2}));
  EXPECT_FALSE(lifted.IsIndependent(s));
}

TEST(LiftTest, IndependentSetsLiftToLevelOne) {
  const PartitionMatroid base = TwoPairs();
  const LiftedMatroid lifted(base, 2);
  EnumerateIndependentSets(base, [&](const ElementSet& s) {
    EXPECT_TRUE(lifted.IsIndependent(lifted.indexer().AtLevel(s, 1)));
  });
}

TEST(LiftTest, LiftedExplicitMatroidSatisfiesAxioms) {
  const ExplicitMatroid base(
      4, {{}, {0}, {1}, {2}, {3}, {0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  const AxiomReport report = CheckMatroidAxioms(LiftedMatroid(base, 2), 8);
  EXPECT_TRUE(report.ok) << report.failure;
  EXPECT_EQ(report.rank, 2);
}

TEST(LiftTest, OneBaseQueryPerCall) {
  const UniformMatroid base(5, 3);
  QueryLedger ledger;
  const CountingMatroidOracle counted(base, ledger);
  const LiftedMatroid lifted(counted, 3);
  ElementSet s(15);
  s.insert(0);
  s.insert(4);
  lifted.IsIndependent(s);
  EXPECT_EQ(ledger.independence_queries(), 1u);
}

TEST(MaxWeightIndependentTest, Examples) {
  const std::vector<double> w1 = {5, 1, 3, 2};
  EXPECT_EQ(MaxWeightIndependent(UniformMatroid(4, 2), w1),
            ElementSet(4, {0, 2}));
  const std::vector<double> zeros(4, 0.0);
  EXPECT_EQ(MaxWeightIndependent(UniformMatroid(4, 2), zeros),
            ElementSet(4, {0, 1}));
  const std::vector<double> w2 = {2, 9, 4, 4};
  EXPECT_EQ(MaxWeightIndependent(TwoPairs(), w2), ElementSet(4, {1, 2}));
}

TEST(MaxWeightIndependentTest, MatchesEnumeration) {
  RandomSource rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 6 + static_cast<int>(rng.Below(4));
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < n; ++e) {
      edges.emplace_back(rng.Below(5), rng.Below(5));
    }
    const GraphicMatroid m(5, edges);
    std::vector<double> w(n);
    for (auto& x : w) x = static_cast<double>(rng.Below(10));
    double best = 0;
    EnumerateIndependentSets(m, [&](const ElementSet& s) {
      double total = 0;
      s.ForEach([&](ElementId u) { total += w[u]; });
      best = std::max(best, total);
    });
    double greedy = 0;
    MaxWeightIndependent(m, w).ForEach([&](ElementId u) { greedy += w[u]; });
    EXPECT_EQ(greedy, best);
  }
}

TEST(MinWeightExchangeTest, PartitionOnlyOnePartnerWorks) {
  std::vector<double> w(4, 0.0);
  w[0] = 2;
  w[2] = 7;
  const ElementSet s(4, {0, 2});
  EXPECT_EQ(FindMinWeightExchange(TwoPairs(), s, s, 1, w), 0);
}

TEST(MinWeightExchangeTest, UniformPicksCheapest) {
  const std::vector<double> w = {5, 3, 0};
  const ElementSet s(3, {0, 1});
  EXPECT_EQ(FindMinWeightExchange(UniformMatroid(3, 2), s, s, 2, w), 1);
}

TEST(MinWeightExchangeTest, FullCheckRejectsBrokenPreconditions) {
  const std::vector<double> w = {1, 1, 1};
  const ElementSet s(3, {0});
  // S + v is already independent.
  EXPECT_THROW(FindMinWeightExchange(UniformMatroid(3, 2), s, s, 2, w,
                                     MinWeightExchange::Check::kFull),
               std::invalid_argument);
  // v inside S.
  EXPECT_THROW(FindMinWeightExchange(UniformMatroid(3, 1), s, s, 0, w),
               std::invalid_argument);
}

TEST(MinWeightExchangeTest, QueryBound) {
  const UniformMatroid m(40, 32);
  ElementSet s(40);
  for (int u = 0; u < 32; ++u) s.insert(u);
  std::vector<double> w(40);
  for (int u = 0; u < 40; ++u) w[u] = (u * 7) % 13;
  QueryLedger ledger;
  const CountingMatroidOracle counted(m, ledger);
  const ElementId u = FindMinWeightExchange(counted, s, s, 35, w);
  EXPECT_EQ(w[u], 0);
  EXPECT_LE(ledger.independence_queries(), 5u);
}

TEST(ExchangeBijectionTest, IdentityWhenEqual) {
  const ElementSet a(4, {0, 2});
  const auto h = ExchangeBijection(TwoPairs(), a, a);
  EXPECT_EQ(h.at(0), 0);
  EXPECT_EQ(h.at(2), 2);
}

TEST(ExchangeBijectionTest, UniformPairsAreFeasible) {
  const UniformMatroid m(4, 2);
  const ElementSet a(4, {0, 1}), b(4, {2, 3});
  const auto h = ExchangeBijection(m, a, b);
  ASSERT_EQ(h.size(), 2u);
  EXPECT_NE(h.at(0), h.at(1));
  for (const auto& [u, v] : h) {
    EXPECT_TRUE(m.IsIndependent(b.Without(v).With(u)));
  }
}

TEST(ExchangeBijectionTest, PartitionIsForced) {
  const auto h = ExchangeBijection(TwoPairs(), ElementSet(4, {0, 2}),
                                   ElementSet(4, {1, 3}));
  EXPECT_EQ(h.at(0), 1);
  EXPECT_EQ(h.at(2), 3);
}

}  // namespace
}  // namespace nols
