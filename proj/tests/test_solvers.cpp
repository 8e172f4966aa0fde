// Copyright 2026 The revgreedy Authors.
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

#include "fixtures.hpp"
#include "revgreedy/errors.hpp"
#include "revgreedy/instance_gen.hpp"
#include "revgreedy/solvers.hpp"

namespace revgreedy {
namespace {

using testing::line3;

std::vector<PointId> removed(const GreedyTrace& t) {
  std::vector<PointId> out;
  for (const auto& s : t.steps) out.push_back(s.point);
  return out;
}

std::vector<TiePolicy> all_policies(const MetricSpace& s, std::uint64_t seed) {
  return {TiePolicy::Lexicographic(), TiePolicy::Parse("priority", s),
          TiePolicy::SeededRandom(seed)};
}

TEST(RGreedy, KEqualsNIsEmpty) {
  const MetricSpace s = gen_star({3, 5});
  const GreedyTrace t = rgreedy(s, 7, TiePolicy::Lexicographic());
  EXPECT_TRUE(t.steps.empty());
  EXPECT_EQ(t.final_set, FacilitySet::All(7));
  EXPECT_EQ(t.final_cost(), 0.0);
}

TEST(RGreedy, Line) {
  for (auto* solver : {&rgreedy, &rgreedy_reference}) {
    const GreedyTrace t = (*solver)(line3(), 1, TiePolicy::Lexicographic());
    EXPECT_EQ(removed(t), (std::vector<PointId>{0, 2}));
    EXPECT_EQ(t.final_set, (FacilitySet{1}));
    EXPECT_EQ(t.final_cost(), 2.0);
  }
}

TEST(RGreedy, TreeHeightTwoTrace) {
  const MetricSpace s = gen_tree_lb({2});
  const GreedyTrace t = rgreedy(s, 1, TiePolicy::Parse("priority", s));
  ASSERT_EQ(t.steps.size(), 28u);
  EXPECT_EQ(t.steps.front().point, TreeLayout::mu());
  for (std::size_t i = 0; i + 1 < t.steps.size(); ++i) EXPECT_EQ(t.steps[i].delta, 1.0);
  EXPECT_EQ(t.steps.back().delta, 2.0);
  EXPECT_EQ(t.final_set, (FacilitySet{28}));
  EXPECT_EQ(t.final_cost(), 29.0);
  EXPECT_EQ(t, rgreedy_reference(s, 1, TiePolicy::Parse("priority", s)));
}

TEST(RGreedy, TreeHeightThreeEndsAtRho) {
  const MetricSpace s = gen_tree_lb({3});
  const GreedyTrace t = rgreedy(s, 1, TiePolicy::Parse("priority", s));
  EXPECT_EQ(t.final_set, (FacilitySet{s.tree()->root()}));
  EXPECT_EQ(t.final_cost(), 3971.0);
  EXPECT_EQ(t.final_cost(), cost(s, t.final_set));
}

TEST(RGreedy, StarSolversAgree) {
  const MetricSpace s = gen_star({3, 5});
  for (const TiePolicy& tie : all_policies(s, 3)) {
    EXPECT_EQ(rgreedy(s, 1, tie), rgreedy_reference(s, 1, tie));
  }
}

TEST(RGreedy, MatchesReferenceOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const MetricSpace s = gen_random(5 + seed % 20, seed % 3 ? RandomKind::kRandomGraph
                                                             : RandomKind::kUnitSquarePoints,
                                     seed);
    for (const TiePolicy& tie : all_policies(s, seed)) {
      const GreedyTrace fast = rgreedy(s, 1, tie);
      const GreedyTrace ref = rgreedy_reference(s, 1, tie);
      EXPECT_EQ(fast, ref) << "seed " << seed << " tie " << tie.to_string();
    }
  }
}

TEST(RGreedy, TraceArithmetic) {
  const MetricSpace s = gen_random(30, RandomKind::kRandomGraph, 2);
  const GreedyTrace t = rgreedy(s, 1, TiePolicy::SeededRandom(1));
  EXPECT_EQ(t.direction, Direction::kReverse);
  FacilitySet r = FacilitySet::All(s.size());
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const TraceStep& st = t.steps[i];
    EXPECT_EQ(st.index, s.size() - i);
    EXPECT_EQ(st.cost_after, st.cost_before + st.delta);
    EXPECT_GE(st.delta, 0.0);
    if (i > 0) EXPECT_EQ(st.cost_before, t.steps[i - 1].cost_after);
    EXPECT_TRUE(r.contains(st.point));
    EXPECT_EQ(st.delta, removal_delta(s, r, st.point));
    r = r.without(st.point);
    EXPECT_EQ(st.cost_after, cost(s, r));
  }
  EXPECT_EQ(r, t.final_set);
}

TEST(RGreedy, EachRemovalIsAMinimizer) {
  const MetricSpace s = gen_random(15, RandomKind::kUnitSquarePoints, 8);
  const GreedyTrace t = rgreedy(s, 1, TiePolicy::Lexicographic());
  FacilitySet r = FacilitySet::All(s.size());
  for (const TraceStep& st : t.steps) {
    for (PointId c : r) EXPECT_LE(st.delta, removal_delta(s, r, c));
    r = r.without(st.point);
  }
}

TEST(RGreedy, PrefixProperty) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const MetricSpace s = gen_random(18, RandomKind::kRandomGraph, seed);
    const TiePolicy tie = TiePolicy::SeededRandom(seed);
    const GreedyTrace chain = rgreedy(s, 1, tie);
    for (std::size_t k = 1; k <= s.size(); ++k) {
      const GreedyTrace t = rgreedy(s, k, tie);
      ASSERT_EQ(t.steps.size(), s.size() - k);
      EXPECT_TRUE(std::equal(t.steps.begin(), t.steps.end(), chain.steps.begin()));
      EXPECT_EQ(t.final_set.size(), k);
      EXPECT_EQ(t, truncate_chain(chain, k));
    }
  }
}

TEST(RGreedy, Deterministic) {
  const MetricSpace s = gen_random(25, RandomKind::kRandomGraph, 4);
  for (const TiePolicy& tie : all_policies(s, 77)) {
    EXPECT_EQ(rgreedy(s, 3, tie), rgreedy(s, 3, tie));
  }
}

TEST(RGreedy, NeverBeatsOptimum) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const MetricSpace s = gen_random(10, RandomKind::kUnitSquarePoints, seed);
    for (std::size_t k = 1; k <= 10; ++k) {
      EXPECT_GE(cost(s, rgreedy(s, k, TiePolicy::Lexicographic()).final_set),
                exact_kmedian(s, k).cost);
    }
  }
}

TEST(RGreedy, KOutOfRange) {
  EXPECT_THROW(rgreedy(line3(), 0, TiePolicy::Lexicographic()), InputError);
  EXPECT_THROW(rgreedy(line3(), 4, TiePolicy::Lexicographic()), InputError);
  EXPECT_THROW(rgreedy_reference(line3(), 0, TiePolicy::Lexicographic()), InputError);
  EXPECT_THROW(forward_greedy(line3(), 4, TiePolicy::Lexicographic()), InputError);
}

TEST(RGreedy, SinglePoint) {
  const MetricSpace s = gen_random(1, RandomKind::kUnitSquarePoints, 1);
  const GreedyTrace t = rgreedy(s, 1, TiePolicy::Lexicographic());
  EXPECT_TRUE(t.steps.empty());
  EXPECT_EQ(t.final_set, (FacilitySet{0}));
}

TEST(TiePolicy, PriorityOrdersUnlistedAfterListed) {
  const TiePolicy p = TiePolicy::Priority({3, 1});
  const auto r = p.ranks(5);
  EXPECT_LT(r[3], r[1]);
  EXPECT_LT(r[1], r[0]);
  EXPECT_LT(r[0], r[2]);
  EXPECT_LT(r[2], r[4]);
  EXPECT_THROW(TiePolicy::Priority({9}).ranks(5), InputError);
}

TEST(TiePolicy, Parse) {
  const MetricSpace s = line3();
  EXPECT_EQ(TiePolicy::Parse("lex", s).kind(), TiePolicy::Kind::kLexicographic);
  EXPECT_EQ(TiePolicy::Parse("random:42", s).seed(), 42u);
  EXPECT_EQ(TiePolicy::Parse("random:42", s).to_string(), "random:42");
  EXPECT_THROW(TiePolicy::Parse("random:", s), InputError);
  EXPECT_THROW(TiePolicy::Parse("coin", s), InputError);
}

TEST(TiePolicy, PriorityChangesTieChoice) {
  const TiePolicy prefer_c = TiePolicy::Priority({2, 0, 1});
  const GreedyTrace t = rgreedy(line3(), 2, prefer_c);
  EXPECT_EQ(removed(t), (std::vector<PointId>{2}));
  EXPECT_EQ(rgreedy_reference(line3(), 2, prefer_c), t);
}

TEST(ForwardGreedy, KEqualsN) {
  const GreedyTrace t = forward_greedy(line3(), 3, TiePolicy::Lexicographic());
  EXPECT_EQ(t.final_cost(), 0.0);
  EXPECT_EQ(t.direction, Direction::kForward);
}

TEST(ForwardGreedy, LinePicksMiddle) {
  const GreedyTrace t = forward_greedy(line3(), 1, TiePolicy::Lexicographic());
  EXPECT_EQ(t.final_set, (FacilitySet{1}));
  EXPECT_EQ(t.final_cost(), 2.0);
}

TEST(ForwardGreedy, TreeHeightThreePicksMu) {
  const MetricSpace s = gen_tree_lb({3});
  const GreedyTrace t = forward_greedy(s, 1, TiePolicy::Lexicographic());
  EXPECT_EQ(t.final_set, (FacilitySet{0}));
  EXPECT_EQ(t.final_cost(), 3400.0);
}

TEST(ForwardGreedy, DeltasNonpositiveAfterFirst) {
  const MetricSpace s = gen_random(20, RandomKind::kRandomGraph, 6);
  const GreedyTrace t = forward_greedy(s, 20, TiePolicy::Lexicographic());
  ASSERT_EQ(t.steps.size(), 20u);
  EXPECT_EQ(t.steps[0].cost_before, 0.0);
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    EXPECT_EQ(t.steps[i].index, i + 1);
    EXPECT_EQ(t.steps[i].cost_after, t.steps[i].cost_before + t.steps[i].delta);
    if (i > 0) EXPECT_LE(t.steps[i].delta, 0.0);
  }
}

TEST(ForwardGreedy, FirstPickIsExactOneMedian) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const MetricSpace s = gen_random(12, seed % 2 ? RandomKind::kRandomGraph
                                                  : RandomKind::kUnitSquarePoints,
                                     seed);
    EXPECT_EQ(forward_greedy(s, 1, TiePolicy::Lexicographic()).final_set,
              exact_kmedian(s, 1).set);
  }
}

TEST(Exact, KEqualsN) {
  const ExactResult r = exact_kmedian(line3(), 3);
  EXPECT_EQ(r.set, FacilitySet::All(3));
  EXPECT_EQ(r.cost, 0.0);
}

TEST(Exact, StarOneMedian) {
  const ExactResult r = exact_kmedian(gen_star({3, 5}), 1);
  EXPECT_EQ(r.set, (FacilitySet{0}));
  EXPECT_EQ(r.cost, 21.0);
}

TEST(Exact, TreeOneMedians) {
  const ExactResult h2 = exact_kmedian(gen_tree_lb({2}), 1);
  EXPECT_EQ(h2.set, (FacilitySet{28}));
  EXPECT_EQ(h2.cost, 29.0);
  const ExactResult h3 = exact_kmedian(gen_tree_lb({3}), 1);
  EXPECT_EQ(h3.set, (FacilitySet{0}));
  EXPECT_EQ(h3.cost, 3400.0);
}

TEST(Exact, LexicographicTieBreak) {
  const ExactResult r = exact_kmedian(line3(), 2);
  EXPECT_EQ(r.set, (FacilitySet{0, 1}));
  EXPECT_EQ(r.cost, 1.0);
}

TEST(Exact, BudgetRefusalNamesCount) {
  const MetricSpace s = gen_random(30, RandomKind::kRandomGraph, 1);
  try {
    exact_kmedian(s, 15);
    FAIL() << "expected BudgetError";
  } catch (const BudgetError& e) {
    EXPECT_NE(std::string(e.what()).find("155117520"), std::string::npos) << e.what();
  }
  EXPECT_THROW(exact_kmedian(s, 2, 10), BudgetError);
  EXPECT_NO_THROW(exact_kmedian(s, 1, 0));
}

TEST(Exact, ParallelMatchesSerial) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const MetricSpace s = gen_random(12, RandomKind::kRandomGraph, seed);
    for (std::size_t k = 1; k <= 12; ++k) {
      const ExactResult a = exact_kmedian(s, k);
      const ExactResult b = exact_kmedian_serial(s, k);
      EXPECT_EQ(a.set, b.set);
      EXPECT_EQ(a.cost, b.cost);
      EXPECT_EQ(a.cost, cost(s, a.set));
    }
  }
}

TEST(RemovalDelta, SelfOnlyZeroWeight) {
  const MetricSpace s = MetricSpace::FromMatrix({{1, ""}, {0, ""}, {1, ""}},
                                                {0, 1, 2, 1, 0, 1, 2, 1, 0}, false);
  EXPECT_EQ(removal_delta(s, {0, 1, 2}, 1), 0.0);
}

TEST(RemovalDelta, StarY1) {
  const MetricSpace s = gen_star({10, 1000});
  EXPECT_EQ(removal_delta(s, testing::star_ys(10), testing::star_y(10, 1)), 1003.0);
}

TEST(RemovalDelta, Line) { EXPECT_EQ(removal_delta(line3(), {1, 2}, 2), 1.0); }

TEST(RemovalDelta, Errors) {
  EXPECT_THROW(removal_delta(line3(), {1}, 1), DomainError);
  EXPECT_THROW(removal_delta(line3(), {0, 1}, 2), InputError);
}

}  // namespace
}  // namespace revgreedy
