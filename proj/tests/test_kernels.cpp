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

#include <omp.h>

#include "revgreedy/instance_gen.hpp"
#include "revgreedy/kernels.hpp"
#include "revgreedy/random.hpp"

namespace revgreedy {
namespace {

std::vector<MetricSpace> sample_spaces() {
  std::vector<MetricSpace> out;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    out.push_back(gen_random(40, RandomKind::kUnitSquarePoints, seed));
    out.push_back(gen_random(40, RandomKind::kRandomGraph, seed));
  }
  out.push_back(gen_tree_lb({2}));
  out.push_back(gen_star({6, 7}));
  return out;
}

// Runs `f` with several thread counts so the parallel path is exercised even
// when the default team has one thread.
template <typename F>
void with_threads(F f) {
  const int saved = omp_get_max_threads();
  for (int t : {1, 2, 4}) {
    omp_set_num_threads(t);
    f(t);
  }
  omp_set_num_threads(saved);
}

void expect_same(const std::vector<Assignment>& a, const std::vector<Assignment>& b) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].nearest, b[i].nearest);
    EXPECT_EQ(a[i].nearest_dist, b[i].nearest_dist);
    EXPECT_EQ(a[i].second, b[i].second);
    EXPECT_EQ(a[i].second_dist, b[i].second_dist);
  }
}

TEST(Kernels, NearestTwoMatchesSerial) {
  Rng rng(9);
  for (const MetricSpace& s : sample_spaces()) {
    std::vector<std::uint8_t> open(s.size(), 0);
    for (auto& o : open) o = uniform_below(rng, 3) == 0;
    open[0] = 1;
    with_threads([&](int) {
      expect_same(kernels::nearest_two(s, open), kernels::serial::nearest_two(s, open));
    });
  }
}

TEST(Kernels, AugmentedCostsMatchSerial) {
  for (const MetricSpace& s : sample_spaces()) {
    std::vector<double> current(s.size());
    for (PointId x = 0; x < s.size(); ++x) current[x] = s.at(x, 0);
    std::vector<PointId> candidates;
    for (PointId f = 0; f < s.size(); f += 2) candidates.push_back(f);
    with_threads([&](int) {
      EXPECT_EQ(kernels::augmented_costs(s, current, candidates),
                kernels::serial::augmented_costs(s, current, candidates));
    });
  }
}

TEST(Kernels, ShortestPathsAgree) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const MetricSpace s = gen_random(30, RandomKind::kRandomGraph, seed);
    const auto fw = kernels::serial::floyd_warshall(s.size(), s.edges());
    with_threads([&](int) {
      EXPECT_EQ(kernels::all_pairs_shortest_paths(s.size(), s.edges()), fw);
      EXPECT_EQ(kernels::serial::all_pairs_shortest_paths(s.size(), s.edges()), fw);
    });
  }
}

TEST(Kernels, ShortestPathsUnreachableIsInfinite) {
  const std::vector<Edge> e{{0, 1, 2.0}};
  const auto d = kernels::all_pairs_shortest_paths(3, e);
  EXPECT_EQ(d[1], 2.0);
  EXPECT_TRUE(std::isinf(d[2]));
}

TEST(Kernels, TriangleScanMatchesSerial) {
  const MetricSpace bad = MetricSpace::FromMatrix(
      {{1, ""}, {1, ""}, {1, ""}, {1, ""}},
      {0, 1, 1, 9, 1, 0, 1, 1, 1, 1, 0, 1, 9, 1, 1, 0}, false);
  with_threads([&](int) {
    const auto p = kernels::first_triangle_violation(bad, 0.0);
    const auto q = kernels::serial::first_triangle_violation(bad, 0.0);
    ASSERT_TRUE(p && q);
    EXPECT_EQ(std::tie(p->x, p->y, p->z), std::tie(q->x, q->y, q->z));
  });
  for (const MetricSpace& s : sample_spaces()) {
    EXPECT_FALSE(kernels::first_triangle_violation(s, 1e-9));
  }
}

TEST(Kernels, BestSubsetMatchesSerial) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const MetricSpace s = gen_random(13, seed % 2 ? RandomKind::kRandomGraph
                                                  : RandomKind::kUnitSquarePoints,
                                     seed);
    for (std::size_t k : {2, 3, 6}) {
      const auto expected = kernels::serial::best_subset(s, k);
      with_threads([&](int t) {
        const auto got = kernels::best_subset(s, k);
        EXPECT_EQ(got.members, expected.members) << "threads=" << t << " k=" << k;
        EXPECT_EQ(got.cost, expected.cost);
      });
    }
  }
}

TEST(Kernels, Binomial) {
  EXPECT_EQ(kernels::binomial(5, 2), 10u);
  EXPECT_EQ(kernels::binomial(29, 14), 77558760u);
  EXPECT_EQ(kernels::binomial(3, 5), 0u);
  EXPECT_EQ(kernels::binomial(1000, 500), UINT64_MAX);
}

}  // namespace
}  // namespace revgreedy
