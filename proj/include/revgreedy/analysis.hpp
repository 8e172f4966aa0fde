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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "revgreedy/bound_report.hpp"
#include "revgreedy/metric_space.hpp"
#include "revgreedy/solvers.hpp"

namespace revgreedy {

// H_m = 1 + 1/2 + ... + 1/m, with H_0 = 0.
double harmonic_number(std::size_t m);

// c_{xQ} <= 2 c_{xM} + c_{xR} for every x, where Q = serving_set(R, M).
// The witness is the x with the least slack.
BoundReport check_lemma1(const MetricSpace& space, const FacilitySet& r,
                         const FacilitySet& m);

// sum_{r in R \ Q} [cost(R - r) - cost(R)] <= cost(Q) - cost(R) for a
// nonempty proper subset Q of R.
BoundReport check_supermodularity(const MetricSpace& space,
                                  const FacilitySet& q, const FacilitySet& r);

// delta_j <= 2 cost(M_k) / (j - k) for every step j > k of a reverse trace,
// M_k the exact k-median. One report per step.
std::vector<BoundReport> check_step_bounds(
    const MetricSpace& space, const GreedyTrace& trace, std::size_t k,
    std::uint64_t budget = kDefaultSubsetBudget);

// cost(RGreedy_k) / cost(M_k) <= 2 H_{n-k}. With a zero optimum the check
// compares costs instead (lhs = RGreedy cost, rhs = 0) and the ratio is 1.
BoundReport check_harmonic(const MetricSpace& space, std::size_t k,
                           const TiePolicy& tie = TiePolicy::Lexicographic(),
                           std::uint64_t budget = kDefaultSubsetBudget);

// check_harmonic from precomputed costs.
BoundReport harmonic_report(const MetricSpace& space, std::size_t k,
                            double greedy_cost, double optimum);

// min_r [cost(R - r) - cost(R)] <= 2 cost(mu*) / (|R| - 1), mu* the exact
// 1-median. The witness carries the minimizing r and the tightness rhs/lhs.
BoundReport check_general_inequality(const MetricSpace& space,
                                     const FacilitySet& r);

// rhs / lhs of a general-inequality report (infinity when lhs is 0).
double tightness(const BoundReport& general);

// Bookkeeping around the unit ball B of the exact 1-median mu: zone Z_i holds
// the points x with i-1 < d(x, mu)/radius <= i that serve some member of B at
// some time during the reverse greedy run.
struct BallInstrumentation {
  PointId center = 0;
  double radius = 1.0;
  std::vector<PointId> ball;
  std::vector<std::vector<PointId>> zones;
  // t[j]: removals performed before the last facility of Z_0 u ... u Z_j is
  // removed; empty if that union keeps a facility to the end.
  std::vector<std::optional<std::size_t>> t;
  // Total weight of the members of Z_i.
  std::vector<double> m_static;
  // For j >= 7: weight of clients served by Z_j at time t[j-6], when defined.
  std::vector<std::optional<double>> m_operational;
  double weighted_sum_all = 0.0;   // sum_i i * m_static[i]
  double weighted_sum_ge10 = 0.0;  // sum_{i >= 10} i * m_static[i]
  std::optional<double> operational_sum_ge10;
  double never_serving_weight = 0.0;
  // Longest run of consecutive empty zones strictly between 0 and the last
  // nonempty zone.
  std::size_t max_empty_run = 0;

  std::size_t max_zone() const { return zones.empty() ? 0 : zones.size() - 1; }
};

// Replays a full reverse trace (down to one facility).
BallInstrumentation ball_instrumentation(const MetricSpace& space,
                                         const GreedyTrace& trace,
                                         double radius = 1.0);

}  // namespace revgreedy
