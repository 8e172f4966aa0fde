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
#include <string>
#include <string_view>
#include <vector>

#include "revgreedy/metric_space.hpp"

namespace revgreedy {

// Rule for choosing among candidates with exactly equal cost.
class TiePolicy {
 public:
  enum class Kind { kLexicographic, kPriority, kSeededRandom };

  static TiePolicy Lexicographic() { return TiePolicy(Kind::kLexicographic); }
  // `order` lists ids highest priority first; unlisted ids follow by id.
  static TiePolicy Priority(std::vector<PointId> order);
  static TiePolicy SeededRandom(std::uint64_t seed);

  // Parses "lex", "priority" (uses the space's tie_priority) or "random:SEED".
  static TiePolicy Parse(std::string_view text, const MetricSpace& space);

  Kind kind() const { return kind_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<PointId>& order() const { return order_; }
  std::string to_string() const;

  // Rank table for lexicographic and priority policies (lower = preferred).
  // Throws InputError if the priority list names ids outside the space.
  std::vector<std::uint64_t> ranks(std::size_t n) const;

 private:
  explicit TiePolicy(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::uint64_t seed_ = 0;
  std::vector<PointId> order_;
};

enum class Direction { kReverse, kForward };

struct TraceStep {
  // Reverse: |R| before the removal (n, n-1, ..., k+1).
  // Forward: |F| after the addition (1, 2, ..., k).
  std::size_t index = 0;
  PointId point = 0;
  double cost_before = 0.0;
  double cost_after = 0.0;
  double delta = 0.0;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct GreedyTrace {
  Direction direction = Direction::kReverse;
  std::size_t n = 0;
  std::size_t k_target = 0;
  std::vector<TraceStep> steps;
  FacilitySet final_set;

  double final_cost() const;
  friend bool operator==(const GreedyTrace&, const GreedyTrace&) = default;
};

// Reverse greedy: start from every point and repeatedly close the facility
// whose removal raises the cost least. Incremental nearest/second-nearest
// maintenance with a lazily invalidated min-heap of removal deltas.
//
// The full chain down to one facility is computed and truncated at k, so the
// trace for k is a prefix of the trace for any smaller k. Removal deltas are
// summed over the clients of the removed facility in id order, and
// cost_after = cost_before + delta exactly.
GreedyTrace rgreedy(const MetricSpace& space, std::size_t k,
                    const TiePolicy& tie);

// Same contract as rgreedy, recomputing every candidate's removal delta from
// scratch at every step. Trace is identical to rgreedy's.
GreedyTrace rgreedy_reference(const MetricSpace& space, std::size_t k,
                              const TiePolicy& tie);

// Forward greedy: start empty and repeatedly add the facility minimizing the
// new cost. The first step reports cost_before = 0.
GreedyTrace forward_greedy(const MetricSpace& space, std::size_t k,
                           const TiePolicy& tie);

// cost(R \ {r}) - cost(R), evaluated client by client in id order.
double removal_delta(const MetricSpace& space, const FacilitySet& r_set,
                     PointId r);

struct ExactResult {
  FacilitySet set;
  double cost = 0.0;
};

inline constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;

// Optimal k-median by exhaustive search. k = 1 is always a linear scan;
// otherwise refuses with BudgetError when C(n, k) exceeds `budget`. Ties go
// to the lexicographically smallest member list.
ExactResult exact_kmedian(const MetricSpace& space, std::size_t k,
                          std::uint64_t budget = kDefaultSubsetBudget);
// Serial twin of exact_kmedian.
ExactResult exact_kmedian_serial(const MetricSpace& space, std::size_t k,
                                 std::uint64_t budget = kDefaultSubsetBudget);

// First n - k steps of a reverse chain, with the final set rebuilt.
GreedyTrace truncate_chain(const GreedyTrace& chain, std::size_t k);

}  // namespace revgreedy
