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

// Data-parallel inner loops shared by the solvers and checks. Every kernel
// has a serial twin in kernels::serial with bit-identical output; the twins
// are kept for tests and for bench_kernels.
//
// Parallel kernels split work over independent items (clients, candidates,
// sources, subset ranges). Each item's floating-point sum is evaluated
// serially in id order, so results do not depend on the thread count.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "revgreedy/metric_space.hpp"

namespace revgreedy::kernels {

// Nearest and second-nearest open facility for every client.
std::vector<Assignment> nearest_two(const MetricSpace& space,
                                    std::span<const std::uint8_t> open);

// For each candidate f: sum_x weight(x) * min(current[x], d(x, f)).
// Use +infinity in `current` for "no facility yet".
std::vector<double> augmented_costs(const MetricSpace& space,
                                    std::span<const double> current,
                                    std::span<const PointId> candidates);

// Dense row-major all-pairs shortest path matrix; +infinity marks
// unreachable pairs. Dijkstra from every source.
std::vector<double> all_pairs_shortest_paths(std::size_t n,
                                             std::span<const Edge> edges);

struct TriangleViolation {
  PointId x = 0;
  PointId y = 0;
  PointId z = 0;
  double lhs = 0.0;  // d(x, z)
  double rhs = 0.0;  // d(x, y) + d(y, z)
};

// First (x, y, z) in lexicographic order with d(x,z) > d(x,y) + d(y,z) + tol.
std::optional<TriangleViolation> first_triangle_violation(
    const MetricSpace& space, double tol);

struct SubsetOptimum {
  std::vector<PointId> members;
  double cost = 0.0;
};

// Exhaustive minimum-cost k-subset; ties go to the lexicographically first
// subset. The caller bounds C(n, k).
SubsetOptimum best_subset(const MetricSpace& space, std::size_t k);

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

namespace serial {

std::vector<Assignment> nearest_two(const MetricSpace& space,
                                    std::span<const std::uint8_t> open);
std::vector<double> augmented_costs(const MetricSpace& space,
                                    std::span<const double> current,
                                    std::span<const PointId> candidates);
std::vector<double> all_pairs_shortest_paths(std::size_t n,
                                             std::span<const Edge> edges);
// Floyd-Warshall; independent route used to check the Dijkstra kernel.
std::vector<double> floyd_warshall(std::size_t n, std::span<const Edge> edges);
std::optional<TriangleViolation> first_triangle_violation(
    const MetricSpace& space, double tol);
SubsetOptimum best_subset(const MetricSpace& space, std::size_t k);

}  // namespace serial
}  // namespace revgreedy::kernels
