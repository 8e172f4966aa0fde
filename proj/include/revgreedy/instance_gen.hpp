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
#include <string_view>

#include "revgreedy/metric_space.hpp"

namespace revgreedy {

struct TreeInstanceParams {
  int h = 2;
  // h = 4 has 224,127 weighted points and is refused unless this is set.
  bool allow_large = false;
};

struct StarInstanceParams {
  int j = 3;
  double w = 1.0;
};

enum class RandomKind { kUnitSquarePoints, kRandomGraph };

RandomKind parse_random_kind(std::string_view name);
std::string_view random_kind_name(RandomKind kind);

// Lower-bound tree: every tree node is one weighted point (weight (j!)^3 at
// level j), plus "mu" (weight 1) adjacent to every leaf. Ships a tie priority
// of mu first, then ascending level.
MetricSpace gen_tree_lb(const TreeInstanceParams& params);

// Star/cluster instance: mu, clusters x_1..x_j of weight w, singletons
// y_1..y_j. Ids: mu = 0, x_i = i, y_i = j + i.
MetricSpace gen_star(const StarInstanceParams& params);

// k copies of `base` at mutual distance `separation`; the default is
// 4 * diameter * total weight. Copy c occupies ids [c*n, (c+1)*n).
MetricSpace gen_k_copies(const MetricSpace& base, int k,
                         std::optional<double> separation = std::nullopt);

// Unit-weight random instance; identical seeds give identical instances.
MetricSpace gen_random(std::size_t n, RandomKind kind, std::uint64_t seed);

// d'(x, y) = max(d(x, y), eps) for x != y. Requires
// 0 < eps < min positive distance / 2. The result is a true metric.
MetricSpace epsilon_perturb(const MetricSpace& space, double eps);

}  // namespace revgreedy
