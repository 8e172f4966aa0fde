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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "revgreedy/bound_report.hpp"

namespace revgreedy {

using PointId = std::uint32_t;

struct Point {
  double weight = 1.0;
  std::string label;
};

struct Edge {
  PointId u = 0;
  PointId v = 0;
  double length = 0.0;
};

// Id layout and analytic distances of the lower-bound tree instance: a tree
// with `height` levels (leaves at level 1, root at level `height`), where
// every node at level j > 1 has (j+1)^3 children, plus one extra node adjacent
// to every leaf. All edges have unit length.
//
// Ids: 0 is the extra node ("mu"), then the levels in ascending order, each
// level in left-to-right order. The root ("rho") therefore has the last id.
class TreeLayout {
 public:
  static constexpr int kMaxHeight = 4;

  explicit TreeLayout(int height);

  int height() const { return height_; }
  std::size_t size() const { return offsets_.back(); }

  // Number of nodes on `level` (1-based).
  std::size_t level_count(int level) const;
  PointId first_id(int level) const;
  PointId root() const { return static_cast<PointId>(size() - 1); }
  static constexpr PointId mu() { return 0; }

  // 0 for mu, otherwise the tree level of `id`.
  int level_of(PointId id) const;
  std::size_t index_in_level(PointId id) const;
  // Parent of a non-root tree node.
  PointId parent(PointId id) const;

  double distance(PointId a, PointId b) const;
  std::vector<Edge> edges() const;

 private:
  int height_;
  // offsets_[l] = first id of level l; offsets_[0] = 0 (mu), last = size.
  std::vector<std::size_t> offsets_;
  // span_[i][l]: number of level-i descendants of one level-l node.
  std::vector<std::vector<std::size_t>> span_;
};

// Points with demand weights and a distance oracle (dense matrix, a matrix
// derived from a weighted graph, or the implicit tree layout). Immutable once
// built.
class MetricSpace {
 public:
  enum class Oracle { kDense, kGraph, kTree };

  // Dense matrix in row-major order. Rejects non-square, asymmetric,
  // negative or nonzero-diagonal input with a field diagnostic.
  static MetricSpace FromMatrix(std::vector<Point> points,
                                std::vector<double> matrix, bool pseudometric);
  static MetricSpace FromTree(int height);

  std::size_t size() const { return points_.size(); }
  const Point& point(PointId id) const;
  double weight(PointId id) const { return points_[id].weight; }
  std::span<const Point> points() const { return points_; }
  double total_weight() const { return total_weight_; }

  // Checked lookup; throws InputError on an invalid id.
  double distance(PointId a, PointId b) const;
  // Unchecked lookup for hot loops.
  double at(PointId a, PointId b) const {
    return tree_ ? tree_->distance(a, b) : matrix_[a * size() + b];
  }

  Oracle oracle() const { return oracle_; }
  const std::optional<TreeLayout>& tree() const { return tree_; }
  // Source edges for graph-derived spaces (empty otherwise).
  std::span<const Edge> edges() const { return edges_; }

  bool pseudometric() const { return pseudometric_; }
  // True when every weight and every distance is an integer; such spaces are
  // checked with zero tolerance.
  bool integral() const { return integral_; }
  double diameter() const;
  // Smallest strictly positive distance, if any.
  std::optional<double> min_positive_distance() const;

  std::span<const PointId> tie_priority() const { return tie_priority_; }
  void set_tie_priority(std::vector<PointId> priority);

  const std::vector<std::pair<std::string, std::string>>& metadata() const {
    return metadata_;
  }
  void add_metadata(std::string key, std::string value);

  // Same space with an explicit dense matrix.
  MetricSpace materialized() const;
  bool valid_id(PointId id) const { return id < size(); }

 private:
  MetricSpace() = default;
  void finish();

  std::vector<Point> points_;
  std::vector<double> matrix_;
  std::optional<TreeLayout> tree_;
  std::vector<Edge> edges_;
  Oracle oracle_ = Oracle::kDense;
  bool pseudometric_ = false;
  bool integral_ = false;
  double total_weight_ = 0.0;
  std::vector<PointId> tie_priority_;
  std::vector<std::pair<std::string, std::string>> metadata_;

  friend MetricSpace graph_to_metric(std::vector<Point>, std::span<const Edge>,
                                     bool);
};

// Sorted set of distinct point ids.
class FacilitySet {
 public:
  FacilitySet() = default;
  // Sorts; throws InputError on duplicates.
  explicit FacilitySet(std::vector<PointId> members);
  FacilitySet(std::initializer_list<PointId> members)
      : FacilitySet(std::vector<PointId>(members)) {}
  static FacilitySet All(std::size_t n);

  std::span<const PointId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(PointId id) const;
  bool is_subset_of(const FacilitySet& other) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  FacilitySet without(PointId id) const;
  FacilitySet with(PointId id) const;

  friend bool operator==(const FacilitySet&, const FacilitySet&) = default;

 private:
  std::vector<PointId> members_;
};

// Nearest and second-nearest open facility of one client. Ties go to the
// smaller id.
struct Assignment {
  PointId nearest = 0;
  double nearest_dist = 0.0;
  std::optional<PointId> second;
  std::optional<double> second_dist;
};

struct Nearest {
  PointId facility = 0;
  double dist = 0.0;

  friend bool operator==(const Nearest&, const Nearest&) = default;
};

// Throws InputError unless every member is a valid id of `space`.
void require_members(const MetricSpace& space, const FacilitySet& set,
                     const char* what);

// Weighted service cost: sum over x of weight(x) * c_{xF}, summed in id order.
double cost(const MetricSpace& space, const FacilitySet& facilities);

Nearest nearest_facility(const MetricSpace& space, PointId x,
                         const FacilitySet& facilities);

std::vector<Assignment> assign(const MetricSpace& space,
                               const FacilitySet& facilities);

// The facilities of `r` that serve the members of `m`.
FacilitySet serving_set(const MetricSpace& space, const FacilitySet& r,
                        const FacilitySet& m);

// 0 on integral spaces, 1e-9 otherwise.
double tolerance_for(const MetricSpace& space);

// Checks reflexivity, symmetry, nonnegativity, the triangle inequality and
// (unless the space is a pseudometric) positivity between distinct points.
// Reports the first violation found.
BoundReport verify_metric(const MetricSpace& space);

// All-pairs shortest paths over an undirected edge list. Throws InputError on
// negative lengths, bad endpoints, or a disconnected graph.
MetricSpace graph_to_metric(std::vector<Point> points,
                            std::span<const Edge> edges, bool pseudometric);

}  // namespace revgreedy
