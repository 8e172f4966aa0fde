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

#include "revgreedy/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "revgreedy/errors.hpp"
#include "revgreedy/kernels.hpp"

namespace revgreedy {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t cube(std::size_t v) { return v * v * v; }

bool is_integer(double v) { return std::isfinite(v) && std::floor(v) == v; }

std::string pair_name(PointId a, PointId b) {
  std::ostringstream os;
  os << "(" << a << "," << b << ")";
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// TreeLayout

TreeLayout::TreeLayout(int height) : height_(height) {
  if (height < 1 || height > kMaxHeight) {
    throw InputError("tree height must be in [1, " +
                     std::to_string(kMaxHeight) + "], got " +
                     std::to_string(height));
  }
  // A level-l node has (l+1)^3 children, so span_[i][l] is the product of
  // (m+1)^3 for m = i+1..l.
  span_.assign(height + 1, std::vector<std::size_t>(height + 1, 1));
  for (int i = 1; i <= height; ++i) {
    for (int l = i + 1; l <= height; ++l) {
      span_[i][l] = span_[i][l - 1] * cube(l + 1);
    }
  }
  offsets_.push_back(0);
  offsets_.push_back(1);  // mu occupies id 0
  for (int l = 1; l <= height; ++l) {
    offsets_.push_back(offsets_.back() + span_[l][height]);
  }
}

std::size_t TreeLayout::level_count(int level) const {
  return span_.at(level).at(height_);
}

PointId TreeLayout::first_id(int level) const {
  return static_cast<PointId>(offsets_.at(level));
}

int TreeLayout::level_of(PointId id) const {
  if (id == mu()) return 0;
  for (int l = height_; l >= 1; --l) {
    if (id >= offsets_[l]) return l;
  }
  return 0;
}

std::size_t TreeLayout::index_in_level(PointId id) const {
  return id - offsets_[level_of(id)];
}

PointId TreeLayout::parent(PointId id) const {
  const int level = level_of(id);
  if (level == 0 || level == height_) {
    throw DomainError("node " + std::to_string(id) + " has no parent");
  }
  const std::size_t index = index_in_level(id);
  return static_cast<PointId>(offsets_[level + 1] + index / cube(level + 2));
}

double TreeLayout::distance(PointId a, PointId b) const {
  if (a == b) return 0.0;
  const int la = level_of(a);
  const int lb = level_of(b);
  if (la == 0) return lb;
  if (lb == 0) return la;
  const std::size_t ia = a - offsets_[la];
  const std::size_t ib = b - offsets_[lb];
  int lca = std::max(la, lb);
  while (ia / span_[la][lca] != ib / span_[lb][lca]) ++lca;
  // Either through the lowest common ancestor, or down to a leaf, across mu
  // and up again.
  return std::min(2 * lca - la - lb, la + lb);
}

std::vector<Edge> TreeLayout::edges() const {
  std::vector<Edge> out;
  for (PointId leaf = first_id(1); leaf < first_id(1) + level_count(1); ++leaf) {
    out.push_back({mu(), leaf, 1.0});
  }
  for (PointId id = first_id(1); id < root(); ++id) {
    out.push_back({id, parent(id), 1.0});
  }
  return out;
}

// ---------------------------------------------------------------------------
// MetricSpace

MetricSpace MetricSpace::FromMatrix(std::vector<Point> points,
                                    std::vector<double> matrix,
                                    bool pseudometric) {
  const std::size_t n = points.size();
  if (matrix.size() != n * n) {
    throw InputError("metric.matrix: expected " + std::to_string(n) + "x" +
                     std::to_string(n) + " entries, got " +
                     std::to_string(matrix.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = matrix[i * n + j];
      const std::string field = "metric.matrix[" + std::to_string(i) + "][" +
                                std::to_string(j) + "]";
      if (!std::isfinite(v) || v < 0) {
        throw InputError(field + ": distance must be finite and nonnegative");
      }
      if (i == j && v != 0) throw InputError(field + ": diagonal must be 0");
      if (v != matrix[j * n + i]) {
        throw InputError(field + ": matrix is not symmetric");
      }
    }
  }
  MetricSpace s;
  s.points_ = std::move(points);
  s.matrix_ = std::move(matrix);
  s.pseudometric_ = pseudometric;
  s.oracle_ = Oracle::kDense;
  s.finish();
  return s;
}

MetricSpace MetricSpace::FromTree(int height) {
  TreeLayout layout(height);
  std::vector<Point> points(layout.size());
  points[TreeLayout::mu()] = {1.0, "mu"};
  for (int l = 1; l <= height; ++l) {
    double w = 1.0;
    for (int m = 2; m <= l; ++m) w *= m;
    w = w * w * w;
    const PointId first = layout.first_id(l);
    for (std::size_t i = 0; i < layout.level_count(l); ++i) {
      points[first + i] = {w, "L" + std::to_string(l) + "_" + std::to_string(i)};
    }
  }
  points[layout.root()].label = "rho";
  MetricSpace s;
  s.points_ = std::move(points);
  s.tree_ = std::move(layout);
  s.pseudometric_ = true;
  s.oracle_ = Oracle::kTree;
  s.finish();
  return s;
}

void MetricSpace::finish() {
  if (points_.empty()) throw InputError("points: at least one point required");
  total_weight_ = 0.0;
  integral_ = true;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const double w = points_[i].weight;
    if (!std::isfinite(w) || w < 0) {
      throw InputError("points[" + std::to_string(i) +
                       "].weight: must be finite and nonnegative");
    }
    total_weight_ += w;
    integral_ = integral_ && is_integer(w);
  }
  if (!tree_) {
    integral_ = integral_ && std::all_of(matrix_.begin(), matrix_.end(), is_integer);
  }
}

const Point& MetricSpace::point(PointId id) const {
  if (!valid_id(id)) {
    throw InputError("invalid point id " + std::to_string(id));
  }
  return points_[id];
}

double MetricSpace::distance(PointId a, PointId b) const {
  if (!valid_id(a) || !valid_id(b)) {
    throw InputError("invalid point id in distance" + pair_name(a, b) +
                     "; space has " + std::to_string(size()) + " points");
  }
  return at(a, b);
}

double MetricSpace::diameter() const {
  // min(2L - a - b, a + b) <= L <= h, attained by mu and the root.
  if (tree_) return tree_->height();
  return matrix_.empty() ? 0.0 : *std::max_element(matrix_.begin(), matrix_.end());
}

std::optional<double> MetricSpace::min_positive_distance() const {
  if (tree_) return 1.0;
  std::optional<double> best;
  for (double v : matrix_) {
    if (v > 0 && (!best || v < *best)) best = v;
  }
  return best;
}

void MetricSpace::set_tie_priority(std::vector<PointId> priority) {
  std::vector<std::uint8_t> seen(size(), 0);
  for (std::size_t i = 0; i < priority.size(); ++i) {
    const PointId id = priority[i];
    if (!valid_id(id)) {
      throw InputError("tie_priority[" + std::to_string(i) +
                       "]: invalid point id " + std::to_string(id));
    }
    if (seen[id]++) {
      throw InputError("tie_priority[" + std::to_string(i) +
                       "]: duplicate point id " + std::to_string(id));
    }
  }
  tie_priority_ = std::move(priority);
}

void MetricSpace::add_metadata(std::string key, std::string value) {
  metadata_.emplace_back(std::move(key), std::move(value));
}

MetricSpace MetricSpace::materialized() const {
  if (!tree_) return *this;
  const std::size_t n = size();
  MetricSpace s = *this;
  s.matrix_.resize(n * n);
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = 0; b < n; ++b) s.matrix_[a * n + b] = tree_->distance(a, b);
  }
  s.tree_.reset();
  s.oracle_ = Oracle::kDense;
  return s;
}

// ---------------------------------------------------------------------------
// FacilitySet

FacilitySet::FacilitySet(std::vector<PointId> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw InputError("facility set contains duplicate ids");
  }
}

FacilitySet FacilitySet::All(std::size_t n) {
  FacilitySet s;
  s.members_.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.members_[i] = static_cast<PointId>(i);
  return s;
}

bool FacilitySet::contains(PointId id) const {
  return std::binary_search(members_.begin(), members_.end(), id);
}

bool FacilitySet::is_subset_of(const FacilitySet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

FacilitySet FacilitySet::without(PointId id) const {
  FacilitySet s;
  s.members_.reserve(members_.size());
  for (PointId m : members_) {
    if (m != id) s.members_.push_back(m);
  }
  return s;
}

FacilitySet FacilitySet::with(PointId id) const {
  if (contains(id)) return *this;
  FacilitySet s = *this;
  s.members_.insert(std::upper_bound(s.members_.begin(), s.members_.end(), id),
                    id);
  return s;
}

// ---------------------------------------------------------------------------
// Operations

void require_members(const MetricSpace& space, const FacilitySet& set,
                     const char* what) {
  for (PointId id : set) {
    if (!space.valid_id(id)) {
      throw InputError(std::string(what) + ": invalid point id " +
                       std::to_string(id));
    }
  }
}

namespace {

void require_nonempty(const FacilitySet& set, const char* what) {
  if (set.empty()) {
    throw DomainError(std::string(what) + ": facility set must be nonempty");
  }
}

}  // namespace

double cost(const MetricSpace& space, const FacilitySet& facilities) {
  require_nonempty(facilities, "cost");
  require_members(space, facilities, "cost");
  double total = 0.0;
  for (PointId x = 0; x < space.size(); ++x) {
    double best = kInf;
    for (PointId f : facilities) best = std::min(best, space.at(x, f));
    total += space.weight(x) * best;
  }
  return total;
}

Nearest nearest_facility(const MetricSpace& space, PointId x,
                         const FacilitySet& facilities) {
  require_nonempty(facilities, "nearest_facility");
  require_members(space, facilities, "nearest_facility");
  if (!space.valid_id(x)) {
    throw InputError("nearest_facility: invalid point id " + std::to_string(x));
  }
  Nearest best{facilities.members().front(), kInf};
  for (PointId f : facilities) {
    const double d = space.at(x, f);
    if (d < best.dist) best = {f, d};
  }
  return best;
}

std::vector<Assignment> assign(const MetricSpace& space,
                               const FacilitySet& facilities) {
  require_nonempty(facilities, "assign");
  require_members(space, facilities, "assign");
  std::vector<std::uint8_t> open(space.size(), 0);
  for (PointId f : facilities) open[f] = 1;
  return kernels::nearest_two(space, open);
}

FacilitySet serving_set(const MetricSpace& space, const FacilitySet& r,
                        const FacilitySet& m) {
  require_nonempty(r, "serving_set");
  require_members(space, m, "serving_set");
  std::vector<PointId> q;
  for (PointId mu : m) q.push_back(nearest_facility(space, mu, r).facility);
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  return FacilitySet(std::move(q));
}

double tolerance_for(const MetricSpace& space) {
  return space.integral() ? 0.0 : 1e-9;
}

BoundReport verify_metric(const MetricSpace& space) {
  BoundReport report;
  report.check = "metric";
  const double tol = tolerance_for(space);
  const std::size_t n = space.size();
  auto fail = [&](std::string witness, double lhs, double rhs) {
    report.holds = false;
    report.witness = std::move(witness);
    report.lhs = lhs;
    report.rhs = rhs;
    return report;
  };
  for (PointId a = 0; a < n; ++a) {
    if (space.at(a, a) != 0) {
      return fail("reflexivity" + pair_name(a, a), space.at(a, a), 0.0);
    }
    for (PointId b = 0; b < n; ++b) {
      const double ab = space.at(a, b);
      if (ab < 0) return fail("negative" + pair_name(a, b), 0.0, ab);
      if (ab != space.at(b, a)) {
        return fail("symmetry" + pair_name(a, b), ab, space.at(b, a));
      }
      if (a != b && ab == 0 && !space.pseudometric()) {
        return fail("zero distance between distinct points" + pair_name(a, b),
                    0.0, 0.0);
      }
    }
  }
  if (auto v = kernels::first_triangle_violation(space, tol)) {
    std::ostringstream os;
    os << "triangle(" << v->x << "," << v->y << "," << v->z << ")";
    return fail(os.str(), v->lhs, v->rhs);
  }
  return report;
}

MetricSpace graph_to_metric(std::vector<Point> points,
                            std::span<const Edge> edges, bool pseudometric) {
  const std::size_t n = points.size();
  if (n == 0) throw InputError("points: at least one point required");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    const std::string field = "metric.edges[" + std::to_string(i) + "]";
    if (e.u >= n || e.v >= n) throw InputError(field + ": invalid endpoint");
    if (!std::isfinite(e.length) || e.length < 0) {
      throw InputError(field + ": length must be finite and nonnegative");
    }
  }
  std::vector<double> matrix = kernels::all_pairs_shortest_paths(n, edges);
  for (PointId b = 0; b < n; ++b) {
    if (matrix[b] == kInf) {
      throw InputError("graph is disconnected: no path between points 0 and " +
                       std::to_string(b));
    }
  }
  MetricSpace s = MetricSpace::FromMatrix(std::move(points), std::move(matrix),
                                          pseudometric);
  s.edges_.assign(edges.begin(), edges.end());
  s.oracle_ = MetricSpace::Oracle::kGraph;
  return s;
}

}  // namespace revgreedy
