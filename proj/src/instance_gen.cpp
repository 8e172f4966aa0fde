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

#include "revgreedy/instance_gen.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "revgreedy/errors.hpp"
#include "revgreedy/random.hpp"

namespace revgreedy {
namespace {

// 1 + sum_i ((h+1)!/(i+1)!)^3, in floating point so h >= 5 does not overflow.
double tree_point_estimate(int h) {
  double total = 1.0;
  for (int i = 1; i <= h; ++i) {
    double ratio = 1.0;
    for (int m = i + 2; m <= h + 1; ++m) ratio *= m;
    total += ratio * ratio * ratio;
  }
  return total;
}

}  // namespace

RandomKind parse_random_kind(std::string_view name) {
  if (name == "unit_square_points") return RandomKind::kUnitSquarePoints;
  if (name == "random_graph") return RandomKind::kRandomGraph;
  throw InputError("unknown random instance kind \"" + std::string(name) +
                   "\" (expected unit_square_points or random_graph)");
}

std::string_view random_kind_name(RandomKind kind) {
  return kind == RandomKind::kUnitSquarePoints ? "unit_square_points"
                                               : "random_graph";
}

MetricSpace gen_tree_lb(const TreeInstanceParams& params) {
  if (params.h < 1) {
    throw InputError("tree height h must be >= 1, got " +
                     std::to_string(params.h));
  }
  if (params.h > TreeLayout::kMaxHeight ||
      (params.h == TreeLayout::kMaxHeight && !params.allow_large)) {
    std::ostringstream os;
    os << "tree h=" << params.h << " has about " << tree_point_estimate(params.h)
       << " weighted points; ";
    if (params.h > TreeLayout::kMaxHeight) {
      os << "heights above " << TreeLayout::kMaxHeight << " are not supported";
    } else {
      os << "pass allow_large (--allow-large) to build it";
    }
    throw BudgetError(os.str());
  }
  MetricSpace space = MetricSpace::FromTree(params.h);
  std::vector<PointId> priority(space.size());
  for (PointId i = 0; i < space.size(); ++i) priority[i] = i;
  space.set_tie_priority(std::move(priority));
  space.add_metadata("generator", "tree_lb");
  space.add_metadata("h", std::to_string(params.h));
  space.add_metadata("clusters",
                     "each cluster is one point carrying the cluster size as "
                     "its weight; the initial per-cluster removals are not "
                     "replayed");
  return space;
}

MetricSpace gen_star(const StarInstanceParams& params) {
  if (params.j < 1) {
    throw InputError("star arm count j must be >= 1, got " +
                     std::to_string(params.j));
  }
  if (!(params.w >= 1.0) || !std::isfinite(params.w)) {
    throw InputError("star cluster weight w must be >= 1");
  }
  const auto j = static_cast<PointId>(params.j);
  std::vector<Point> points(2 * j + 1);
  points[0] = {1.0, "mu"};
  std::vector<Edge> edges;
  for (PointId i = 1; i <= j; ++i) {
    points[i] = {params.w, "x" + std::to_string(i)};
    points[j + i] = {1.0, "y" + std::to_string(i)};
    edges.push_back({0, i, 1.0});
    for (PointId l = 1; l <= j; ++l) {
      edges.push_back({i, j + l, l == i ? 1.0 : 2.0});
    }
  }
  MetricSpace space = graph_to_metric(std::move(points), edges, false);
  space.add_metadata("generator", "star");
  std::ostringstream os;
  os << "j=" << params.j << " w=" << params.w;
  space.add_metadata("params", os.str());
  return space;
}

MetricSpace gen_k_copies(const MetricSpace& base, int k,
                         std::optional<double> separation) {
  if (k < 1) throw InputError("k-copies: k must be >= 1");
  const double diameter = base.diameter();
  double sep = separation.value_or(4.0 * diameter * base.total_weight());
  if (!separation && sep <= 0) sep = 1.0;
  if (!std::isfinite(sep) || sep < 2.0 * diameter) {
    std::ostringstream os;
    os << "k-copies: separation " << sep << " is below 2 * diameter = "
       << 2.0 * diameter;
    throw InputError(os.str());
  }
  if (k == 1) return base;
  const std::size_t n = base.size();
  const std::size_t total = n * static_cast<std::size_t>(k);
  std::vector<Point> points;
  points.reserve(total);
  std::vector<double> matrix(total * total, sep);
  std::vector<PointId> priority;
  for (int c = 0; c < k; ++c) {
    const std::size_t off = c * n;
    for (PointId a = 0; a < n; ++a) {
      Point p = base.point(a);
      if (!p.label.empty()) p.label += "#" + std::to_string(c);
      points.push_back(std::move(p));
      for (PointId b = 0; b < n; ++b) {
        matrix[(off + a) * total + off + b] = base.at(a, b);
      }
    }
    for (PointId id : base.tie_priority()) {
      priority.push_back(static_cast<PointId>(off + id));
    }
  }
  MetricSpace out = MetricSpace::FromMatrix(std::move(points), std::move(matrix),
                                            base.pseudometric());
  out.set_tie_priority(std::move(priority));
  out.add_metadata("generator", "k_copies");
  out.add_metadata("copies", std::to_string(k));
  std::ostringstream os;
  os << sep;
  out.add_metadata("separation", os.str());
  return out;
}

MetricSpace gen_random(std::size_t n, RandomKind kind, std::uint64_t seed) {
  if (n == 0) throw InputError("random instance: n must be >= 1");
  Rng rng(seed);
  std::vector<Point> points(n);
  MetricSpace space = [&] {
    if (kind == RandomKind::kUnitSquarePoints) {
      std::vector<double> xs(n), ys(n);
      for (std::size_t i = 0; i < n; ++i) {
        xs[i] = uniform_unit(rng);
        ys[i] = uniform_unit(rng);
      }
      std::vector<double> matrix(n * n, 0.0);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          const double d = std::hypot(xs[a] - xs[b], ys[a] - ys[b]);
          matrix[a * n + b] = matrix[b * n + a] = d;
        }
      }
      return MetricSpace::FromMatrix(std::move(points), std::move(matrix), false);
    }
    // Random spanning tree plus n extra edges, integer lengths in [1, 10].
    std::vector<Edge> edges;
    for (PointId v = 1; v < n; ++v) {
      const auto u = static_cast<PointId>(uniform_below(rng, v));
      edges.push_back({u, v, 1.0 + static_cast<double>(uniform_below(rng, 10))});
    }
    if (n >= 2) {
      for (std::size_t e = 0; e < n; ++e) {
        const auto u = static_cast<PointId>(uniform_below(rng, n));
        auto v = static_cast<PointId>(uniform_below(rng, n - 1));
        if (v >= u) ++v;
        edges.push_back({u, v, 1.0 + static_cast<double>(uniform_below(rng, 10))});
      }
    }
    return graph_to_metric(std::move(points), edges, false);
  }();
  space.add_metadata("generator", "random");
  space.add_metadata("kind", std::string(random_kind_name(kind)));
  space.add_metadata("seed", std::to_string(seed));
  return space;
}

MetricSpace epsilon_perturb(const MetricSpace& space, double eps) {
  if (!(eps > 0) || !std::isfinite(eps)) {
    throw InputError("epsilon must be positive and finite");
  }
  if (auto limit = space.min_positive_distance(); limit && eps >= *limit / 2) {
    std::ostringstream os;
    os << "epsilon " << eps << " must be below half the smallest positive "
       << "distance " << *limit;
    throw InputError(os.str());
  }
  const std::size_t n = space.size();
  std::vector<Point> points(space.points().begin(), space.points().end());
  std::vector<double> matrix(n * n, 0.0);
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = 0; b < n; ++b) {
      if (a != b) matrix[a * n + b] = std::max(space.at(a, b), eps);
    }
  }
  MetricSpace out =
      MetricSpace::FromMatrix(std::move(points), std::move(matrix), false);
  out.set_tie_priority(
      std::vector<PointId>(space.tie_priority().begin(), space.tie_priority().end()));
  for (const auto& [k, v] : space.metadata()) out.add_metadata(k, v);
  std::ostringstream os;
  os << eps;
  out.add_metadata("epsilon", os.str());
  return out;
}

}  // namespace revgreedy
