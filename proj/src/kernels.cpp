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

#include "revgreedy/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <queue>
#include <utility>

namespace revgreedy::kernels {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Assignment nearest_two_of(const MetricSpace& space, PointId x,
                          std::span<const std::uint8_t> open) {
  PointId first = 0, second = 0;
  double d1 = kInf, d2 = kInf;
  bool have_first = false, have_second = false;
  for (PointId f = 0; f < space.size(); ++f) {
    if (!open[f]) continue;
    const double d = space.at(x, f);
    if (!have_first || d < d1) {
      if (have_first) {
        second = first;
        d2 = d1;
        have_second = true;
      }
      first = f;
      d1 = d;
      have_first = true;
    } else if (!have_second || d < d2) {
      second = f;
      d2 = d;
      have_second = true;
    }
  }
  Assignment a;
  a.nearest = first;
  a.nearest_dist = d1;
  if (have_second) {
    a.second = second;
    a.second_dist = d2;
  }
  return a;
}

double augmented_cost_of(const MetricSpace& space,
                         std::span<const double> current, PointId f) {
  double total = 0.0;
  for (PointId x = 0; x < space.size(); ++x) {
    total += space.weight(x) * std::min(current[x], space.at(x, f));
  }
  return total;
}

using Adjacency = std::vector<std::vector<std::pair<PointId, double>>>;

Adjacency build_adjacency(std::size_t n, std::span<const Edge> edges) {
  Adjacency adj(n);
  for (const Edge& e : edges) {
    adj[e.u].emplace_back(e.v, e.length);
    adj[e.v].emplace_back(e.u, e.length);
  }
  return adj;
}

void dijkstra_row(const Adjacency& adj, PointId source, double* row) {
  const std::size_t n = adj.size();
  std::fill(row, row + n, kInf);
  using Item = std::pair<double, PointId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  row[source] = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (d > row[u]) continue;
    for (auto [v, len] : adj[u]) {
      const double nd = d + len;
      if (nd < row[v]) {
        row[v] = nd;
        queue.emplace(nd, v);
      }
    }
  }
}

std::optional<TriangleViolation> triangle_row(const MetricSpace& space,
                                              PointId x, double tol) {
  const std::size_t n = space.size();
  for (PointId y = 0; y < n; ++y) {
    const double xy = space.at(x, y);
    for (PointId z = 0; z < n; ++z) {
      const double lhs = space.at(x, z);
      const double rhs = xy + space.at(y, z);
      if (lhs > rhs + tol) return TriangleViolation{x, y, z, lhs, rhs};
    }
  }
  return std::nullopt;
}

// Same scan over a row-major matrix; the inner loop has no early exit.
std::optional<TriangleViolation> triangle_row(const double* d, std::size_t n,
                                              PointId x, double tol) {
  const double* dx = d + std::size_t{x} * n;
  for (PointId y = 0; y < n; ++y) {
    const double xy = dx[y];
    const double* dy = d + std::size_t{y} * n;
    bool bad = false;
    for (std::size_t z = 0; z < n; ++z) bad |= dx[z] > xy + dy[z] + tol;
    if (!bad) continue;
    for (PointId z = 0; z < n; ++z) {
      if (dx[z] > xy + dy[z] + tol) {
        return TriangleViolation{x, y, z, dx[z], xy + dy[z]};
      }
    }
  }
  return std::nullopt;
}

constexpr std::size_t kMaxDenseTriangle = 8192;

std::vector<double> dense_copy(const MetricSpace& space) {
  const std::size_t n = space.size();
  std::vector<double> d(n * n);
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = 0; b < n; ++b) d[a * n + b] = space.at(a, b);
  }
  return d;
}

// Lexicographic unranking of k-combinations of {0..n-1}.
std::vector<PointId> unrank_combination(std::uint64_t rank, std::size_t n,
                                        std::size_t k) {
  std::vector<PointId> out;
  out.reserve(k);
  std::size_t next = 0;
  for (std::size_t slot = 0; slot < k; ++slot) {
    for (std::size_t v = next; v < n; ++v) {
      const std::uint64_t block = binomial(n - v - 1, k - slot - 1);
      if (rank < block) {
        out.push_back(static_cast<PointId>(v));
        next = v + 1;
        break;
      }
      rank -= block;
    }
  }
  return out;
}

bool next_combination(std::vector<PointId>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

double subset_cost(const MetricSpace& space, std::span<const PointId> set) {
  double total = 0.0;
  for (PointId x = 0; x < space.size(); ++x) {
    double best = kInf;
    for (PointId f : set) best = std::min(best, space.at(x, f));
    total += space.weight(x) * best;
  }
  return total;
}

// Scans `count` combinations starting at lexicographic rank `start`.
SubsetOptimum scan_subsets(const MetricSpace& space, std::size_t k,
                           std::uint64_t start, std::uint64_t count) {
  SubsetOptimum best;
  best.cost = kInf;
  if (count == 0) return best;
  std::vector<PointId> c = unrank_combination(start, space.size(), k);
  for (std::uint64_t i = 0; i < count; ++i) {
    const double v = subset_cost(space, c);
    if (best.members.empty() || v < best.cost) {
      best.members = c;
      best.cost = v;
    }
    if (i + 1 < count) next_combination(c, space.size());
  }
  return best;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(result);
}

std::vector<Assignment> nearest_two(const MetricSpace& space,
                                    std::span<const std::uint8_t> open) {
  const auto n = static_cast<std::ptrdiff_t>(space.size());
  std::vector<Assignment> out(space.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t x = 0; x < n; ++x) {
    out[x] = nearest_two_of(space, static_cast<PointId>(x), open);
  }
  return out;
}

std::vector<double> augmented_costs(const MetricSpace& space,
                                    std::span<const double> current,
                                    std::span<const PointId> candidates) {
  const auto m = static_cast<std::ptrdiff_t>(candidates.size());
  std::vector<double> out(candidates.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    out[i] = augmented_cost_of(space, current, candidates[i]);
  }
  return out;
}

std::vector<double> all_pairs_shortest_paths(std::size_t n,
                                             std::span<const Edge> edges) {
  const Adjacency adj = build_adjacency(n, edges);
  std::vector<double> out(n * n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t s = 0; s < count; ++s) {
    dijkstra_row(adj, static_cast<PointId>(s), out.data() + s * n);
  }
  return out;
}

std::optional<TriangleViolation> first_triangle_violation(
    const MetricSpace& space, double tol) {
  const auto n = static_cast<std::ptrdiff_t>(space.size());
  std::vector<std::optional<TriangleViolation>> rows(space.size());
  if (space.size() <= kMaxDenseTriangle) {
    const std::vector<double> d = dense_copy(space);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t x = 0; x < n; ++x) {
      rows[x] = triangle_row(d.data(), space.size(), static_cast<PointId>(x), tol);
    }
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t x = 0; x < n; ++x) {
      rows[x] = triangle_row(space, static_cast<PointId>(x), tol);
    }
  }
  for (auto& r : rows) {
    if (r) return r;
  }
  return std::nullopt;
}

SubsetOptimum best_subset(const MetricSpace& space, std::size_t k) {
  const std::uint64_t total = binomial(space.size(), k);
  const auto chunks = static_cast<std::ptrdiff_t>(
      std::min<std::uint64_t>(total, 64 * omp_get_max_threads()));
  std::vector<SubsetOptimum> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = total * c / chunks;
    const std::uint64_t end = total * (c + 1) / chunks;
    partial[c] = scan_subsets(space, k, begin, end - begin);
  }
  SubsetOptimum best;
  for (auto& p : partial) {
    if (p.members.empty()) continue;
    if (best.members.empty() || p.cost < best.cost) best = std::move(p);
  }
  return best;
}

namespace serial {

std::vector<Assignment> nearest_two(const MetricSpace& space,
                                    std::span<const std::uint8_t> open) {
  std::vector<Assignment> out(space.size());
  for (PointId x = 0; x < space.size(); ++x) {
    out[x] = nearest_two_of(space, x, open);
  }
  return out;
}

std::vector<double> augmented_costs(const MetricSpace& space,
                                    std::span<const double> current,
                                    std::span<const PointId> candidates) {
  std::vector<double> out;
  out.reserve(candidates.size());
  for (PointId f : candidates) {
    out.push_back(augmented_cost_of(space, current, f));
  }
  return out;
}

std::vector<double> all_pairs_shortest_paths(std::size_t n,
                                             std::span<const Edge> edges) {
  const Adjacency adj = build_adjacency(n, edges);
  std::vector<double> out(n * n);
  for (std::size_t s = 0; s < n; ++s) {
    dijkstra_row(adj, static_cast<PointId>(s), out.data() + s * n);
  }
  return out;
}

std::vector<double> floyd_warshall(std::size_t n, std::span<const Edge> edges) {
  std::vector<double> d(n * n, kInf);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0.0;
  for (const Edge& e : edges) {
    d[e.u * n + e.v] = std::min(d[e.u * n + e.v], e.length);
    d[e.v * n + e.u] = std::min(d[e.v * n + e.u], e.length);
  }
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      const double im = d[i * n + m];
      if (im == kInf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        d[i * n + j] = std::min(d[i * n + j], im + d[m * n + j]);
      }
    }
  }
  return d;
}

std::optional<TriangleViolation> first_triangle_violation(
    const MetricSpace& space, double tol) {
  for (PointId x = 0; x < space.size(); ++x) {
    if (auto v = triangle_row(space, x, tol)) return v;
  }
  return std::nullopt;
}

SubsetOptimum best_subset(const MetricSpace& space, std::size_t k) {
  return scan_subsets(space, k, 0, binomial(space.size(), k));
}

}  // namespace serial
}  // namespace revgreedy::kernels
