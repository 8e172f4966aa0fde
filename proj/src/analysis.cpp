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

#include "revgreedy/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "revgreedy/errors.hpp"

namespace revgreedy {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double nearest_dist(const MetricSpace& space, PointId x, const FacilitySet& f) {
  double best = kInf;
  for (PointId id : f) best = std::min(best, space.at(x, id));
  return best;
}

BoundReport make_report(const char* check, double lhs, double rhs, double tol,
                        std::string witness) {
  BoundReport r;
  r.check = check;
  r.lhs = lhs;
  r.rhs = rhs;
  r.holds = lhs <= rhs + tol;
  r.witness = std::move(witness);
  return r;
}

std::string set_string(const FacilitySet& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (PointId id : s) {
    os << (first ? "" : " ") << id;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace

double harmonic_number(std::size_t m) {
  double h = 0.0;
  for (std::size_t i = 1; i <= m; ++i) h += 1.0 / static_cast<double>(i);
  return h;
}

BoundReport check_lemma1(const MetricSpace& space, const FacilitySet& r,
                         const FacilitySet& m) {
  if (r.empty() || m.empty()) {
    throw DomainError("check_lemma1: R and M must be nonempty");
  }
  require_members(space, r, "check_lemma1 R");
  require_members(space, m, "check_lemma1 M");
  const FacilitySet q = serving_set(space, r, m);
  const double tol = tolerance_for(space);
  BoundReport worst;
  bool have = false;
  bool holds = true;
  for (PointId x = 0; x < space.size(); ++x) {
    const double lhs = nearest_dist(space, x, q);
    const double rhs = 2.0 * nearest_dist(space, x, m) + nearest_dist(space, x, r);
    holds = holds && lhs <= rhs + tol;
    if (!have || rhs - lhs < worst.slack()) {
      worst = make_report("lemma1", lhs, rhs, tol, "x=" + std::to_string(x));
      have = true;
    }
  }
  worst.holds = holds;
  worst.witness += " Q=" + set_string(q);
  return worst;
}

BoundReport check_supermodularity(const MetricSpace& space,
                                  const FacilitySet& q, const FacilitySet& r) {
  require_members(space, r, "check_supermodularity R");
  if (q.empty()) throw InputError("check_supermodularity: Q must be nonempty");
  if (!q.is_subset_of(r) || q.size() == r.size()) {
    throw InputError("check_supermodularity: Q must be a proper subset of R");
  }
  double lhs = 0.0;
  for (PointId id : r) {
    if (!q.contains(id)) lhs += removal_delta(space, r, id);
  }
  const double rhs = cost(space, q) - cost(space, r);
  return make_report("supermod", lhs, rhs, tolerance_for(space),
                     "|Q|=" + std::to_string(q.size()) +
                         " |R|=" + std::to_string(r.size()));
}

std::vector<BoundReport> check_step_bounds(const MetricSpace& space,
                                           const GreedyTrace& trace,
                                           std::size_t k, std::uint64_t budget) {
  if (trace.direction != Direction::kReverse) {
    throw InputError("check_step_bounds: expected a reverse trace");
  }
  if (trace.n != space.size()) {
    throw InputError("check_step_bounds: trace does not belong to this space");
  }
  if (k < trace.k_target || k > space.size()) {
    throw InputError("check_step_bounds: trace does not reach k=" +
                     std::to_string(k));
  }
  const double optimum = exact_kmedian(space, k, budget).cost;
  const double tol = tolerance_for(space);
  std::vector<BoundReport> out;
  for (const TraceStep& s : trace.steps) {
    if (s.index <= k) continue;
    const auto gap = static_cast<double>(s.index - k);
    BoundReport r = make_report("stepbound", s.delta, 2.0 * optimum / gap, tol,
                                "j=" + std::to_string(s.index) +
                                    " removed=" + std::to_string(s.point));
    // Decide on delta * (j - k) <= 2 cost(M) so integral spaces compare
    // exactly.
    r.holds = s.delta * gap <= 2.0 * optimum + tol * gap;
    out.push_back(std::move(r));
  }
  return out;
}

BoundReport check_harmonic(const MetricSpace& space, std::size_t k,
                           const TiePolicy& tie, std::uint64_t budget) {
  const double optimum = exact_kmedian(space, k, budget).cost;
  const double greedy = rgreedy(space, k, tie).final_cost();
  return harmonic_report(space, k, greedy, optimum);
}

BoundReport harmonic_report(const MetricSpace& space, std::size_t k,
                            double greedy, double optimum) {
  const double tol = tolerance_for(space);
  const double bound = 2.0 * harmonic_number(space.size() - k);
  if (optimum <= tol) {
    return make_report("harmonic", greedy, 0.0, tol,
                       "k=" + std::to_string(k) + " zero optimum, ratio 1");
  }
  std::ostringstream os;
  os << "k=" << k << " greedy=" << greedy << " exact=" << optimum;
  // The ratio is a quotient of exact costs; use a float tolerance even on
  // integral spaces.
  return make_report("harmonic", greedy / optimum, bound, 1e-9, os.str());
}

BoundReport check_general_inequality(const MetricSpace& space,
                                     const FacilitySet& r) {
  if (r.size() < 2) {
    throw DomainError("check_general_inequality: |R| must be at least 2");
  }
  require_members(space, r, "check_general_inequality");
  double lhs = kInf;
  PointId argmin = 0;
  for (PointId id : r) {
    const double d = removal_delta(space, r, id);
    if (d < lhs) {
      lhs = d;
      argmin = id;
    }
  }
  const double median = exact_kmedian(space, 1).cost;
  const double rhs = 2.0 * median / static_cast<double>(r.size() - 1);
  std::ostringstream os;
  os << "r=" << argmin << " tightness=" << (lhs > 0 ? rhs / lhs : kInf);
  const double tol = tolerance_for(space);
  BoundReport report = make_report("general", lhs, rhs, tol, os.str());
  const auto gap = static_cast<double>(r.size() - 1);
  report.holds = lhs * gap <= 2.0 * median + tol * gap;
  return report;
}

double tightness(const BoundReport& general) {
  return general.lhs > 0 ? general.rhs / general.lhs : kInf;
}

BallInstrumentation ball_instrumentation(const MetricSpace& space,
                                         const GreedyTrace& trace,
                                         double radius) {
  const std::size_t n = space.size();
  if (trace.direction != Direction::kReverse || trace.n != n ||
      trace.k_target != 1 || trace.steps.size() + 1 != n) {
    throw InputError(
        "ball_instrumentation: needs a full reverse trace down to one "
        "facility on this space");
  }
  if (!(radius > 0) || !std::isfinite(radius)) {
    throw InputError("ball_instrumentation: radius must be positive");
  }
  BallInstrumentation out;
  out.radius = radius;
  out.center = exact_kmedian(space, 1).set.members().front();
  const PointId mu = out.center;

  auto zone_of = [&](PointId x) -> std::size_t {
    const double c = space.at(x, mu);
    return c == 0 ? 0 : static_cast<std::size_t>(std::ceil(c / radius));
  };

  for (PointId x = 0; x < n; ++x) {
    if (space.at(x, mu) <= radius) out.ball.push_back(x);
  }

  // Replay: which facilities ever serve a ball member.
  std::vector<std::uint8_t> open(n, 1);
  std::vector<std::uint8_t> used(n, 0);
  std::vector<PointId> server(out.ball.size());
  auto nearest_open = [&](PointId x) {
    PointId best = 0;
    double bd = kInf;
    for (PointId f = 0; f < n; ++f) {
      if (open[f] && space.at(x, f) < bd) {
        bd = space.at(x, f);
        best = f;
      }
    }
    return best;
  };
  for (std::size_t i = 0; i < out.ball.size(); ++i) {
    server[i] = nearest_open(out.ball[i]);
    used[server[i]] = 1;
  }
  for (const TraceStep& s : trace.steps) {
    open[s.point] = 0;
    for (std::size_t i = 0; i < out.ball.size(); ++i) {
      if (server[i] == s.point) {
        server[i] = nearest_open(out.ball[i]);
        used[server[i]] = 1;
      }
    }
  }

  std::vector<std::size_t> zone(n, 0);
  for (PointId x = 0; x < n; ++x) {
    if (!used[x]) continue;
    zone[x] = zone_of(x);
    if (zone[x] >= out.zones.size()) out.zones.resize(zone[x] + 1);
    out.zones[zone[x]].push_back(x);
  }
  const std::size_t zones = out.zones.size();
  out.m_static.assign(zones, 0.0);
  double zone_weight = 0.0;
  for (std::size_t i = 0; i < zones; ++i) {
    for (PointId x : out.zones[i]) out.m_static[i] += space.weight(x);
    zone_weight += out.m_static[i];
    out.weighted_sum_all += static_cast<double>(i) * out.m_static[i];
    if (i >= 10) out.weighted_sum_ge10 += static_cast<double>(i) * out.m_static[i];
  }
  out.never_serving_weight = space.total_weight() - zone_weight;

  std::size_t run = 0;
  for (std::size_t i = 1; i + 1 < zones; ++i) {
    run = out.zones[i].empty() ? run + 1 : 0;
    out.max_empty_run = std::max(out.max_empty_run, run);
  }

  // t_j from the open counts of the cumulative zones.
  out.t.assign(zones, std::nullopt);
  std::vector<std::size_t> open_in_prefix(zones, 0);
  for (std::size_t j = 0; j < zones; ++j) {
    open_in_prefix[j] = (j ? open_in_prefix[j - 1] : 0) + out.zones[j].size();
  }
  for (std::size_t time = 0; time < trace.steps.size(); ++time) {
    const PointId r = trace.steps[time].point;
    if (!used[r]) continue;
    for (std::size_t j = zone[r]; j < zones; ++j) {
      if (--open_in_prefix[j] == 0) out.t[j] = time;
    }
  }

  out.m_operational.assign(zones, std::nullopt);
  for (std::size_t j = 7; j < zones; ++j) {
    if (!out.t[j - 6]) continue;
    std::fill(open.begin(), open.end(), 1);
    for (std::size_t time = 0; time < *out.t[j - 6]; ++time) {
      open[trace.steps[time].point] = 0;
    }
    double served = 0.0;
    for (PointId x = 0; x < n; ++x) {
      const PointId f = nearest_open(x);
      if (used[f] && zone[f] == j) served += space.weight(x);
    }
    out.m_operational[j] = served;
    if (j >= 10) {
      out.operational_sum_ge10 =
          out.operational_sum_ge10.value_or(0.0) + static_cast<double>(j) * served;
    }
  }
  return out;
}

}  // namespace revgreedy
