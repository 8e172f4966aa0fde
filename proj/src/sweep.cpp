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

#include "revgreedy/sweep.hpp"

#include <map>
#include <ostream>
#include <sstream>

#include "revgreedy/analysis.hpp"
#include "revgreedy/errors.hpp"
#include "revgreedy/instance_gen.hpp"
#include "revgreedy/random.hpp"
#include "revgreedy/report.hpp"

namespace revgreedy {
namespace {

struct SweepPoint {
  std::string params;
  double param = 0.0;
  int h = 0;
  int j = 0;
  double w = 0.0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

std::vector<SweepPoint> expand(const SweepSpec& spec) {
  std::vector<SweepPoint> out;
  switch (spec.family) {
    case Family::kTree:
      for (int h : spec.h_values) {
        out.push_back({"h=" + std::to_string(h), static_cast<double>(h), h});
      }
      break;
    case Family::kStar:
      for (int j : spec.j_values) {
        for (double w : spec.w_values) {
          SweepPoint p;
          p.params = "j=" + std::to_string(j) + " w=" + format_number(w);
          p.param = w;
          p.j = j;
          p.w = w;
          out.push_back(p);
        }
      }
      break;
    case Family::kRandom:
      for (std::size_t n : spec.n_values) {
        for (std::size_t s = 0; s < spec.seeds; ++s) {
          SweepPoint p;
          p.n = n;
          p.seed = derive_seed(spec.seed, n * 1'000'003ULL + s);
          p.params = "n=" + std::to_string(n) + " seed=" + std::to_string(p.seed);
          p.param = static_cast<double>(n);
          out.push_back(p);
        }
      }
      break;
  }
  return out;
}

MetricSpace build(const SweepSpec& spec, const SweepPoint& p, std::size_t index) {
  switch (spec.family) {
    case Family::kTree:
      return gen_tree_lb({p.h, spec.allow_large});
    case Family::kStar:
      return gen_star({p.j, p.w});
    case Family::kRandom:
      return gen_random(p.n,
                        index % 2 == 0 ? RandomKind::kUnitSquarePoints
                                       : RandomKind::kRandomGraph,
                        p.seed);
  }
  throw InputError("unknown family");
}

GreedyTrace solve(const SweepSpec& spec, const MetricSpace& space,
                  std::size_t k, const TiePolicy& tie) {
  switch (spec.algorithm) {
    case Algorithm::kRGreedy:
      return rgreedy(space, k, tie);
    case Algorithm::kRGreedyReference:
      return rgreedy_reference(space, k, tie);
    case Algorithm::kForward:
      return forward_greedy(space, k, tie);
  }
  throw InputError("unknown algorithm");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::kTree: return "tree_lb";
    case Family::kStar: return "star";
    case Family::kRandom: return "random";
  }
  return "";
}

}  // namespace

Family parse_family(std::string_view name) {
  if (name == "tree" || name == "tree_lb") return Family::kTree;
  if (name == "star") return Family::kStar;
  if (name == "random") return Family::kRandom;
  throw InputError("unknown family \"" + std::string(name) +
                   "\" (expected tree_lb, star or random)");
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "rgreedy") return Algorithm::kRGreedy;
  if (name == "rgreedy-ref") return Algorithm::kRGreedyReference;
  if (name == "forward") return Algorithm::kForward;
  throw InputError("unknown algorithm \"" + std::string(name) +
                   "\" (expected rgreedy, rgreedy-ref or forward)");
}

std::string_view algorithm_name(Algorithm alg) {
  switch (alg) {
    case Algorithm::kRGreedy: return "rgreedy";
    case Algorithm::kRGreedyReference: return "rgreedy-ref";
    case Algorithm::kForward: return "forward";
  }
  return "";
}

void validate(const SweepSpec& spec) {
  if (spec.k_values.empty()) throw InputError("sweep: empty k range");
  switch (spec.family) {
    case Family::kTree:
      if (spec.h_values.empty()) throw InputError("sweep: empty h range");
      for (int h : spec.h_values) {
        if (h < 1 || h > 4) {
          throw InputError("sweep: tree h must be within [1, 4], got " +
                           std::to_string(h));
        }
      }
      break;
    case Family::kStar:
      if (spec.j_values.empty() || spec.w_values.empty()) {
        throw InputError("sweep: empty j or w range");
      }
      break;
    case Family::kRandom:
      if (spec.n_values.empty() || spec.seeds == 0) {
        throw InputError("sweep: empty n range or zero seeds");
      }
      break;
  }
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  validate(spec);
  const std::vector<SweepPoint> points = expand(spec);
  std::vector<std::vector<SweepRow>> rows(points.size());
  const auto m = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    const SweepPoint& p = points[i];
    SweepRow base;
    base.family = family_name(spec.family);
    base.params = p.params;
    base.param = p.param;
    base.algorithm = std::string(algorithm_name(spec.algorithm));
    try {
      const MetricSpace space = build(spec, p, static_cast<std::size_t>(i));
      base.n = space.size();
      base.total_weight = space.total_weight();
      const std::string tie_text =
          spec.tie.empty() ? (spec.family == Family::kTree ? "priority" : "lex")
                           : spec.tie;
      const TiePolicy tie = TiePolicy::Parse(tie_text, space);
      std::optional<double> tight;
      if (spec.family == Family::kStar) {
        std::vector<PointId> ys;
        for (int l = 1; l <= p.j; ++l) ys.push_back(static_cast<PointId>(p.j + l));
        if (ys.size() >= 2) {
          tight = tightness(check_general_inequality(space, FacilitySet(ys)));
        }
      }
      for (std::size_t k : spec.k_values) {
        SweepRow row = base;
        row.k = k;
        row.tightness = tight;
        if (spec.family == Family::kTree) row.lb_reference = (p.h - 1) / 8.0;
        try {
          row.alg_cost = solve(spec, space, k, tie).final_cost();
          row.exact_cost = exact_kmedian(space, k, spec.budget).cost;
          row.ratio = row.exact_cost > 0 ? row.alg_cost / row.exact_cost : 1.0;
          row.harmonic_bound = 2.0 * harmonic_number(space.size() - k);
        } catch (const std::exception& e) {
          row.error = e.what();
        }
        rows[i].push_back(std::move(row));
      }
    } catch (const std::exception& e) {
      base.error = e.what();
      rows[i].push_back(std::move(base));
    }
  }
  std::vector<SweepRow> out;
  for (auto& r : rows) std::move(r.begin(), r.end(), std::back_inserter(out));
  return out;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "family,params,n,total_weight,k,algorithm,alg_cost,exact_cost,ratio,"
         "harmonic_bound,lb_reference,tightness,error\n";
  auto opt = [](const std::optional<double>& v) {
    return v ? format_number(*v) : std::string();
  };
  for (const SweepRow& r : rows) {
    out << r.family << ',' << csv_field(r.params) << ',' << r.n << ','
        << format_number(r.total_weight) << ',' << r.k << ',' << r.algorithm
        << ',' << format_number(r.alg_cost) << ','
        << format_number(r.exact_cost) << ',' << format_number(r.ratio) << ','
        << format_number(r.harmonic_bound) << ',' << opt(r.lb_reference) << ','
        << opt(r.tightness) << ',' << csv_field(r.error) << '\n';
  }
}

std::string sweep_svg(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  // One ratio series per k, averaged over rows sharing a parameter value.
  std::map<std::size_t, std::map<double, std::pair<double, int>>> by_k;
  std::map<double, double> reference;
  std::map<double, double> tight;
  for (const SweepRow& r : rows) {
    if (!r.error.empty()) continue;
    auto& cell = by_k[r.k][r.param];
    cell.first += r.ratio;
    cell.second += 1;
    if (r.lb_reference) reference[r.param] = *r.lb_reference;
    if (r.tightness) tight[r.param] = *r.tightness;
  }
  std::vector<ChartSeries> series;
  for (const auto& [k, cells] : by_k) {
    ChartSeries s{"ratio k=" + std::to_string(k), {}, {}};
    for (const auto& [x, acc] : cells) {
      s.x.push_back(x);
      s.y.push_back(acc.first / acc.second);
    }
    series.push_back(std::move(s));
  }
  auto add = [&](const char* name, const std::map<double, double>& values) {
    if (values.empty()) return;
    ChartSeries s{name, {}, {}};
    for (const auto& [x, y] : values) {
      s.x.push_back(x);
      s.y.push_back(y);
    }
    series.push_back(std::move(s));
  };
  add("(h-1)/8", reference);
  add("tightness", tight);
  const char* x_label = spec.family == Family::kTree   ? "h"
                        : spec.family == Family::kStar ? "w"
                                                       : "n";
  return render_line_chart(series, "approximation ratio vs " + std::string(x_label),
                           x_label, "ratio");
}

}  // namespace revgreedy
