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

#include "revgreedy/campaigns.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <numeric>

#include "revgreedy/errors.hpp"
#include "revgreedy/random.hpp"

namespace revgreedy {
namespace {

// Runs body(i) for i in [0, count) concurrently and concatenates the
// per-index rows in index order. The first exception (by index) is rethrown.
std::vector<CheckRow> run_trials(
    std::size_t count,
    const std::function<std::vector<CheckRow>(std::size_t)>& body) {
  std::vector<std::vector<CheckRow>> rows(count);
  std::vector<std::exception_ptr> errors(count);
  const auto m = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    try {
      rows[i] = body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<CheckRow> out;
  for (auto& r : rows) {
    std::move(r.begin(), r.end(), std::back_inserter(out));
  }
  return out;
}

struct TrialSpace {
  std::optional<MetricSpace> owned;
  const MetricSpace* space = nullptr;
  std::string name;
};

TrialSpace trial_space(const CampaignTarget& target, std::uint64_t seed,
                       std::size_t index) {
  TrialSpace t;
  if (target.fixed) {
    t.space = target.fixed;
    t.name = target.fixed_name;
  } else {
    t.owned = corpus_instance(seed, index, target.corpus);
    t.space = &*t.owned;
    t.name = corpus_name(seed, index, target.corpus);
  }
  return t;
}

std::string set_param(const char* name, const FacilitySet& s) {
  std::string out = std::string(name) + "={";
  bool first = true;
  for (PointId id : s) {
    out += (first ? "" : " ") + std::to_string(id);
    first = false;
  }
  return out + "}";
}

std::vector<std::size_t> k_values(const MetricSpace& space,
                                  const std::vector<std::size_t>& ks) {
  std::vector<std::size_t> out;
  if (ks.empty()) {
    for (std::size_t k = 1; k <= space.size(); ++k) out.push_back(k);
  } else {
    for (std::size_t k : ks) {
      if (k >= 1 && k <= space.size()) out.push_back(k);
    }
  }
  return out;
}

}  // namespace

MetricSpace corpus_instance(std::uint64_t seed, std::size_t index,
                            const CorpusOptions& options) {
  const std::uint64_t s = derive_seed(seed, index);
  Rng rng(s);
  const std::size_t n =
      options.min_n + uniform_below(rng, options.max_n - options.min_n + 1);
  const RandomKind kind =
      index % 2 == 0 ? RandomKind::kUnitSquarePoints : RandomKind::kRandomGraph;
  return gen_random(n, kind, s);
}

std::string corpus_name(std::uint64_t seed, std::size_t index,
                        const CorpusOptions& options) {
  (void)options;
  return "corpus:" + std::to_string(seed) + ":" + std::to_string(index);
}

FacilitySet random_subset(Rng& rng, std::size_t n, std::size_t min_size,
                          std::size_t max_size) {
  min_size = std::max<std::size_t>(min_size, 1);
  max_size = std::min(max_size, n);
  if (max_size < min_size) {
    throw InputError("random_subset: need at least " + std::to_string(min_size) +
                     " points, have " + std::to_string(n));
  }
  const std::size_t size = min_size + uniform_below(rng, max_size - min_size + 1);
  std::vector<PointId> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  for (std::size_t i = 0; i < size; ++i) {
    std::swap(ids[i], ids[i + uniform_below(rng, n - i)]);
  }
  ids.resize(size);
  return FacilitySet(std::move(ids));
}

std::vector<CheckRow> fuzz_lemma1(std::size_t trials, std::uint64_t seed,
                                  const CampaignTarget& target) {
  return run_trials(trials, [&](std::size_t i) {
    TrialSpace t = trial_space(target, seed, i);
    Rng rng(derive_seed(seed ^ 0x1e33a1ULL, i));
    const FacilitySet r = random_subset(rng, t.space->size());
    const FacilitySet m = random_subset(rng, t.space->size());
    return std::vector<CheckRow>{{t.name, set_param("R", r) + " " + set_param("M", m),
                                  check_lemma1(*t.space, r, m)}};
  });
}

std::vector<CheckRow> fuzz_supermodularity(std::size_t trials,
                                           std::uint64_t seed,
                                           const CampaignTarget& target) {
  return run_trials(trials, [&](std::size_t i) {
    TrialSpace t = trial_space(target, seed, i);
    Rng rng(derive_seed(seed ^ 0x5e9e7ULL, i));
    const FacilitySet r = random_subset(rng, t.space->size(), 2);
    // Proper nonempty subset of R.
    const FacilitySet pick = random_subset(rng, r.size(), 1, r.size() - 1);
    std::vector<PointId> q;
    for (PointId idx : pick) q.push_back(r.members()[idx]);
    const FacilitySet qs(std::move(q));
    return std::vector<CheckRow>{{t.name, set_param("Q", qs) + " " + set_param("R", r),
                                  check_supermodularity(*t.space, qs, r)}};
  });
}

std::vector<CheckRow> fuzz_general(std::size_t trials, std::uint64_t seed,
                                   const CampaignTarget& target) {
  return run_trials(trials, [&](std::size_t i) {
    TrialSpace t = trial_space(target, seed, i);
    Rng rng(derive_seed(seed ^ 0x6e2e7a1ULL, i));
    const FacilitySet r = random_subset(rng, t.space->size(), 2);
    return std::vector<CheckRow>{
        {t.name, set_param("R", r), check_general_inequality(*t.space, r)}};
  });
}

std::vector<CheckRow> campaign_step_bounds(std::size_t instances,
                                           std::uint64_t seed,
                                           const TiePolicy& tie,
                                           const CampaignTarget& target,
                                           std::vector<std::size_t> ks) {
  return run_trials(instances, [&](std::size_t i) {
    TrialSpace t = trial_space(target, seed, i);
    const GreedyTrace chain = rgreedy(*t.space, 1, tie);
    std::vector<CheckRow> rows;
    for (std::size_t k : k_values(*t.space, ks)) {
      const GreedyTrace trace = truncate_chain(chain, k);
      const auto reports = check_step_bounds(*t.space, trace, k);
      if (reports.empty()) continue;
      // Any violation wins; otherwise the least slack.
      auto worst = std::min_element(
          reports.begin(), reports.end(), [](const auto& a, const auto& b) {
            if (a.holds != b.holds) return !a.holds;
            return a.slack() < b.slack();
          });
      BoundReport summary = *worst;
      summary.witness += " steps=" + std::to_string(reports.size());
      rows.push_back({t.name, "k=" + std::to_string(k) + " tie=" + tie.to_string(),
                      summary});
    }
    return rows;
  });
}

std::vector<CheckRow> campaign_harmonic(std::size_t instances,
                                        std::uint64_t seed,
                                        const TiePolicy& tie,
                                        const CampaignTarget& target,
                                        std::vector<std::size_t> ks) {
  return run_trials(instances, [&](std::size_t i) {
    TrialSpace t = trial_space(target, seed, i);
    const GreedyTrace chain = rgreedy(*t.space, 1, tie);
    std::vector<CheckRow> rows;
    for (std::size_t k : k_values(*t.space, ks)) {
      const double greedy = truncate_chain(chain, k).final_cost();
      const double optimum = exact_kmedian(*t.space, k).cost;
      rows.push_back({t.name, "k=" + std::to_string(k) + " tie=" + tie.to_string(),
                      harmonic_report(*t.space, k, greedy, optimum)});
    }
    return rows;
  });
}

std::vector<CheckRow> campaign_metric(std::size_t instances, std::uint64_t seed,
                                      const CampaignTarget& target) {
  return run_trials(instances, [&](std::size_t i) {
    TrialSpace t = trial_space(target, seed, i);
    return std::vector<CheckRow>{{t.name, "", verify_metric(*t.space)}};
  });
}

}  // namespace revgreedy
