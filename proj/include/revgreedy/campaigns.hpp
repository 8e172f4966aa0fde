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

// Seeded verification campaigns over random corpora (or over one fixed
// instance). Trials run concurrently; every trial draws from its own derived
// seed, so results are independent of scheduling.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "revgreedy/analysis.hpp"
#include "revgreedy/instance_gen.hpp"
#include "revgreedy/random.hpp"

namespace revgreedy {

struct CheckRow {
  std::string instance;
  std::string params;
  BoundReport report;
};

struct CorpusOptions {
  std::size_t min_n = 4;
  std::size_t max_n = 14;
};

// Instance `index` of the random corpus for `seed`: n uniform in
// [min_n, max_n], kinds alternating between unit-square points and random
// graphs.
MetricSpace corpus_instance(std::uint64_t seed, std::size_t index,
                            const CorpusOptions& options = {});
std::string corpus_name(std::uint64_t seed, std::size_t index,
                        const CorpusOptions& options = {});

// Random subset of {0..n-1} whose size is uniform in [min_size, max_size]
// (clamped to [1, n]).
FacilitySet random_subset(Rng& rng, std::size_t n, std::size_t min_size = 1,
                          std::size_t max_size = SIZE_MAX);

// When `fixed` is null each trial uses its own corpus instance; otherwise all
// trials draw sets on `fixed`, labelled `fixed_name`.
struct CampaignTarget {
  const MetricSpace* fixed = nullptr;
  std::string fixed_name;
  CorpusOptions corpus;
};

std::vector<CheckRow> fuzz_lemma1(std::size_t trials, std::uint64_t seed,
                                  const CampaignTarget& target = {});
std::vector<CheckRow> fuzz_supermodularity(std::size_t trials,
                                           std::uint64_t seed,
                                           const CampaignTarget& target = {});
std::vector<CheckRow> fuzz_general(std::size_t trials, std::uint64_t seed,
                                   const CampaignTarget& target = {});

// Per-instance checks run for every k in `ks` (all k in [1, n] when empty).
// Step bounds are summarized by the tightest step per (instance, k).
std::vector<CheckRow> campaign_step_bounds(std::size_t instances,
                                           std::uint64_t seed,
                                           const TiePolicy& tie,
                                           const CampaignTarget& target = {},
                                           std::vector<std::size_t> ks = {});
std::vector<CheckRow> campaign_harmonic(std::size_t instances,
                                        std::uint64_t seed,
                                        const TiePolicy& tie,
                                        const CampaignTarget& target = {},
                                        std::vector<std::size_t> ks = {});
std::vector<CheckRow> campaign_metric(std::size_t instances, std::uint64_t seed,
                                      const CampaignTarget& target = {});

}  // namespace revgreedy
