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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "revgreedy/solvers.hpp"

namespace revgreedy {

enum class Family { kTree, kStar, kRandom };
enum class Algorithm { kRGreedy, kRGreedyReference, kForward };

Family parse_family(std::string_view name);
Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm alg);

struct SweepSpec {
  Family family = Family::kTree;
  std::vector<int> h_values;          // tree
  std::vector<int> j_values;          // star
  std::vector<double> w_values;       // star
  std::vector<std::size_t> n_values;  // random
  std::size_t seeds = 1;              // random instances per n
  std::uint64_t seed = 1;
  std::vector<std::size_t> k_values{1};
  // Empty: "priority" for tree instances, "lex" otherwise.
  std::string tie;
  Algorithm algorithm = Algorithm::kRGreedy;
  std::uint64_t budget = kDefaultSubsetBudget;
  bool allow_large = false;
};

// Throws InputError on empty ranges or tree heights outside [1, 4].
void validate(const SweepSpec& spec);

struct SweepRow {
  std::string family;
  std::string params;
  double param = 0.0;  // x coordinate for charts
  std::size_t n = 0;
  double total_weight = 0.0;
  std::size_t k = 0;
  std::string algorithm;
  double alg_cost = 0.0;
  double exact_cost = 0.0;
  double ratio = 0.0;
  double harmonic_bound = 0.0;
  std::optional<double> lb_reference;  // (h - 1) / 8 for tree rows
  std::optional<double> tightness;     // general inequality on R = {y_i}
  std::string error;
};

// One row per (instance, k); rows are evaluated concurrently and returned in
// deterministic order. Failures are recorded in SweepRow::error.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::string sweep_svg(const SweepSpec& spec, const std::vector<SweepRow>& rows);

}  // namespace revgreedy
