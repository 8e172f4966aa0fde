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

// Parallel kernels against their serial twins, plus the two reverse greedy
// solvers.

#include <benchmark/benchmark.h>

#include <numeric>

#include "revgreedy/instance_gen.hpp"
#include "revgreedy/kernels.hpp"
#include "revgreedy/solvers.hpp"

namespace rg = revgreedy;
namespace kernels = revgreedy::kernels;

namespace {

rg::MetricSpace graph_space(std::int64_t n) {
  return rg::gen_random(static_cast<std::size_t>(n), rg::RandomKind::kRandomGraph, 1);
}

template <auto Fn>
void BM_NearestTwo(benchmark::State& state) {
  const rg::MetricSpace s = graph_space(state.range(0));
  std::vector<std::uint8_t> open(s.size(), 0);
  for (std::size_t i = 0; i < open.size(); i += 3) open[i] = 1;
  for (auto _ : state) benchmark::DoNotOptimize(Fn(s, open));
}

template <auto Fn>
void BM_AugmentedCosts(benchmark::State& state) {
  const rg::MetricSpace s = graph_space(state.range(0));
  std::vector<double> current(s.size());
  for (rg::PointId x = 0; x < s.size(); ++x) current[x] = s.at(x, 0);
  std::vector<rg::PointId> candidates(s.size());
  std::iota(candidates.begin(), candidates.end(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(s, current, candidates));
}

template <auto Fn>
void BM_ShortestPaths(benchmark::State& state) {
  const rg::MetricSpace s = graph_space(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(s.size(), s.edges()));
}

template <auto Fn>
void BM_Triangle(benchmark::State& state) {
  const rg::MetricSpace s = graph_space(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(s, 0.0));
}

template <auto Fn>
void BM_BestSubset(benchmark::State& state) {
  const rg::MetricSpace s = graph_space(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(s, 3));
}

template <auto Fn>
void BM_ReverseGreedy(benchmark::State& state) {
  const rg::MetricSpace s = graph_space(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Fn(s, 1, rg::TiePolicy::Lexicographic()));
  }
}

}  // namespace

BENCHMARK(BM_NearestTwo<kernels::nearest_two>)->Arg(500)->Arg(2000);
BENCHMARK(BM_NearestTwo<kernels::serial::nearest_two>)->Arg(500)->Arg(2000);
BENCHMARK(BM_AugmentedCosts<kernels::augmented_costs>)->Arg(500)->Arg(1500);
BENCHMARK(BM_AugmentedCosts<kernels::serial::augmented_costs>)->Arg(500)->Arg(1500);
BENCHMARK(BM_ShortestPaths<kernels::all_pairs_shortest_paths>)->Arg(200)->Arg(800);
BENCHMARK(BM_ShortestPaths<kernels::serial::all_pairs_shortest_paths>)->Arg(200)->Arg(800);
BENCHMARK(BM_ShortestPaths<kernels::serial::floyd_warshall>)->Arg(200)->Arg(800);
BENCHMARK(BM_Triangle<kernels::first_triangle_violation>)->Arg(100)->Arg(300);
BENCHMARK(BM_Triangle<kernels::serial::first_triangle_violation>)->Arg(100)->Arg(300);
BENCHMARK(BM_BestSubset<kernels::best_subset>)->Arg(40)->Arg(80);
BENCHMARK(BM_BestSubset<kernels::serial::best_subset>)->Arg(40)->Arg(80);
BENCHMARK(BM_ReverseGreedy<rg::rgreedy>)->Arg(50)->Arg(400);
BENCHMARK(BM_ReverseGreedy<rg::rgreedy_reference>)->Arg(50);

BENCHMARK_MAIN();
