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

#include <gtest/gtest.h>

#include <sstream>

#include "revgreedy/errors.hpp"
#include "revgreedy/instance_gen.hpp"
#include "revgreedy/report.hpp"
#include "revgreedy/sweep.hpp"

namespace revgreedy {
namespace {

TEST(Format, ShortestRoundTrip) {
  EXPECT_EQ(format_number(29.0), "29");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(-2.5), "-2.5");
  const double third = 1.0 / 3.0;
  EXPECT_EQ(parse_number(format_number(third)), third);
  EXPECT_TRUE(std::isinf(parse_number(format_number(INFINITY))));
}

TEST(Format, CsvQuoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(TraceCsv, HeaderAndRows) {
  const MetricSpace s = gen_tree_lb({2});
  std::ostringstream out;
  write_trace_csv(out, rgreedy(s, 1, TiePolicy::Parse("priority", s)));
  std::istringstream lines(out.str());
  std::string first, header, row;
  std::getline(lines, first);
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(first.rfind("#", 0), 0u);
  EXPECT_EQ(header, "step,removed_or_added,cost_before,cost_after,delta");
  EXPECT_EQ(row, "29,0,0,1,1");
}

TEST(TraceCsv, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const MetricSpace s = gen_random(20, RandomKind::kUnitSquarePoints, seed);
    for (const GreedyTrace& t : {rgreedy(s, 4, TiePolicy::Lexicographic()),
                                 forward_greedy(s, 4, TiePolicy::Lexicographic())}) {
      std::ostringstream out;
      write_trace_csv(out, t);
      std::istringstream in(out.str());
      EXPECT_EQ(read_trace_csv(in, s.size()), t);
    }
  }
}

TEST(TraceCsv, MalformedInput) {
  std::istringstream bad("step,removed_or_added,cost_before,cost_after,delta\n1,2\n");
  EXPECT_THROW(read_trace_csv(bad, 3), InputError);
}

TEST(TraceJson, Fields) {
  const auto j = trace_to_json(rgreedy(gen_star({3, 5}), 1, TiePolicy::Lexicographic()));
  EXPECT_EQ(j["direction"], "reverse");
  EXPECT_EQ(j["steps"].size(), 6u);
}

TEST(CheckCsv, Header) {
  std::ostringstream out;
  BoundReport r;
  r.check = "metric";
  r.holds = false;
  r.witness = "triangle(0,1,2)";
  r.lhs = 5;
  r.rhs = 2;
  write_check_csv(out, {{"bad.json", "", r}});
  EXPECT_EQ(out.str(),
            "check,instance,params,holds,lhs,rhs,slack,witness\n"
            "metric,bad.json,,false,5,2,-3,\"triangle(0,1,2)\"\n");
}

TEST(Chart, RendersSvg) {
  const std::string svg =
      render_line_chart({{"ratio", {1, 2, 3}, {1.0, 1.0, 1.168}}}, "t", "x", "y");
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("polyline"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Sweep, TreeRatios) {
  SweepSpec spec;
  spec.family = Family::kTree;
  spec.h_values = {1, 2, 3};
  const auto rows = run_sweep(spec);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].ratio, 1.0);
  EXPECT_EQ(rows[1].ratio, 1.0);
  EXPECT_NEAR(rows[2].ratio, 1.168, 0.001);
  for (const auto& r : rows) {
    ASSERT_TRUE(r.lb_reference.has_value());
    EXPECT_GE(r.ratio, *r.lb_reference);
    EXPECT_TRUE(r.error.empty());
  }
}

TEST(Sweep, StarTightnessRises) {
  SweepSpec spec;
  spec.family = Family::kStar;
  spec.j_values = {10};
  spec.w_values = {10, 100, 1000};
  const auto rows = run_sweep(spec);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_LT(*rows[0].tightness, *rows[1].tightness);
  EXPECT_LT(*rows[1].tightness, *rows[2].tightness);
  EXPECT_NEAR(*rows[2].tightness, 2.22, 0.01);
}

TEST(Sweep, ValidationAndDeterminism) {
  SweepSpec spec;
  spec.family = Family::kRandom;
  EXPECT_THROW(validate(spec), InputError);
  spec.family = Family::kTree;
  spec.h_values = {5};
  EXPECT_THROW(validate(spec), InputError);
  spec.family = Family::kRandom;
  spec.n_values = {5, 8};
  spec.seeds = 3;
  spec.k_values = {1, 2};
  std::ostringstream a, b;
  write_sweep_csv(a, run_sweep(spec));
  write_sweep_csv(b, run_sweep(spec));
  EXPECT_EQ(a.str(), b.str());
}

}  // namespace
}  // namespace revgreedy
