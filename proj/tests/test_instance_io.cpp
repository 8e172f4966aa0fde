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

#include "fixtures.hpp"
#include "revgreedy/errors.hpp"
#include "revgreedy/instance_gen.hpp"
#include "revgreedy/instance_io.hpp"

namespace revgreedy {
namespace {

using nlohmann::json;

std::string load_error(const json& doc) {
  try {
    parse_instance(doc);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

json two_points(json matrix) {
  return {{"points", {{{"id", 0}, {"weight", 1}}, {{"id", 1}, {"weight", 1}}}},
          {"metric", {{"type", "dense"}, {"matrix", std::move(matrix)}}}};
}

TEST(InstanceIo, DenseDiagnosticsNameTheField) {
  EXPECT_NE(load_error(two_points({{0, 1}})).find("metric.matrix"), std::string::npos);
  EXPECT_NE(load_error(two_points({{0, 1}, {2, 0}})).find("metric.matrix[0][1]"),
            std::string::npos);
  EXPECT_NE(load_error(two_points({{1, 1}, {1, 0}})).find("metric.matrix[0][0]"),
            std::string::npos);
  EXPECT_NE(load_error(two_points({{0, -1}, {-1, 0}})).find("metric.matrix[0][1]"),
            std::string::npos);
  EXPECT_NE(load_error(two_points({{0, 1}, {1}})).find("metric.matrix[1]"),
            std::string::npos);
}

TEST(InstanceIo, PointDiagnostics) {
  json doc = two_points({{0, 1}, {1, 0}});
  doc["points"][1]["id"] = 5;
  EXPECT_NE(load_error(doc).find("points[1].id"), std::string::npos);
  doc = two_points({{0, 1}, {1, 0}});
  doc["points"][0]["weight"] = -2;
  EXPECT_NE(load_error(doc).find("points[0].weight"), std::string::npos);
  doc = two_points({{0, 1}, {1, 0}});
  doc["metric"]["type"] = "sparse";
  EXPECT_NE(load_error(doc).find("metric.type"), std::string::npos);
  doc = two_points({{0, 1}, {1, 0}});
  doc["tie_priority"] = {4};
  EXPECT_NE(load_error(doc), "");
}

TEST(InstanceIo, TriangleViolationLoads) {
  const json doc = instance_to_json(testing::bad_triangle());
  const MetricSpace s = parse_instance(doc);
  EXPECT_EQ(s.distance(0, 2), 5.0);
}

TEST(InstanceIo, DenseRoundTrip) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const MetricSpace s = gen_random(9, RandomKind::kUnitSquarePoints, seed);
    const MetricSpace back = parse_instance(json::parse(serialize_instance(s)));
    ASSERT_EQ(back.size(), s.size());
    for (PointId a = 0; a < s.size(); ++a) {
      for (PointId b = 0; b < s.size(); ++b) EXPECT_EQ(back.at(a, b), s.at(a, b));
    }
    EXPECT_EQ(serialize_instance(back), serialize_instance(s));
  }
}

TEST(InstanceIo, GraphRoundTrip) {
  const MetricSpace s = gen_star({4, 3});
  const json doc = instance_to_json(s);
  EXPECT_EQ(doc["metric"]["type"], "graph");
  const MetricSpace back = parse_instance(doc);
  for (PointId a = 0; a < s.size(); ++a) {
    for (PointId b = 0; b < s.size(); ++b) EXPECT_EQ(back.at(a, b), s.at(a, b));
  }
  EXPECT_EQ(back.point(0).label, s.point(0).label);
}

TEST(InstanceIo, TreeImplicitAndExpandedAgree) {
  for (int h = 1; h <= 3; ++h) {
    const MetricSpace s = gen_tree_lb({h});
    const json implicit = instance_to_json(s, false);
    const json expanded = instance_to_json(s, true);
    EXPECT_EQ(implicit["metric"]["type"], "tree_lb");
    EXPECT_EQ(expanded["metric"]["type"], "graph");
    const MetricSpace a = parse_instance(implicit);
    const MetricSpace b = parse_instance(expanded);
    ASSERT_EQ(a.size(), b.size());
    EXPECT_EQ(a.oracle(), MetricSpace::Oracle::kTree);
    EXPECT_EQ(b.oracle(), MetricSpace::Oracle::kGraph);
    for (PointId x = 0; x < a.size(); ++x) {
      EXPECT_EQ(a.weight(x), b.weight(x));
      for (PointId y = 0; y < a.size(); ++y) ASSERT_EQ(a.at(x, y), b.at(x, y));
    }
    EXPECT_EQ(std::vector<PointId>(a.tie_priority().begin(), a.tie_priority().end()),
              std::vector<PointId>(b.tie_priority().begin(), b.tie_priority().end()));
  }
}

TEST(InstanceIo, TreeWithoutPointsList) {
  const MetricSpace s = parse_instance({{"metric", {{"type", "tree_lb"}, {"h", 2}}}});
  EXPECT_EQ(s.size(), 29u);
  EXPECT_EQ(s.total_weight(), 36.0);
}

TEST(InstanceIo, MissingFileIsInputError) {
  EXPECT_THROW(load_instance("/nonexistent/instance.json"), InputError);
}

}  // namespace
}  // namespace revgreedy
