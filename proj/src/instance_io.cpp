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

#include "revgreedy/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "revgreedy/errors.hpp"

namespace revgreedy {
namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw InputError(where + ": missing field \"" + key + "\"");
  }
  return *it;
}

double as_number(const json& v, const std::string& field) {
  if (!v.is_number()) throw InputError(field + ": expected a number");
  return v.get<double>();
}

PointId as_id(const json& v, const std::string& field) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InputError(field + ": expected a nonnegative integer id");
  }
  return static_cast<PointId>(v.get<long long>());
}

std::vector<Point> parse_points(const json& arr) {
  if (!arr.is_array()) throw InputError("points: expected an array");
  std::vector<Point> points(arr.size());
  std::vector<std::uint8_t> seen(arr.size(), 0);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string field = "points[" + std::to_string(i) + "]";
    const json& p = arr[i];
    if (!p.is_object()) throw InputError(field + ": expected an object");
    const PointId id = as_id(require(p, "id", field), field + ".id");
    if (id >= arr.size()) {
      throw InputError(field + ".id: ids must be dense, 0.." +
                       std::to_string(arr.size() - 1));
    }
    if (seen[id]++) throw InputError(field + ".id: duplicate id");
    Point& out = points[id];
    if (auto w = p.find("weight"); w != p.end()) {
      out.weight = as_number(*w, field + ".weight");
    }
    if (auto l = p.find("label"); l != p.end()) {
      if (!l->is_string()) throw InputError(field + ".label: expected a string");
      out.label = l->get<std::string>();
    }
  }
  return points;
}

}  // namespace

MetricSpace parse_instance(const json& doc) {
  if (!doc.is_object()) throw InputError("instance: expected a JSON object");
  const json& metric = require(doc, "metric", "instance");
  if (!metric.is_object()) throw InputError("metric: expected an object");
  const json& type = require(metric, "type", "metric");
  if (!type.is_string()) throw InputError("metric.type: expected a string");
  const std::string kind = type.get<std::string>();
  bool pseudometric = false;
  if (auto p = doc.find("pseudometric"); p != doc.end()) {
    if (!p->is_boolean()) throw InputError("pseudometric: expected a boolean");
    pseudometric = p->get<bool>();
  }

  std::optional<MetricSpace> space;
  if (kind == "tree_lb") {
    const json& h = require(metric, "h", "metric");
    if (!h.is_number_integer()) throw InputError("metric.h: expected an integer");
    space = MetricSpace::FromTree(h.get<int>());
    if (auto pts = doc.find("points"); pts != doc.end()) {
      const std::vector<Point> given = parse_points(*pts);
      if (given.size() != space->size()) {
        throw InputError("points: tree_lb h=" + std::to_string(h.get<int>()) +
                         " has " + std::to_string(space->size()) +
                         " points, file lists " + std::to_string(given.size()));
      }
      for (PointId i = 0; i < given.size(); ++i) {
        if (given[i].weight != space->weight(i)) {
          throw InputError("points[" + std::to_string(i) +
                           "].weight: does not match the tree construction");
        }
      }
    }
  } else {
    std::vector<Point> points = parse_points(require(doc, "points", "instance"));
    const std::size_t n = points.size();
    if (kind == "dense") {
      const json& rows = require(metric, "matrix", "metric");
      if (!rows.is_array() || rows.size() != n) {
        throw InputError("metric.matrix: expected " + std::to_string(n) +
                         " rows");
      }
      std::vector<double> matrix;
      matrix.reserve(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        const std::string field = "metric.matrix[" + std::to_string(i) + "]";
        if (!rows[i].is_array() || rows[i].size() != n) {
          throw InputError(field + ": expected " + std::to_string(n) +
                           " columns (matrix must be square)");
        }
        for (std::size_t j = 0; j < n; ++j) {
          matrix.push_back(
              as_number(rows[i][j], field + "[" + std::to_string(j) + "]"));
        }
      }
      space = MetricSpace::FromMatrix(std::move(points), std::move(matrix),
                                      pseudometric);
    } else if (kind == "graph") {
      const json& arr = require(metric, "edges", "metric");
      if (!arr.is_array()) throw InputError("metric.edges: expected an array");
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string field = "metric.edges[" + std::to_string(i) + "]";
        const json& e = arr[i];
        if (!e.is_array() || e.size() != 3) {
          throw InputError(field + ": expected [u, v, length]");
        }
        edges.push_back({as_id(e[0], field + "[0]"), as_id(e[1], field + "[1]"),
                         as_number(e[2], field + "[2]")});
      }
      space = graph_to_metric(std::move(points), edges, pseudometric);
    } else {
      throw InputError("metric.type: unknown type \"" + kind + "\"");
    }
  }

  if (auto tp = doc.find("tie_priority"); tp != doc.end() && !tp->is_null()) {
    if (!tp->is_array()) throw InputError("tie_priority: expected an array");
    std::vector<PointId> priority;
    for (std::size_t i = 0; i < tp->size(); ++i) {
      priority.push_back(
          as_id((*tp)[i], "tie_priority[" + std::to_string(i) + "]"));
    }
    space->set_tie_priority(std::move(priority));
  }
  if (auto md = doc.find("metadata"); md != doc.end() && md->is_object()) {
    for (const auto& [key, value] : md->items()) {
      space->add_metadata(key, value.is_string() ? value.get<std::string>()
                                                 : value.dump());
    }
  }
  return std::move(*space);
}

MetricSpace load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return parse_instance(doc);
}

json instance_to_json(const MetricSpace& space, bool expand_graph) {
  json doc;
  json points = json::array();
  for (PointId i = 0; i < space.size(); ++i) {
    json p = {{"id", i}, {"weight", space.weight(i)}};
    if (!space.point(i).label.empty()) p["label"] = space.point(i).label;
    points.push_back(std::move(p));
  }
  doc["points"] = std::move(points);

  auto edge_list = [](std::span<const Edge> edges) {
    json arr = json::array();
    for (const Edge& e : edges) arr.push_back({e.u, e.v, e.length});
    return arr;
  };
  if (space.tree() && !expand_graph) {
    doc["metric"] = {{"type", "tree_lb"}, {"h", space.tree()->height()}};
  } else if (space.tree()) {
    doc["metric"] = {{"type", "graph"}, {"edges", edge_list(space.tree()->edges())}};
  } else if (space.oracle() == MetricSpace::Oracle::kGraph) {
    doc["metric"] = {{"type", "graph"}, {"edges", edge_list(space.edges())}};
  } else {
    json rows = json::array();
    for (PointId a = 0; a < space.size(); ++a) {
      json row = json::array();
      for (PointId b = 0; b < space.size(); ++b) row.push_back(space.at(a, b));
      rows.push_back(std::move(row));
    }
    doc["metric"] = {{"type", "dense"}, {"matrix", std::move(rows)}};
  }
  doc["pseudometric"] = space.pseudometric();
  if (!space.tie_priority().empty()) {
    doc["tie_priority"] = std::vector<PointId>(space.tie_priority().begin(),
                                               space.tie_priority().end());
  }
  if (!space.metadata().empty()) {
    json md = json::object();
    for (const auto& [k, v] : space.metadata()) md[k] = v;
    doc["metadata"] = std::move(md);
  }
  return doc;
}

std::string serialize_instance(const MetricSpace& space, bool expand_graph) {
  return instance_to_json(space, expand_graph).dump(1) + "\n";
}

}  // namespace revgreedy
