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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "revgreedy/metric_space.hpp"

namespace revgreedy {

// Instance files are UTF-8 JSON:
//   { "points": [{"id": 0, "weight": 1.0, "label": "mu"}, ...],
//     "metric": {"type": "dense", "matrix": [[...], ...]}
//             | {"type": "graph", "edges": [[u, v, length], ...]}
//             | {"type": "tree_lb", "h": 3},
//     "pseudometric": bool,
//     "tie_priority": [ids, highest removal priority first],
//     "metadata": {"key": "value", ...} }
//
// For tree_lb the points list is optional; when present it must agree with
// the generated tree.

MetricSpace parse_instance(const nlohmann::json& doc);
MetricSpace load_instance(const std::filesystem::path& path);

// `expand_graph` writes tree instances as an explicit edge list.
nlohmann::json instance_to_json(const MetricSpace& space,
                                bool expand_graph = false);
std::string serialize_instance(const MetricSpace& space,
                               bool expand_graph = false);

}  // namespace revgreedy
