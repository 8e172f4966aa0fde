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

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "revgreedy/analysis.hpp"
#include "revgreedy/campaigns.hpp"
#include "revgreedy/solvers.hpp"

namespace revgreedy {

// Shortest representation that round-trips the double; "inf"/"-inf"/"nan"
// for non-finite values.
std::string format_number(double v);
double parse_number(std::string_view text);

// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view text);

// Trace CSV: comment line "# direction=... n=... k=...", then the header
// step,removed_or_added,cost_before,cost_after,delta and one row per step in
// execution order.
void write_trace_csv(std::ostream& out, const GreedyTrace& trace);
// Reads a trace written by write_trace_csv. Without the comment line the
// trace is taken as reverse on `n` points ending at n - rows.
GreedyTrace read_trace_csv(std::istream& in,
                           std::optional<std::size_t> n = std::nullopt);
nlohmann::json trace_to_json(const GreedyTrace& trace);

// Verification report:
// check,instance,params,holds,lhs,rhs,slack,witness
void write_check_csv(std::ostream& out, const std::vector<CheckRow>& rows);
nlohmann::json checks_to_json(const std::vector<CheckRow>& rows);

struct ChartSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

// Static SVG line chart with axes, ticks and a legend.
std::string render_line_chart(const std::vector<ChartSeries>& series,
                              std::string_view title, std::string_view x_label,
                              std::string_view y_label);

}  // namespace revgreedy
