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

#include "revgreedy/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "revgreedy/errors.hpp"

namespace revgreedy {
namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(field));
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  out.push_back(std::move(field));
  return out;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

double parse_number(std::string_view text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("not a number: \"" + std::string(text) + "\"");
  }
  return v;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(text);
  }
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_trace_csv(std::ostream& out, const GreedyTrace& trace) {
  out << "# direction="
      << (trace.direction == Direction::kReverse ? "reverse" : "forward")
      << " n=" << trace.n << " k=" << trace.k_target << "\n";
  out << "step,removed_or_added,cost_before,cost_after,delta\n";
  for (const TraceStep& s : trace.steps) {
    out << s.index << ',' << s.point << ',' << format_number(s.cost_before)
        << ',' << format_number(s.cost_after) << ',' << format_number(s.delta)
        << '\n';
  }
}

GreedyTrace read_trace_csv(std::istream& in, std::optional<std::size_t> n) {
  GreedyTrace trace;
  std::optional<std::size_t> k;
  bool saw_header = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream meta(line.substr(1));
      std::string tok;
      while (meta >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
        if (key == "direction") {
          trace.direction =
              value == "forward" ? Direction::kForward : Direction::kReverse;
        } else if (key == "n") {
          n = std::stoul(value);
        } else if (key == "k") {
          k = std::stoul(value);
        }
      }
      continue;
    }
    if (!saw_header) {
      if (line.rfind("step,", 0) != 0) {
        throw InputError("trace line " + std::to_string(line_no) +
                         ": expected the trace header");
      }
      saw_header = true;
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 5) {
      throw InputError("trace line " + std::to_string(line_no) +
                       ": expected 5 fields");
    }
    try {
      trace.steps.push_back({std::stoul(f[0]),
                             static_cast<PointId>(std::stoul(f[1])),
                             parse_number(f[2]), parse_number(f[3]),
                             parse_number(f[4])});
    } catch (const std::logic_error&) {
      throw InputError("trace line " + std::to_string(line_no) +
                       ": malformed field");
    }
  }
  if (!n) throw InputError("trace: point count unknown (no '# n=' comment)");
  trace.n = *n;
  std::vector<std::uint8_t> member(trace.n,
                                   trace.direction == Direction::kReverse);
  for (const TraceStep& s : trace.steps) {
    if (s.point >= trace.n) {
      throw InputError("trace: point id " + std::to_string(s.point) +
                       " out of range");
    }
    member[s.point] = trace.direction == Direction::kForward;
  }
  std::vector<PointId> final_members;
  for (PointId i = 0; i < trace.n; ++i) {
    if (member[i]) final_members.push_back(i);
  }
  trace.final_set = FacilitySet(std::move(final_members));
  trace.k_target = k.value_or(trace.final_set.size());
  return trace;
}

nlohmann::json trace_to_json(const GreedyTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const TraceStep& s : trace.steps) {
    steps.push_back({{"step", s.index},
                     {"point", s.point},
                     {"cost_before", s.cost_before},
                     {"cost_after", s.cost_after},
                     {"delta", s.delta}});
  }
  return {{"direction",
           trace.direction == Direction::kReverse ? "reverse" : "forward"},
          {"n", trace.n},
          {"k", trace.k_target},
          {"final_set", std::vector<PointId>(trace.final_set.begin(),
                                             trace.final_set.end())},
          {"final_cost", trace.final_cost()},
          {"steps", std::move(steps)}};
}

void write_check_csv(std::ostream& out, const std::vector<CheckRow>& rows) {
  out << "check,instance,params,holds,lhs,rhs,slack,witness\n";
  for (const CheckRow& r : rows) {
    out << csv_field(r.report.check) << ',' << csv_field(r.instance) << ','
        << csv_field(r.params) << ',' << (r.report.holds ? "true" : "false")
        << ',' << format_number(r.report.lhs) << ','
        << format_number(r.report.rhs) << ','
        << format_number(r.report.slack()) << ','
        << csv_field(r.report.witness) << '\n';
  }
}

nlohmann::json checks_to_json(const std::vector<CheckRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CheckRow& r : rows) {
    arr.push_back({{"check", r.report.check},
                   {"instance", r.instance},
                   {"params", r.params},
                   {"holds", r.report.holds},
                   {"lhs", r.report.lhs},
                   {"rhs", r.report.rhs},
                   {"slack", r.report.slack()},
                   {"witness", r.report.witness}});
  }
  return arr;
}

std::string render_line_chart(const std::vector<ChartSeries>& series,
                              std::string_view title, std::string_view x_label,
                              std::string_view y_label) {
  constexpr double kWidth = 640, kHeight = 400;
  constexpr double kLeft = 70, kRight = 160, kTop = 40, kBottom = 50;
  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                            "#ff7f0e", "#9467bd", "#8c564b"};
  double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
  double y_min = 0.0, y_max = -std::numeric_limits<double>::infinity();
  for (const auto& s : series) {
    for (double v : s.x) {
      x_min = std::min(x_min, v);
      x_max = std::max(x_max, v);
    }
    for (double v : s.y) {
      if (std::isfinite(v)) y_max = std::max(y_max, v);
    }
  }
  if (!std::isfinite(x_min)) x_min = 0, x_max = 1;
  if (x_max == x_min) x_max = x_min + 1;
  if (!std::isfinite(y_max) || y_max <= y_min) y_max = y_min + 1;
  y_max *= 1.1;
  const double plot_w = kWidth - kLeft - kRight, plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double y) { return kTop + plot_h - (y - y_min) / (y_max - y_min) * plot_h; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
     << xml_escape(title) << "</text>\n";
  os << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
     << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
     << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double xv = x_min + (x_max - x_min) * i / 5.0;
    const double yv = y_min + (y_max - y_min) * i / 5.0;
    os << "<text x=\"" << px(xv) << "\" y=\"" << kTop + plot_h + 16
       << "\" text-anchor=\"middle\">" << format_number(std::round(xv * 100) / 100)
       << "</text>\n";
    os << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(yv) + 4
       << "\" text-anchor=\"end\">" << format_number(std::round(yv * 100) / 100)
       << "</text>\n";
  }
  os << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
     << "\" text-anchor=\"middle\">" << xml_escape(x_label) << "</text>\n";
  os << "<text x=\"16\" y=\"" << kTop + plot_h / 2 << "\" text-anchor=\"middle\" "
     << "transform=\"rotate(-90 16 " << kTop + plot_h / 2 << ")\">" << xml_escape(y_label)
     << "</text>\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kColors[s % std::size(kColors)];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < series[s].x.size() && i < series[s].y.size(); ++i) {
      if (!std::isfinite(series[s].y[i])) continue;
      os << px(series[s].x[i]) << ',' << py(series[s].y[i]) << ' ';
    }
    os << "\"/>\n";
    for (std::size_t i = 0; i < series[s].x.size() && i < series[s].y.size(); ++i) {
      if (!std::isfinite(series[s].y[i])) continue;
      os << "<circle cx=\"" << px(series[s].x[i]) << "\" cy=\"" << py(series[s].y[i])
         << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    const double ly = kTop + 10 + 18.0 * s;
    os << "<line x1=\"" << kLeft + plot_w + 12 << "\" y1=\"" << ly << "\" x2=\""
       << kLeft + plot_w + 32 << "\" y2=\"" << ly << "\" stroke=\"" << color
       << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << kLeft + plot_w + 38 << "\" y=\"" << ly + 4 << "\">"
       << xml_escape(series[s].name) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace revgreedy
