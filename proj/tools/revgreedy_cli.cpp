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

// revgreedy: reverse greedy k-median toolkit.
//
//   revgreedy gen tree --h 3 -o t3.json
//   revgreedy solve t3.json -k 1 --tie priority --exact
//   revgreedy verify --check all --trials 1000 --seed 1
//   revgreedy sweep --family tree --h 1..3 -k 1 --svg ratio.svg
//
// Exit codes: 0 success, 1 a verification check failed, 2 bad input,
// 3 refused for size or budget.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "revgreedy/analysis.hpp"
#include "revgreedy/campaigns.hpp"
#include "revgreedy/errors.hpp"
#include "revgreedy/instance_gen.hpp"
#include "revgreedy/instance_io.hpp"
#include "revgreedy/report.hpp"
#include "revgreedy/solvers.hpp"
#include "revgreedy/sweep.hpp"

namespace rg = revgreedy;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Globals {
  std::string output;
  std::uint64_t seed = 1;
  std::string tie = "lex";
  std::string format = "csv";
};

// Writes to the -o file, or stdout when none was given.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw rg::InputError("cannot write " + path);
    }
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }
  // Summary lines go to stdout when the payload went to a file.
  std::ostream& summary() { return file_ ? std::cout : std::cerr; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

// "1..3", "10,100,1000", "2,5..7".
template <typename T>
std::vector<T> parse_range(const std::string& text) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    const auto dots = part.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(static_cast<T>(std::stod(part)));
      } else {
        const long long lo = std::stoll(part.substr(0, dots));
        const long long hi = std::stoll(part.substr(dots + 2));
        for (long long v = lo; v <= hi; ++v) out.push_back(static_cast<T>(v));
      }
    } catch (const std::logic_error&) {
      throw rg::InputError("bad range \"" + text + "\"");
    }
  }
  return out;
}

std::string labels_of(const rg::MetricSpace& space, const rg::FacilitySet& set) {
  std::string out;
  for (rg::PointId id : set) {
    if (!out.empty()) out += ' ';
    const std::string& label = space.point(id).label;
    out += label.empty() ? std::to_string(id) : label;
  }
  return out;
}

std::string ids_of(const rg::FacilitySet& set) {
  std::string out;
  for (rg::PointId id : set) {
    if (!out.empty()) out += ' ';
    out += std::to_string(id);
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  Sink sink(path);
  sink.out() << text;
}

// ---------------------------------------------------------------------------

struct GenArgs {
  int h = 2;
  bool expand_graph = false;
  bool allow_large = false;
  int j = 3;
  double w = 1.0;
  std::size_t n = 10;
  std::string kind = "unit_square_points";
  std::string base;
  int copies = 2;
  double separation = 0.0;
  double eps = 0.0;
};

struct SolveArgs {
  std::string instance;
  std::size_t k = 1;
  std::string alg = "rgreedy";
  bool exact = false;
  std::uint64_t budget = rg::kDefaultSubsetBudget;
};

int run_solve(const SolveArgs& a, const Globals& g) {
  const rg::MetricSpace space = rg::load_instance(a.instance);
  const rg::TiePolicy tie = rg::TiePolicy::Parse(g.tie, space);
  const rg::Algorithm alg = rg::parse_algorithm(a.alg);
  const rg::GreedyTrace trace =
      alg == rg::Algorithm::kRGreedy          ? rg::rgreedy(space, a.k, tie)
      : alg == rg::Algorithm::kRGreedyReference ? rg::rgreedy_reference(space, a.k, tie)
                                                : rg::forward_greedy(space, a.k, tie);
  std::optional<rg::ExactResult> exact;
  if (a.exact) exact = rg::exact_kmedian(space, a.k, a.budget);

  Sink sink(g.output);
  std::ostringstream summary;
  summary << "alg=" << a.alg << " k=" << a.k << " tie=" << tie.to_string()
          << " final={" << ids_of(trace.final_set) << "} labels={"
          << labels_of(space, trace.final_set)
          << "} cost=" << rg::format_number(trace.final_cost());
  if (exact) {
    const double ratio = exact->cost > 0 ? trace.final_cost() / exact->cost : 1.0;
    summary << " exact=" << rg::format_number(exact->cost) << " exact_set={"
            << ids_of(exact->set) << "} ratio=" << rg::format_number(ratio);
  }
  if (g.format == "json") {
    nlohmann::json doc = rg::trace_to_json(trace);
    if (exact) {
      doc["exact_cost"] = exact->cost;
      doc["exact_set"] = std::vector<rg::PointId>(exact->set.begin(), exact->set.end());
    }
    sink.out() << doc.dump(1) << "\n";
  } else {
    rg::write_trace_csv(sink.out(), trace);
  }
  sink.summary() << summary.str() << "\n";
  return kExitOk;
}

struct ExactArgs {
  std::string instance;
  std::size_t k = 1;
  std::uint64_t budget = rg::kDefaultSubsetBudget;
};

int run_exact(const ExactArgs& a, const Globals& g) {
  const rg::MetricSpace space = rg::load_instance(a.instance);
  const rg::ExactResult r = rg::exact_kmedian(space, a.k, a.budget);
  Sink sink(g.output);
  if (g.format == "json") {
    sink.out() << nlohmann::json{{"k", a.k},
                                 {"cost", r.cost},
                                 {"members", std::vector<rg::PointId>(r.set.begin(), r.set.end())}}
                      .dump(1)
               << "\n";
  } else {
    sink.out() << "k,cost,members,labels\n"
               << a.k << ',' << rg::format_number(r.cost) << ','
               << rg::csv_field(ids_of(r.set)) << ','
               << rg::csv_field(labels_of(space, r.set)) << "\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string instance;
  std::string check = "all";
  std::size_t trials = 1000;
  std::size_t instances = 500;
  std::vector<std::size_t> ks;
};

int run_verify(const VerifyArgs& a, const Globals& g) {
  static const std::vector<std::string> kChecks = {
      "metric", "lemma1", "supermod", "stepbound", "harmonic", "general"};
  if (a.check != "all" &&
      std::find(kChecks.begin(), kChecks.end(), a.check) == kChecks.end()) {
    throw rg::InputError("unknown check \"" + a.check + "\"");
  }
  std::optional<rg::MetricSpace> space;
  rg::CampaignTarget target;
  if (!a.instance.empty()) {
    space = rg::load_instance(a.instance);
    target.fixed = &*space;
    target.fixed_name = a.instance;
  }
  const std::size_t per_instance = space ? 1 : a.instances;
  std::vector<rg::CheckRow> rows;
  auto append = [&](std::vector<rg::CheckRow> more) {
    std::move(more.begin(), more.end(), std::back_inserter(rows));
  };
  auto wants = [&](const char* name) { return a.check == "all" || a.check == name; };

  if (wants("metric")) append(rg::campaign_metric(per_instance, g.seed, target));
  if (space && space->size() < 2 && a.check != "all") {
    if (a.check == "supermod" || a.check == "general") {
      throw rg::InputError(a.check + " needs at least 2 points");
    }
  }
  const bool pairs_ok = !space || space->size() >= 2;
  if (wants("lemma1")) append(rg::fuzz_lemma1(a.trials, g.seed, target));
  if (wants("supermod") && pairs_ok) {
    append(rg::fuzz_supermodularity(a.trials, g.seed, target));
  }
  if (wants("general") && pairs_ok) append(rg::fuzz_general(a.trials, g.seed, target));
  if (wants("stepbound") || wants("harmonic")) {
    const rg::TiePolicy tie = space ? rg::TiePolicy::Parse(g.tie, *space)
                                    : rg::TiePolicy::Parse(
                                        g.tie, rg::gen_random(1, rg::RandomKind::kUnitSquarePoints, 0));
    if (wants("stepbound")) {
      append(rg::campaign_step_bounds(per_instance, g.seed, tie, target, a.ks));
    }
    if (wants("harmonic")) {
      append(rg::campaign_harmonic(per_instance, g.seed, tie, target, a.ks));
    }
  }

  Sink sink(g.output);
  if (g.format == "json") {
    sink.out() << rg::checks_to_json(rows).dump(1) << "\n";
  } else {
    rg::write_check_csv(sink.out(), rows);
  }
  std::size_t failed = 0;
  for (const auto& r : rows) failed += !r.report.holds;
  sink.summary() << "verify: " << rows.size() << " checks, " << failed
                 << " violated\n";
  for (const auto& r : rows) {
    if (!r.report.holds) {
      sink.summary() << "violation: " << r.report.check << " " << r.instance
                     << " " << r.params << " witness " << r.report.witness << "\n";
      break;
    }
  }
  return failed ? kExitViolation : kExitOk;
}

struct SweepArgs {
  std::string family = "tree";
  std::string h = "1..3";
  std::string j = "10";
  std::string w = "10,100,1000";
  std::string n = "4..14";
  std::size_t seeds = 10;
  std::string k = "1";
  std::string alg = "rgreedy";
  std::string svg;
  std::uint64_t budget = rg::kDefaultSubsetBudget;
  bool allow_large = false;
  bool tie_given = false;
};

int run_sweep(const SweepArgs& a, const Globals& g) {
  rg::SweepSpec spec;
  spec.family = rg::parse_family(a.family);
  spec.h_values = parse_range<int>(a.h);
  spec.j_values = parse_range<int>(a.j);
  spec.w_values = parse_range<double>(a.w);
  spec.n_values = parse_range<std::size_t>(a.n);
  spec.seeds = a.seeds;
  spec.seed = g.seed;
  spec.k_values = parse_range<std::size_t>(a.k);
  spec.tie = a.tie_given ? g.tie : "";
  spec.algorithm = rg::parse_algorithm(a.alg);
  spec.budget = a.budget;
  spec.allow_large = a.allow_large;
  rg::validate(spec);
  if (spec.family == rg::Family::kTree && !a.allow_large) {
    for (int h : spec.h_values) {
      if (h == 4) throw rg::BudgetError("sweep: tree h=4 requires --allow-large");
    }
  }
  const std::vector<rg::SweepRow> rows = rg::run_sweep(spec);
  Sink sink(g.output);
  if (g.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json row = {{"family", r.family},       {"params", r.params},
                            {"n", r.n},                 {"total_weight", r.total_weight},
                            {"k", r.k},                 {"algorithm", r.algorithm},
                            {"alg_cost", r.alg_cost},   {"exact_cost", r.exact_cost},
                            {"ratio", r.ratio},         {"harmonic_bound", r.harmonic_bound},
                            {"error", r.error}};
      if (r.lb_reference) row["lb_reference"] = *r.lb_reference;
      if (r.tightness) row["tightness"] = *r.tightness;
      arr.push_back(std::move(row));
    }
    sink.out() << arr.dump(1) << "\n";
  } else {
    rg::write_sweep_csv(sink.out(), rows);
  }
  if (!a.svg.empty()) write_text(a.svg, rg::sweep_svg(spec, rows));
  std::size_t errors = 0;
  for (const auto& r : rows) errors += !r.error.empty();
  sink.summary() << "sweep: " << rows.size() << " rows, " << errors << " errors\n";
  return errors ? kExitInput : kExitOk;
}

struct InstrumentArgs {
  std::string instance;
  std::string trace;
  double radius = 1.0;
};

int run_instrument(const InstrumentArgs& a, const Globals& g) {
  const rg::MetricSpace space = rg::load_instance(a.instance);
  rg::GreedyTrace trace;
  if (!a.trace.empty()) {
    std::ifstream in(a.trace);
    if (!in) throw rg::InputError("cannot open trace " + a.trace);
    trace = rg::read_trace_csv(in, space.size());
  } else {
    trace = rg::rgreedy(space, 1, rg::TiePolicy::Parse(g.tie, space));
  }
  const rg::BallInstrumentation b = rg::ball_instrumentation(space, trace, a.radius);
  const double n = space.total_weight();
  Sink sink(g.output);
  if (g.format == "json") {
    nlohmann::json zones = nlohmann::json::array();
    for (std::size_t i = 0; i < b.zones.size(); ++i) {
      nlohmann::json z = {{"zone", i}, {"members", b.zones[i]}, {"weight", b.m_static[i]}};
      if (b.t[i]) z["t"] = *b.t[i], z["step"] = space.size() - *b.t[i];
      if (b.m_operational[i]) z["m_operational"] = *b.m_operational[i];
      zones.push_back(std::move(z));
    }
    nlohmann::json doc = {{"center", b.center},
                          {"radius", b.radius},
                          {"ball", b.ball},
                          {"zones", std::move(zones)},
                          {"weighted_sum_all", b.weighted_sum_all},
                          {"weighted_sum_ge10", b.weighted_sum_ge10},
                          {"weighted_sum_all_per_weight", b.weighted_sum_all / n},
                          {"never_serving_weight", b.never_serving_weight},
                          {"max_empty_run", b.max_empty_run}};
    if (b.operational_sum_ge10) doc["operational_sum_ge10"] = *b.operational_sum_ge10;
    sink.out() << doc.dump(1) << "\n";
    return kExitOk;
  }
  sink.out() << "# center=" << b.center << " radius=" << rg::format_number(b.radius)
             << " ball=" << b.ball.size() << " max_zone=" << b.max_zone()
             << " weighted_sum_all=" << rg::format_number(b.weighted_sum_all)
             << " weighted_sum_ge10=" << rg::format_number(b.weighted_sum_ge10)
             << " per_weight=" << rg::format_number(b.weighted_sum_all / n)
             << " never_serving_weight=" << rg::format_number(b.never_serving_weight)
             << " max_empty_run=" << b.max_empty_run;
  if (b.operational_sum_ge10) {
    sink.out() << " operational_sum_ge10=" << rg::format_number(*b.operational_sum_ge10);
  }
  sink.out() << "\nzone,size,weight,t,step,m_operational\n";
  for (std::size_t i = 0; i < b.zones.size(); ++i) {
    sink.out() << i << ',' << b.zones[i].size() << ',' << rg::format_number(b.m_static[i])
               << ',' << (b.t[i] ? std::to_string(*b.t[i]) : "") << ','
               << (b.t[i] ? std::to_string(space.size() - *b.t[i]) : "") << ','
               << (b.m_operational[i] ? rg::format_number(*b.m_operational[i]) : "")
               << '\n';
  }
  return kExitOk;
}

void add_globals(CLI::App* cmd, Globals& g) {
  cmd->add_option("-o,--output", g.output, "Output file (default stdout)");
  cmd->add_option("--seed", g.seed, "Seed for random generation and campaigns");
  cmd->add_option("--tie", g.tie, "Tie policy: lex | priority | random:SEED");
  cmd->add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reverse greedy k-median toolkit"};
  app.require_subcommand(1);
  Globals g;

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->require_subcommand(1);
  auto* gen_tree = gen_cmd->add_subcommand("tree", "Lower-bound tree instance");
  gen_tree->set_help_flag("--help", "Print this help message and exit");
  gen_tree->add_option("--h", gen.h, "Number of tree levels (1..4)")->required();
  gen_tree->add_flag("--expand-graph", gen.expand_graph, "Write an explicit edge list");
  gen_tree->add_flag("--allow-large", gen.allow_large, "Permit h = 4");
  auto* gen_star = gen_cmd->add_subcommand("star", "Star/cluster tightness instance");
  gen_star->add_option("--j", gen.j, "Arm count")->required();
  gen_star->add_option("--w", gen.w, "Cluster weight")->required();
  auto* gen_random = gen_cmd->add_subcommand("random", "Random unit-weight instance");
  gen_random->add_option("--n", gen.n, "Point count")->required();
  gen_random->add_option("--kind", gen.kind, "unit_square_points | random_graph");
  auto* gen_copies = gen_cmd->add_subcommand("copies", "k separated copies of an instance");
  gen_copies->add_option("--base", gen.base, "Base instance file")->required();
  gen_copies->add_option("--k", gen.copies, "Number of copies")->required();
  gen_copies->add_option("--separation", gen.separation, "Inter-copy distance");
  auto* gen_perturb = gen_cmd->add_subcommand("perturb", "Raise zero distances to epsilon");
  gen_perturb->add_option("--base", gen.base, "Base instance file")->required();
  gen_perturb->add_option("--eps", gen.eps, "Epsilon")->required();
  for (auto* c : {gen_tree, gen_star, gen_random, gen_copies, gen_perturb}) {
    add_globals(c, g);
  }

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run a greedy solver and write its trace");
  solve_cmd->add_option("instance", solve.instance, "Instance file")->required();
  solve_cmd->add_option("-k", solve.k, "Target facility count")->required();
  solve_cmd->add_option("--alg", solve.alg, "rgreedy | rgreedy-ref | forward");
  solve_cmd->add_flag("--exact", solve.exact, "Also compute the exact optimum and ratio");
  solve_cmd->add_option("--budget", solve.budget, "Subset budget for the exact oracle");
  add_globals(solve_cmd, g);

  ExactArgs exact;
  auto* exact_cmd = app.add_subcommand("exact", "Exact k-median by exhaustive search");
  exact_cmd->add_option("instance", exact.instance, "Instance file")->required();
  exact_cmd->add_option("-k", exact.k, "Facility count")->required();
  exact_cmd->add_option("--budget", exact.budget, "Subset budget");
  add_globals(exact_cmd, g);

  VerifyArgs verify;
  std::string verify_k;
  auto* verify_cmd = app.add_subcommand("verify", "Check the analysis inequalities");
  verify_cmd->add_option("instance", verify.instance, "Instance file (default: random corpus)");
  verify_cmd->add_option("--check", verify.check,
                         "lemma1 | supermod | stepbound | harmonic | general | metric | all");
  verify_cmd->add_option("--trials", verify.trials, "Fuzz trials for set-based checks");
  verify_cmd->add_option("--instances", verify.instances,
                         "Corpus instances for per-instance checks");
  verify_cmd->add_option("-k", verify_k, "k values for stepbound/harmonic (default all)");
  add_globals(verify_cmd, g);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Ratio sweep over an instance family");
  sweep_cmd->set_help_flag("--help", "Print this help message and exit");
  sweep_cmd->add_option("--family", sweep.family, "tree_lb | star | random");
  sweep_cmd->add_option("--h", sweep.h, "Tree heights, e.g. 1..3");
  sweep_cmd->add_option("--j", sweep.j, "Star arm counts");
  sweep_cmd->add_option("--w", sweep.w, "Star cluster weights");
  sweep_cmd->add_option("--n", sweep.n, "Random instance sizes");
  sweep_cmd->add_option("--seeds", sweep.seeds, "Random instances per size");
  sweep_cmd->add_option("-k", sweep.k, "k values");
  sweep_cmd->add_option("--alg", sweep.alg, "rgreedy | rgreedy-ref | forward");
  sweep_cmd->add_option("--svg", sweep.svg, "Write a ratio chart");
  sweep_cmd->add_option("--budget", sweep.budget, "Subset budget for the exact oracle");
  sweep_cmd->add_flag("--allow-large", sweep.allow_large, "Permit tree h = 4");
  add_globals(sweep_cmd, g);

  InstrumentArgs inst;
  auto* inst_cmd = app.add_subcommand("instrument", "Ball/zone bookkeeping of a reverse trace");
  inst_cmd->add_option("instance", inst.instance, "Instance file")->required();
  inst_cmd->add_option("--trace", inst.trace, "Trace CSV (default: run rgreedy to k=1)");
  inst_cmd->add_option("--radius", inst.radius, "Ball radius");
  add_globals(inst_cmd, g);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (gen_cmd->parsed()) {
      std::optional<rg::MetricSpace> space;
      if (gen_tree->parsed()) {
        space = rg::gen_tree_lb({gen.h, gen.allow_large});
      } else if (gen_star->parsed()) {
        space = rg::gen_star({gen.j, gen.w});
      } else if (gen_random->parsed()) {
        space = rg::gen_random(gen.n, rg::parse_random_kind(gen.kind), g.seed);
      } else if (gen_copies->parsed()) {
        const rg::MetricSpace base = rg::load_instance(gen.base);
        space = rg::gen_k_copies(base, gen.copies,
                                 gen_copies->count("--separation")
                                     ? std::optional<double>(gen.separation)
                                     : std::nullopt);
      } else {
        space = rg::epsilon_perturb(rg::load_instance(gen.base), gen.eps);
      }
      write_text(g.output, rg::serialize_instance(*space, gen.expand_graph));
      return kExitOk;
    }
    if (solve_cmd->parsed()) return run_solve(solve, g);
    if (exact_cmd->parsed()) return run_exact(exact, g);
    if (verify_cmd->parsed()) {
      if (!verify_k.empty()) verify.ks = parse_range<std::size_t>(verify_k);
      return run_verify(verify, g);
    }
    if (sweep_cmd->parsed()) {
      sweep.tie_given = sweep_cmd->count("--tie") > 0;
      return run_sweep(sweep, g);
    }
    if (inst_cmd->parsed()) return run_instrument(inst, g);
  } catch (const rg::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
