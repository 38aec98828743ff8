// Copyright 2026 The girthcut authors
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

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "girthcut/graph.hpp"
#include "girthcut/optimize.hpp"
#include "girthcut/qaoa.hpp"
#include "girthcut/random.hpp"
#include "girthcut/report.hpp"
#include "girthcut/spin_dynamics.hpp"
#include "girthcut/statevector.hpp"
#include "girthcut/threshold.hpp"

namespace {

using girthcut::CutStats;
using girthcut::Graph;
using girthcut::Qaoa2Angles;
using girthcut::SweepConfig;
using girthcut::SweepRecord;
using girthcut::ThresholdParams;
using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;

// Command-line structure problems beyond what CLI11 validates itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_number_list(const std::string& text, std::size_t count,
                                      const char* what) {
  std::vector<double> values;
  std::stringstream cells(text);
  std::string cell;
  while (std::getline(cells, cell, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(cell, &used));
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": bad number '" + cell + "'");
    }
  }
  if (values.size() != count)
    throw UsageError(std::string(what) + ": expected " + std::to_string(count) +
                     " comma-separated values");
  return values;
}

std::pair<int, int> parse_range(const std::string& text, const char* what) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw UsageError(std::string(what) + ": expected A:B");
  try {
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + ": bad range '" + text + "'");
  }
}

Graph resolve_graph(const std::string& spec) {
  if (spec == "heawood") return girthcut::heawood_graph();
  if (spec.rfind("cycle:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(spec.substr(6));
    } catch (const std::exception&) {
      throw UsageError("--graph: bad cycle size in '" + spec + "'");
    }
    return girthcut::cycle_graph(n);
  }
  if (spec.rfind("file:", 0) == 0) return girthcut::load_edge_list(spec.substr(5));
  throw UsageError("--graph: expected heawood, cycle:N, or file:PATH");
}

std::string default_cache_path() {
  const char* env = std::getenv("GIRTHCUT_CACHE");
  return env ? env : "";
}

void print_json_line(const json& j) { std::cout << j.dump() << "\n"; }

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

struct EvalOptions {
  int degree = 0;
  std::string angles;
  std::string taus;
  int steps = 2;
};

int run_eval(const std::string& which, const EvalOptions& opt) {
  CutStats stats{};
  json params;
  if (which == "qaoa1") {
    const auto a = parse_number_list(opt.angles, 2, "--angles");
    stats = girthcut::f1(opt.degree, a[0], a[1]);
    params = {{"d", opt.degree}, {"angles", a}};
  } else if (which == "qaoa2") {
    const auto a = parse_number_list(opt.angles, 4, "--angles");
    stats = girthcut::f2(opt.degree, {a[0], a[1], a[2], a[3]});
    params = {{"d", opt.degree}, {"angles", a}};
  } else {
    if (opt.steps != 1 && opt.steps != 2) throw UsageError("--steps: must be 1 or 2");
    const auto t = parse_number_list(opt.taus, opt.steps == 1 ? 1 : 2, "--tau");
    ThresholdParams p;
    p.steps = opt.steps;
    p.tau1 = static_cast<int>(t[0]);
    p.tau2 = opt.steps == 2 ? static_cast<int>(t[1]) : 0;
    stats = girthcut::threshold_improvement(opt.degree, p);
    params = {{"d", opt.degree}, {"steps", p.steps}};
    params["tau"] = p.steps == 1 ? json::array({p.tau1}) : json::array({p.tau1, p.tau2});
  }
  json out = girthcut::cut_stats_json(stats);
  out["params"] = params;
  print_json_line(out);
  return 0;
}

// ---------------------------------------------------------------------------
// opt / compare (cached sweeps)
// ---------------------------------------------------------------------------

struct SweepOptions {
  std::string d_range;
  int starts = 64;
  std::uint64_t seed = 1;
  bool equal_taus = false;
  bool free_taus = false;
  std::string window;
  std::string out;
  std::string cache = default_cache_path();
  int jobs = std::max(1u, std::thread::hardware_concurrency());
};

SweepConfig make_sweep_config(const SweepOptions& opt, const std::string& alg) {
  SweepConfig cfg;
  cfg.starts = opt.starts;
  cfg.seed = opt.seed;
  cfg.jobs = std::max(1, opt.jobs);
  if (opt.equal_taus) cfg.tau_mode = SweepConfig::TauMode::equal_only;
  if (opt.free_taus) cfg.tau_mode = SweepConfig::TauMode::free_pairs;
  if (!opt.window.empty()) {
    const auto colon = opt.window.find(':');
    if (colon == std::string::npos) throw UsageError("--window: expected kmin:kmax");
    girthcut::TauWindow w;
    try {
      w.k_min = std::stod(opt.window.substr(0, colon));
      w.k_max = std::stod(opt.window.substr(colon + 1));
    } catch (const std::exception&) {
      throw UsageError("--window: bad numbers in '" + opt.window + "'");
    }
    cfg.window = w;
  }
  cfg.with_qaoa1 = alg == "qaoa1" || alg == "all";
  cfg.with_qaoa2 = alg == "qaoa2" || alg == "all";
  cfg.with_threshold1 = alg == "threshold" || alg == "all";
  cfg.with_threshold2 = alg == "threshold" || alg == "all";
  return cfg;
}

json sweep_cache_key(const std::string& alg, int degree, const SweepOptions& opt) {
  return json{{"alg", alg},
              {"d", degree},
              {"seed", opt.seed},
              {"starts", opt.starts},
              {"tau_mode", opt.equal_taus ? "equal" : (opt.free_taus ? "free" : "auto")},
              {"window", opt.window.empty() ? "default" : opt.window},
              {"version", std::string(girthcut::kCodeVersion)}};
}

json record_to_json(const SweepRecord& r) {
  json j = {{"degree", r.degree},
            {"qaoa1_impr", r.qaoa1_improvement},
            {"qaoa2_impr", r.qaoa2_improvement},
            {"thr1_impr", r.threshold1_improvement},
            {"thr2_impr", r.threshold2_improvement},
            {"qaoa2_angles",
             {r.qaoa2_angles.gamma1, r.qaoa2_angles.beta1, r.qaoa2_angles.gamma2,
              r.qaoa2_angles.beta2}},
            {"thr1_tau", r.threshold1_tau},
            {"thr2_tau1", r.threshold2_tau1},
            {"thr2_tau2", r.threshold2_tau2},
            {"b_qaoa2", r.b_qaoa2},
            {"b_thr2", r.b_threshold2},
            {"window_warning", r.threshold_window_warning}};
  if (r.winner) {
    j["winner"] = *r.winner == girthcut::SweepWinner::qaoa2        ? "qaoa2"
                  : *r.winner == girthcut::SweepWinner::threshold2 ? "threshold2"
                                                                   : "tie";
  }
  return j;
}

// NaN round-trips through JSON as null.
double json_number(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

SweepRecord record_from_json(const json& j) {
  SweepRecord r;
  r.degree = j.at("degree").get<int>();
  r.qaoa1_improvement = json_number(j.at("qaoa1_impr"));
  r.qaoa2_improvement = json_number(j.at("qaoa2_impr"));
  r.threshold1_improvement = json_number(j.at("thr1_impr"));
  r.threshold2_improvement = json_number(j.at("thr2_impr"));
  const json& a = j.at("qaoa2_angles");
  r.qaoa2_angles = {json_number(a.at(0)), json_number(a.at(1)), json_number(a.at(2)),
                    json_number(a.at(3))};
  r.threshold1_tau = j.at("thr1_tau").get<int>();
  r.threshold2_tau1 = j.at("thr2_tau1").get<int>();
  r.threshold2_tau2 = j.at("thr2_tau2").get<int>();
  r.b_qaoa2 = json_number(j.at("b_qaoa2"));
  r.b_threshold2 = json_number(j.at("b_thr2"));
  r.threshold_window_warning = j.value("window_warning", false);
  if (j.contains("winner")) {
    const std::string w = j.at("winner").get<std::string>();
    r.winner = w == "qaoa2"        ? girthcut::SweepWinner::qaoa2
               : w == "threshold2" ? girthcut::SweepWinner::threshold2
                                   : girthcut::SweepWinner::tie;
  }
  return r;
}

struct SweepOutcome {
  std::vector<SweepRecord> records;
  int cache_hits = 0;
};

SweepOutcome run_sweep(const std::string& alg, const SweepOptions& opt) {
  const auto [d_min, d_max] = parse_range(opt.d_range, "--d-range");
  const SweepConfig cfg = make_sweep_config(opt, alg);
  SweepOutcome outcome;
  girthcut::ResultCache cache(opt.cache);
  if (!cache.enabled()) {
    outcome.records = girthcut::compare_sweep(d_min, d_max, cfg);
    return outcome;
  }
  for (int d = d_min; d <= d_max; ++d) {
    const json key = sweep_cache_key(alg, d, opt);
    if (const auto hit = cache.lookup(key)) {
      outcome.records.push_back(record_from_json(*hit));
      ++outcome.cache_hits;
      continue;
    }
    const SweepRecord r = girthcut::compare_sweep(d, d, cfg).front();
    cache.store(key, record_to_json(r));
    outcome.records.push_back(r);
  }
  return outcome;
}

void warn_window_boundaries(const std::vector<SweepRecord>& records) {
  for (const auto& r : records)
    if (r.threshold_window_warning)
      std::cerr << "warning: D=" << r.degree
                << ": threshold argmax on the search-window boundary (tau=("
                << r.threshold2_tau1 << "," << r.threshold2_tau2
                << ")); widen --window to confirm the optimum\n";
}

int write_lines(const std::string& out_path, const std::vector<std::string>& lines) {
  if (out_path.empty()) {
    for (const auto& line : lines) std::cout << line << "\n";
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 1;
  }
  for (const auto& line : lines) out << line << "\n";
  out.flush();
  return out ? 0 : 1;
}

int run_opt(const std::string& alg, const SweepOptions& opt) {
  const auto start_time = std::chrono::steady_clock::now();
  const SweepOutcome outcome = run_sweep(alg, opt);
  warn_window_boundaries(outcome.records);
  std::vector<std::string> lines = {girthcut::sweep_csv_header()};
  for (const auto& r : outcome.records) lines.push_back(girthcut::sweep_csv_row(r));
  const int rc = write_lines(opt.out, lines);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
  std::cerr << "opt " << alg << ": " << outcome.records.size() << " records ("
            << opt.d_range << "), cache hits " << outcome.cache_hits << "/"
            << outcome.records.size() << ", " << elapsed << " s\n";
  return rc;
}

int run_compare(const SweepOptions& opt) {
  const auto start_time = std::chrono::steady_clock::now();
  const SweepOutcome outcome = run_sweep("all", opt);
  warn_window_boundaries(outcome.records);
  std::vector<std::string> lines = {girthcut::compare_csv_header()};
  for (const auto& r : outcome.records) {
    const double root_d = std::sqrt(static_cast<double>(r.degree));
    lines.push_back(girthcut::compare_csv_row(r.degree, r.qaoa1_improvement * root_d,
                                              r.b_qaoa2,
                                              r.threshold1_improvement * root_d,
                                              r.b_threshold2));
  }
  const int rc = write_lines(opt.out, lines);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
  std::cerr << "compare: " << outcome.records.size() << " records (" << opt.d_range
            << "), cache hits " << outcome.cache_hits << "/" << outcome.records.size()
            << ", " << elapsed << " s\n";
  return rc;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::string graph = "heawood";
  long long trials = 1000000;
  std::uint64_t seed = 20260808;
  double tol = 0.0;  // 0: per-suite default
  std::string taus = "2,3";
  int steps = 2;
  int jobs = std::max(1u, std::thread::hardware_concurrency());
};

struct CheckReport {
  std::string suite;
  int checks = 0;
  std::vector<json> failures;

  void fail(json detail) {
    if (failures.size() < 200) failures.push_back(std::move(detail));
  }
  int finish() const {
    for (const auto& f : failures) print_json_line(f);
    print_json_line({{"suite", suite}, {"checks", checks}, {"failures", failures.size()}});
    return failures.empty() ? 0 : 1;
  }
};

// Formula-vs-oracle suites are only meaningful where the closed forms hold;
// refuse graphs with short cycles instead of reporting spurious mismatches.
bool girth_gate(const Graph& g, const std::string& name, CheckReport& report) {
  ++report.checks;
  const auto degree = g.regular_degree();
  if (!degree || *degree < 2) {
    report.fail({{"suite", report.suite},
                 {"check", "regularity-gate"},
                 {"graph", name},
                 {"reason", "graph must be D-regular with D >= 2"}});
    return false;
  }
  const int gv = girthcut::girth(g);
  if (gv <= 5) {
    report.fail({{"suite", report.suite},
                 {"check", "girth-gate"},
                 {"graph", name},
                 {"girth", gv},
                 {"reason", "closed forms require girth > 5; refusing comparison"}});
    return false;
  }
  return true;
}

int run_verify_reductions(const VerifyOptions& opt) {
  const double tol = opt.tol > 0 ? opt.tol : 1e-12;
  CheckReport report{"reductions"};
  girthcut::SplitMix64 rng(opt.seed);
  for (const int d : {2, 3, 5, 17, 100}) {
    for (int i = 0; i < 1000; ++i) {
      const double g = rng.next_in(-kPi, kPi);
      const double b = rng.next_in(-kPi, kPi);
      const double f1v = girthcut::f1(d, g, b).cut_fraction;
      ++report.checks;
      const double outer = girthcut::f2(d, {0.0, 0.0, g, b}).cut_fraction;
      if (std::abs(outer - f1v) > tol)
        report.fail({{"suite", report.suite}, {"check", "f2(0,0,g,b)=f1"},
                     {"d", d}, {"gamma", g}, {"beta", b},
                     {"delta", outer - f1v}, {"tol", tol}});
      ++report.checks;
      const double inner = girthcut::f2(d, {g, b, 0.0, 0.0}).cut_fraction;
      if (std::abs(inner - f1v) > tol)
        report.fail({{"suite", report.suite}, {"check", "f2(g,b,0,0)=f1"},
                     {"d", d}, {"gamma", g}, {"beta", b},
                     {"delta", inner - f1v}, {"tol", tol}});
    }
  }
  for (int i = 0; i < 10000; ++i) {
    const Qaoa2Angles a{rng.next_in(-kPi, kPi), rng.next_in(-kPi, kPi),
                        rng.next_in(-kPi, kPi), rng.next_in(-kPi, kPi)};
    ++report.checks;
    const double ring = girthcut::f2_ring(a).cut_fraction;
    const double full = girthcut::f2(2, a).cut_fraction;
    if (std::abs(ring - full) > tol)
      report.fail({{"suite", report.suite}, {"check", "f2_ring=f2(2)"},
                   {"angles", {a.gamma1, a.beta1, a.gamma2, a.beta2}},
                   {"delta", ring - full}, {"tol", tol}});
  }
  return report.finish();
}

int run_verify_oracle_qaoa(const VerifyOptions& opt) {
  const double tol = opt.tol > 0 ? opt.tol : 1e-9;
  CheckReport report{"oracle-qaoa"};
  const Graph g = resolve_graph(opt.graph);
  if (!girth_gate(g, opt.graph, report)) return report.finish();
  const int degree = *g.regular_degree();
  girthcut::SplitMix64 rng(opt.seed);
  for (int p = 1; p <= 2; ++p) {
    for (int i = 0; i < 20; ++i) {
      const Qaoa2Angles a{rng.next_in(-kPi, kPi), rng.next_in(-kPi, kPi),
                          rng.next_in(-kPi, kPi), rng.next_in(-kPi, kPi)};
      const double closed = p == 1
                                ? girthcut::f1(degree, a.gamma1, a.beta1).cut_fraction
                                : girthcut::f2(degree, a).cut_fraction;
      const double simulated = girthcut::qaoa_statevector_cut_fraction(g, a, p);
      ++report.checks;
      if (std::abs(simulated - closed) > tol)
        report.fail({{"suite", report.suite}, {"check", "statevector"},
                     {"graph", opt.graph}, {"p", p},
                     {"angles", {a.gamma1, a.beta1, a.gamma2, a.beta2}},
                     {"closed", closed}, {"simulated", simulated},
                     {"delta", simulated - closed}, {"tol", tol}});
    }
  }
  return report.finish();
}

int run_verify_oracle_threshold(const VerifyOptions& opt) {
  const double tol = opt.tol > 0 ? opt.tol : 1e-12;
  CheckReport report{"oracle-threshold"};
  const Graph g = resolve_graph(opt.graph);
  if (!girth_gate(g, opt.graph, report)) return report.finish();
  const int degree = *g.regular_degree();
  for (int tau1 = 0; tau1 <= degree + 1; ++tau1) {
    for (int tau2 = 0; tau2 <= degree + 1; ++tau2) {
      const double exact = girthcut::enumerate_threshold_exact(g, {2, tau1, tau2}) - 0.5;
      const double closed =
          girthcut::threshold2_improvement(degree, tau1, tau2).improvement;
      ++report.checks;
      if (std::abs(exact - closed) > tol)
        report.fail({{"suite", report.suite}, {"check", "enumeration-2step"},
                     {"graph", opt.graph}, {"tau", {tau1, tau2}},
                     {"exact", exact}, {"closed", closed},
                     {"delta", exact - closed}, {"tol", tol}});
    }
    const double exact1 = girthcut::enumerate_threshold_exact(g, {1, tau1, 0}) - 0.5;
    const double closed1 = girthcut::threshold1_improvement(degree, tau1).improvement;
    ++report.checks;
    if (std::abs(exact1 - closed1) > tol)
      report.fail({{"suite", report.suite}, {"check", "enumeration-1step"},
                   {"graph", opt.graph}, {"tau", {tau1}},
                   {"exact", exact1}, {"closed", closed1},
                   {"delta", exact1 - closed1}, {"tol", tol}});
  }
  return report.finish();
}

int run_verify_mc(const VerifyOptions& opt) {
  CheckReport report{"mc"};
  const Graph g = resolve_graph(opt.graph);
  if (!girth_gate(g, opt.graph, report)) return report.finish();
  const int degree = *g.regular_degree();
  if (opt.steps != 1 && opt.steps != 2) throw UsageError("--steps: must be 1 or 2");
  const auto t = parse_number_list(opt.taus, opt.steps == 1 ? 1 : 2, "--tau");
  ThresholdParams params;
  params.steps = opt.steps;
  params.tau1 = static_cast<int>(t[0]);
  params.tau2 = opt.steps == 2 ? static_cast<int>(t[1]) : 0;

  const double closed = girthcut::threshold_improvement(degree, params).cut_fraction;
  const girthcut::McEstimate mc =
      girthcut::mc_threshold(g, params, opt.trials, opt.seed, std::max(1, opt.jobs));
  ++report.checks;
  if (std::abs(mc.mean - closed) > 4.0 * mc.std_error)
    report.fail({{"suite", report.suite}, {"check", "mc-4sigma"},
                 {"graph", opt.graph}, {"steps", params.steps},
                 {"tau", {params.tau1, params.tau2}},
                 {"closed", closed}, {"mc_mean", mc.mean},
                 {"mc_std_error", mc.std_error}, {"trials", mc.trials}});
  return report.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact closed forms, optimization, and brute-force cross-checks for local "
      "MAX-CUT algorithms (depth-2 QAOA and multi-step threshold dynamics) on "
      "D-regular graphs of girth above 5"};
  app.require_subcommand(1);

  int exit_code = 0;

  // eval ---------------------------------------------------------------
  auto* eval = app.add_subcommand("eval", "Evaluate one closed form; JSON on stdout");
  eval->require_subcommand(1);
  auto eval_opts = std::make_shared<EvalOptions>();
  for (const std::string which : {"qaoa1", "qaoa2", "threshold"}) {
    auto* sub = eval->add_subcommand(which, "evaluate " + which);
    sub->add_option("--d", eval_opts->degree, "graph degree D")->required();
    if (which == "threshold") {
      sub->add_option("--tau", eval_opts->taus, "thresholds t1[,t2]")->required();
      sub->add_option("--steps", eval_opts->steps, "number of steps (1 or 2)");
    } else {
      sub->add_option("--angles", eval_opts->angles,
                      which == "qaoa1" ? "angles g,b" : "angles g1,b1,g2,b2")
          ->required();
    }
    sub->callback(
        [&exit_code, eval_opts, which] { exit_code = run_eval(which, *eval_opts); });
  }

  // opt / compare --------------------------------------------------------
  auto sweep_opts = std::make_shared<SweepOptions>();
  const auto add_sweep_flags = [sweep_opts](CLI::App* sub, bool with_tau_flags) {
    sub->add_option("--d-range", sweep_opts->d_range, "degree range A:B")->required();
    sub->add_option("--starts", sweep_opts->starts, "multistart count (default 64)");
    sub->add_option("--seed", sweep_opts->seed, "RNG seed (default 1)");
    sub->add_option("--out", sweep_opts->out, "output CSV path (default stdout)");
    sub->add_option("--cache", sweep_opts->cache,
                    "JSON-lines result cache path (default $GIRTHCUT_CACHE)");
    sub->add_option("--jobs", sweep_opts->jobs, "parallel workers");
    if (with_tau_flags) {
      auto* eq = sub->add_flag("--equal-taus", sweep_opts->equal_taus,
                               "restrict the 2-step search to tau1 == tau2");
      auto* fr = sub->add_flag("--free-taus", sweep_opts->free_taus,
                               "search all (tau1, tau2) pairs at every degree");
      eq->excludes(fr);
      fr->excludes(eq);
      sub->add_option("--window", sweep_opts->window,
                      "threshold search window kmin:kmax around D/2 + k sqrt(D)");
    }
  };

  auto* opt_cmd =
      app.add_subcommand("opt", "Optimize closed forms over a degree range; CSV out");
  opt_cmd->require_subcommand(1);
  for (const std::string alg : {"qaoa1", "qaoa2", "threshold", "all"}) {
    auto* sub = opt_cmd->add_subcommand(alg, "optimize " + alg);
    add_sweep_flags(sub, alg == "threshold" || alg == "all");
    sub->callback([&exit_code, sweep_opts, alg] { exit_code = run_opt(alg, *sweep_opts); });
  }

  auto* compare = app.add_subcommand(
      "compare", "Emit plot-ready scaled-performance columns (D, b per algorithm)");
  add_sweep_flags(compare, true);
  compare->callback([&exit_code, sweep_opts] { exit_code = run_compare(*sweep_opts); });

  // verify ---------------------------------------------------------------
  auto verify_opts = std::make_shared<VerifyOptions>();
  auto* verify =
      app.add_subcommand("verify", "Run an invariant suite; JSON failure report");
  verify->require_subcommand(1);
  for (const std::string which : {"reductions", "oracle-qaoa", "oracle-threshold", "mc"}) {
    auto* sub = verify->add_subcommand(which, "verify " + which);
    if (which != "reductions")
      sub->add_option("--graph", verify_opts->graph, "heawood | cycle:N | file:PATH");
    sub->add_option("--seed", verify_opts->seed, "RNG seed");
    sub->add_option("--tol", verify_opts->tol, "tolerance override");
    if (which == "mc") {
      sub->add_option("--trials", verify_opts->trials, "Monte-Carlo trials (default 1e6)");
      sub->add_option("--tau", verify_opts->taus, "thresholds t1[,t2] (default 2,3)");
      sub->add_option("--steps", verify_opts->steps, "steps (default 2)");
      sub->add_option("--jobs", verify_opts->jobs, "parallel workers");
    }
    sub->callback([&exit_code, verify_opts, which] {
      if (which == "reductions")
        exit_code = run_verify_reductions(*verify_opts);
      else if (which == "oracle-qaoa")
        exit_code = run_verify_oracle_qaoa(*verify_opts);
      else if (which == "oracle-threshold")
        exit_code = run_verify_oracle_threshold(*verify_opts);
      else
        exit_code = run_verify_mc(*verify_opts);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
