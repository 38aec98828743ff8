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

#include "girthcut/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace girthcut {
namespace {

constexpr char kSweepHeader[] =
    "D,qaoa1_impr,qaoa2_impr,thr1_impr,thr2_impr,"
    "qaoa2_gamma1,qaoa2_beta1,qaoa2_gamma2,qaoa2_beta2,"
    "thr1_tau,thr2_tau1,thr2_tau2,b_qaoa2,b_thr2,winner";

std::string winner_name(const std::optional<SweepWinner>& winner) {
  if (!winner) return "";
  switch (*winner) {
    case SweepWinner::qaoa2: return "qaoa2";
    case SweepWinner::threshold2: return "threshold2";
    case SweepWinner::tie: return "tie";
  }
  return "";
}

std::optional<SweepWinner> winner_from_name(const std::string& name) {
  if (name == "qaoa2") return SweepWinner::qaoa2;
  if (name == "threshold2") return SweepWinner::threshold2;
  if (name == "tie") return SweepWinner::tie;
  if (name.empty()) return std::nullopt;
  throw std::invalid_argument("parse_sweep_csv: unknown winner '" + name + "'");
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream row(line);
  while (std::getline(row, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

int parse_csv_int(const std::string& cell) {
  if (cell.empty()) return 0;
  std::size_t used = 0;
  const int value = std::stoi(cell, &used);
  if (used != cell.size())
    throw std::invalid_argument("parse_sweep_csv: bad integer '" + cell + "'");
  return value;
}

}  // namespace

std::string format_sig12(double v) {
  if (std::isnan(v)) return "";
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, "%.12g", v);
  return buffer;
}

double parse_csv_number(const std::string& cell) {
  if (cell.empty()) return std::numeric_limits<double>::quiet_NaN();
  char* end = nullptr;
  const double value = std::strtod(cell.c_str(), &end);
  if (end != cell.c_str() + cell.size())
    throw std::invalid_argument("parse_csv_number: bad number '" + cell + "'");
  return value;
}

std::string sweep_csv_header() { return kSweepHeader; }

std::string sweep_csv_row(const SweepRecord& r) {
  std::string row = std::to_string(r.degree);
  const auto add = [&row](const std::string& cell) {
    row += ',';
    row += cell;
  };
  add(format_sig12(r.qaoa1_improvement));
  add(format_sig12(r.qaoa2_improvement));
  add(format_sig12(r.threshold1_improvement));
  add(format_sig12(r.threshold2_improvement));
  const bool has_qaoa2 = !std::isnan(r.qaoa2_improvement);
  add(has_qaoa2 ? format_sig12(r.qaoa2_angles.gamma1) : "");
  add(has_qaoa2 ? format_sig12(r.qaoa2_angles.beta1) : "");
  add(has_qaoa2 ? format_sig12(r.qaoa2_angles.gamma2) : "");
  add(has_qaoa2 ? format_sig12(r.qaoa2_angles.beta2) : "");
  add(std::isnan(r.threshold1_improvement) ? "" : std::to_string(r.threshold1_tau));
  const bool has_thr2 = !std::isnan(r.threshold2_improvement);
  add(has_thr2 ? std::to_string(r.threshold2_tau1) : "");
  add(has_thr2 ? std::to_string(r.threshold2_tau2) : "");
  add(format_sig12(r.b_qaoa2));
  add(format_sig12(r.b_threshold2));
  add(winner_name(r.winner));
  return row;
}

std::vector<SweepRecord> parse_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != kSweepHeader)
    throw std::invalid_argument("parse_sweep_csv: missing or unexpected header");

  std::vector<SweepRecord> records;
  while (std::getline(in, line)) {
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto cells = split_row(line);
    if (cells.size() != 15)
      throw std::invalid_argument("parse_sweep_csv: expected 15 cells, got " +
                                  std::to_string(cells.size()));
    SweepRecord r;
    r.degree = parse_csv_int(cells[0]);
    r.qaoa1_improvement = parse_csv_number(cells[1]);
    r.qaoa2_improvement = parse_csv_number(cells[2]);
    r.threshold1_improvement = parse_csv_number(cells[3]);
    r.threshold2_improvement = parse_csv_number(cells[4]);
    r.qaoa2_angles.gamma1 = parse_csv_number(cells[5]);
    r.qaoa2_angles.beta1 = parse_csv_number(cells[6]);
    r.qaoa2_angles.gamma2 = parse_csv_number(cells[7]);
    r.qaoa2_angles.beta2 = parse_csv_number(cells[8]);
    r.threshold1_tau = parse_csv_int(cells[9]);
    r.threshold2_tau1 = parse_csv_int(cells[10]);
    r.threshold2_tau2 = parse_csv_int(cells[11]);
    r.b_qaoa2 = parse_csv_number(cells[12]);
    r.b_threshold2 = parse_csv_number(cells[13]);
    r.winner = winner_from_name(cells[14]);
    records.push_back(r);
  }
  return records;
}

std::string compare_csv_header() { return "D,b_qaoa1,b_qaoa2,b_thr1,b_thr2"; }

std::string compare_csv_row(int degree, double b_qaoa1, double b_qaoa2,
                            double b_thr1, double b_thr2) {
  return std::to_string(degree) + ',' + format_sig12(b_qaoa1) + ',' +
         format_sig12(b_qaoa2) + ',' + format_sig12(b_thr1) + ',' +
         format_sig12(b_thr2);
}

nlohmann::json cut_stats_json(const CutStats& stats) {
  return nlohmann::json{{"cut_fraction", stats.cut_fraction},
                        {"improvement", stats.improvement},
                        {"scaled_b", stats.scaled_b}};
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  if (path_.empty()) return;
  std::ifstream in(path_);
  if (!in) return;  // no file yet: first run
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json entry = nlohmann::json::parse(line, nullptr, false);
    if (entry.is_discarded() || !entry.contains("key") || !entry.contains("value"))
      continue;  // tolerate a torn trailing line from an interrupted run
    entries_[entry["key"].dump()] = entry["value"];
  }
}

std::optional<nlohmann::json> ResultCache::lookup(const nlohmann::json& key) const {
  if (!enabled()) return std::nullopt;
  const auto it = entries_.find(key.dump());
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::store(const nlohmann::json& key, const nlohmann::json& value) {
  if (!enabled()) return;
  entries_[key.dump()] = value;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("ResultCache: cannot append to " + path_);
  const auto now = std::chrono::system_clock::now().time_since_epoch();
  out << nlohmann::json{
             {"key", key},
             {"value", value},
             {"ts", std::chrono::duration_cast<std::chrono::seconds>(now).count()}}
             .dump()
      << '\n';
}

}  // namespace girthcut
