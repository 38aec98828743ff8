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

// End-to-end exercises of the installed binary: exit-code contract, JSON
// output shapes, CSV emission, and cache behavior.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "girthcut/report.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / "girthcut_cli_test";
  fs::create_directories(dir);
  return dir;
}

RunResult run(const std::string& args) {
  const auto dir = scratch_dir();
  const auto out_path = dir / "stdout.txt";
  const auto err_path = dir / "stderr.txt";
  const std::string command = std::string(GIRTHCUT_BIN) + " " + args + " > " +
                              out_path.string() + " 2> " + err_path.string();
  const int raw = std::system(command.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

json first_json_line(const std::string& text) {
  std::stringstream lines(text);
  std::string line;
  REQUIRE(std::getline(lines, line));
  return json::parse(line);
}

}  // namespace

TEST_CASE("eval qaoa2 at zero angles") {
  const RunResult r = run("eval qaoa2 --d 2 --angles 0,0,0,0");
  CHECK(r.exit_code == 0);
  const json j = first_json_line(r.out);
  CHECK(j["cut_fraction"].get<double>() == doctest::Approx(0.5));
  CHECK(j["improvement"].get<double>() == doctest::Approx(0.0));
  CHECK(j["params"]["d"].get<int>() == 2);
}

TEST_CASE("eval threshold reproduces the D=2 optimum") {
  const RunResult r = run("eval threshold --d 2 --steps 2 --tau 2,2");
  CHECK(r.exit_code == 0);
  const json j = first_json_line(r.out);
  CHECK(j["improvement"].get<double>() == doctest::Approx(0.3125).epsilon(1e-12));
}

TEST_CASE("eval qaoa1 and steps=1 threshold") {
  CHECK(first_json_line(run("eval qaoa1 --d 2 --angles 0.785398163,0.392699082").out)
            ["cut_fraction"].get<double>() == doctest::Approx(0.75).epsilon(1e-8));
  const json t1 = first_json_line(run("eval threshold --d 3 --steps 1 --tau 3").out);
  CHECK(t1["improvement"].get<double>() == doctest::Approx(0.1875));
}

TEST_CASE("exit-code contract") {
  CHECK(run("eval qaoa2 --d 2 --angles 0,0,0,0").exit_code == 0);
  CHECK(run("nonsense").exit_code == 2);                       // unknown subcommand
  CHECK(run("eval qaoa2 --angles 0,0,0,0").exit_code == 2);    // missing --d
  CHECK(run("eval qaoa2 --d 2 --angles 0,0").exit_code == 2);  // wrong arity
  CHECK(run("eval qaoa2 --d 1 --angles 0,0,0,0").exit_code == 1);  // domain error
  CHECK(run("eval threshold --d 3 --steps 2 --tau 9,9").exit_code == 1);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("opt qaoa2 emits a parseable sweep CSV and eval closes the loop") {
  const auto dir = scratch_dir();
  const auto csv_path = dir / "qaoa2.csv";
  const RunResult r =
      run("opt qaoa2 --d-range 3:3 --starts 64 --seed 1 --out " + csv_path.string());
  CHECK(r.exit_code == 0);
  std::ifstream in(csv_path);
  const auto records = girthcut::parse_sweep_csv(in);
  REQUIRE(records.size() == 1);
  CHECK(records[0].degree == 3);
  CHECK(records[0].qaoa2_improvement == doctest::Approx(0.2559).epsilon(5e-4));

  std::ostringstream angles;
  angles.precision(17);
  angles << records[0].qaoa2_angles.gamma1 << ',' << records[0].qaoa2_angles.beta1 << ','
         << records[0].qaoa2_angles.gamma2 << ',' << records[0].qaoa2_angles.beta2;
  const json j =
      first_json_line(run("eval qaoa2 --d 3 --angles " + angles.str()).out);
  CHECK(j["cut_fraction"].get<double>() == doctest::Approx(0.7559).epsilon(5e-4));
}

TEST_CASE("opt qaoa1 leaves the other algorithm columns empty") {
  const RunResult r = run("opt qaoa1 --d-range 2:3");
  CHECK(r.exit_code == 0);
  std::stringstream csv(r.out);
  const auto records = girthcut::parse_sweep_csv(csv);
  REQUIRE(records.size() == 2);
  CHECK(records[0].qaoa1_improvement == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(records[1].qaoa1_improvement == doctest::Approx(0.1925).epsilon(5e-4));
  CHECK(std::isnan(records[0].qaoa2_improvement));
  CHECK(std::isnan(records[0].threshold2_improvement));
}

TEST_CASE("mc verification handles graphs beyond the enumeration cap") {
  const auto dir = scratch_dir();
  const auto path = dir / "c30.txt";
  {
    std::ofstream out(path);
    out << "# thirty-cycle\n";
    for (int i = 0; i < 30; ++i) out << i << ' ' << (i + 1) % 30 << '\n';
  }
  const RunResult r = run("verify mc --graph file:" + path.string() +
                          " --tau 2,2 --trials 200000 --seed 5");
  CHECK(r.exit_code == 0);
}

TEST_CASE("opt threshold --free-taus fills tau pairs") {
  const RunResult r = run("opt threshold --d-range 2:3 --free-taus");
  CHECK(r.exit_code == 0);
  std::stringstream csv(r.out);
  const auto records = girthcut::parse_sweep_csv(csv);
  REQUIRE(records.size() == 2);
  CHECK(records[0].threshold2_tau1 == 2);
  CHECK(records[0].threshold2_tau2 == 2);
  CHECK(records[1].threshold2_tau1 == 2);
  CHECK(records[1].threshold2_tau2 == 3);
  CHECK(records[1].threshold2_improvement == doctest::Approx(0.24609375).epsilon(1e-12));
}

TEST_CASE("opt all sets the winner column") {
  const RunResult r = run("opt all --d-range 2:2 --starts 16 --seed 1");
  CHECK(r.exit_code == 0);
  std::stringstream csv(r.out);
  const auto records = girthcut::parse_sweep_csv(csv);
  REQUIRE(records.size() == 1);
  REQUIRE(records[0].winner.has_value());
  CHECK(*records[0].winner == girthcut::SweepWinner::qaoa2);  // 0.3333 vs 0.3125
}

TEST_CASE("cached and uncached sweeps are byte-identical") {
  const auto dir = scratch_dir();
  const auto cold = dir / "cold.csv";
  const auto warm = dir / "warm.csv";
  const auto plain = dir / "plain.csv";
  const auto cache = dir / "cache.jsonl";
  fs::remove(cache);

  const std::string common = "opt all --d-range 2:4 --starts 8 --seed 3 ";
  CHECK(run(common + "--cache " + cache.string() + " --out " + cold.string()).exit_code == 0);
  const RunResult warm_run =
      run(common + "--cache " + cache.string() + " --out " + warm.string());
  CHECK(warm_run.exit_code == 0);
  CHECK(warm_run.err.find("cache hits 3/3") != std::string::npos);
  CHECK(run(common + "--out " + plain.string()).exit_code == 0);

  const std::string cold_bytes = slurp(cold);
  CHECK(cold_bytes == slurp(warm));
  CHECK(cold_bytes == slurp(plain));
  CHECK(!cold_bytes.empty());
}

TEST_CASE("GIRTHCUT_CACHE environment override populates the cache") {
  const auto dir = scratch_dir();
  const auto cache = dir / "env_cache.jsonl";
  fs::remove(cache);
  const std::string prefix = "GIRTHCUT_CACHE=" + cache.string() + " ";
  const auto dev_null = std::string(" > /dev/null 2> /dev/null");
  const int raw = std::system((prefix + GIRTHCUT_BIN +
                               " opt threshold --d-range 2:2 --free-taus" + dev_null)
                                  .c_str());
  CHECK(WEXITSTATUS(raw) == 0);
  CHECK(fs::exists(cache));
  const RunResult warm = run("opt threshold --d-range 2:2 --free-taus --cache " +
                             cache.string());
  CHECK(warm.err.find("cache hits 1/1") != std::string::npos);
}

TEST_CASE("compare emits scaled-b columns with the expected header") {
  const RunResult r = run("compare --d-range 2:3 --starts 16 --seed 1");
  CHECK(r.exit_code == 0);
  std::stringstream lines(r.out);
  std::string header;
  REQUIRE(std::getline(lines, header));
  CHECK(header == girthcut::compare_csv_header());
  std::string row;
  int rows = 0;
  while (std::getline(lines, row)) {
    if (row.empty()) continue;
    ++rows;
    std::stringstream cells(row);
    std::string cell;
    int count = 0;
    while (std::getline(cells, cell, ',')) {
      CHECK(!cell.empty());
      ++count;
    }
    CHECK(count == 5);
  }
  CHECK(rows == 2);
}

TEST_CASE("verify reductions passes") {
  const RunResult r = run("verify reductions");
  CHECK(r.exit_code == 0);
  const json summary = first_json_line(r.out);
  CHECK(summary["suite"] == "reductions");
  CHECK(summary["failures"].get<int>() == 0);
}

TEST_CASE("verify oracle suites pass on girth-6 graphs") {
  const RunResult hw = run("verify oracle-qaoa --graph heawood --tol 1e-9");
  CHECK(hw.exit_code == 0);
  const RunResult c8 = run("verify oracle-threshold --graph cycle:8");
  CHECK(c8.exit_code == 0);
}

TEST_CASE("verify refuses girth-5 graphs through the gate") {
  const RunResult r = run("verify oracle-qaoa --graph cycle:5");
  CHECK(r.exit_code == 1);
  const json failure = first_json_line(r.out);
  CHECK(failure["check"] == "girth-gate");
  CHECK(failure["girth"].get<int>() == 5);
}

TEST_CASE("verify mc within four standard errors") {
  const RunResult r = run("verify mc --graph heawood --tau 2,3 --trials 200000 --seed 1");
  CHECK(r.exit_code == 0);
}
