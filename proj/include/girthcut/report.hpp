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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include <json.hpp>

#include "girthcut/optimize.hpp"

namespace girthcut {

// Stamped into cache keys so formula or optimizer changes invalidate
// previously cached results.
inline constexpr std::string_view kCodeVersion = "girthcut-1.0.0";

/// Shortest decimal with at most 12 significant digits; parsing it back and
/// re-encoding is idempotent. NaN encodes as the empty field.
std::string format_sig12(double v);

/// Inverse of format_sig12 for one CSV cell; empty -> NaN.
double parse_csv_number(const std::string& cell);

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRecord& record);
std::vector<SweepRecord> parse_sweep_csv(std::istream& in);

std::string compare_csv_header();
std::string compare_csv_row(int degree, double b_qaoa1, double b_qaoa2,
                            double b_thr1, double b_thr2);

nlohmann::json cut_stats_json(const CutStats& stats);

/// Append-only JSON-lines result cache. Keys are canonicalized JSON objects
/// (sorted keys) including kCodeVersion; the stored value is returned
/// bit-identical on a hit. An empty path disables the cache.
class ResultCache {
 public:
  ResultCache() = default;
  explicit ResultCache(std::string path);

  bool enabled() const { return !path_.empty(); }
  std::optional<nlohmann::json> lookup(const nlohmann::json& key) const;
  void store(const nlohmann::json& key, const nlohmann::json& value);

 private:
  std::string path_;
  std::unordered_map<std::string, nlohmann::json> entries_;
};

}  // namespace girthcut
