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

#include <cstdint>
#include <vector>

#include "girthcut/graph.hpp"
#include "girthcut/threshold.hpp"

namespace girthcut {

inline constexpr int kMaxEnumerationVertices = 24;

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(trials)
  long long trials = 0;
  std::uint64_t seed = 0;
};

/// Spins packed one bit per vertex (1 = spin +1). One synchronous threshold
/// step: every vertex agreeing with >= tau of its neighbors flips, all flips
/// based on the pre-step configuration.
std::vector<std::uint64_t> threshold_step(const Graph& g,
                                          const std::vector<std::uint64_t>& spins,
                                          int tau);

/// Exact expected cut fraction of the 1- or 2-step threshold algorithm,
/// averaged over all 2^V initial assignments. Requires a regular graph
/// (fixed-degree threshold semantics) and V <= 24.
double enumerate_threshold_exact(const Graph& g, const ThresholdParams& params);

/// Monte-Carlo estimate of the expected cut fraction. Deterministic for a
/// fixed seed: trials are split into fixed-size chunks, chunk c draws from
/// substream(seed, c), and chunk results are reduced in index order, so the
/// estimate is independent of the worker count.
McEstimate mc_threshold(const Graph& g, const ThresholdParams& params,
                        long long trials, std::uint64_t seed, int jobs = 1);

}  // namespace girthcut
