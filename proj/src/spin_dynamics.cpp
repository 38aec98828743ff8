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

#include "girthcut/spin_dynamics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "girthcut/random.hpp"

namespace girthcut {
namespace {

constexpr long long kChunkTrials = 1 << 16;

struct MaskGraph {
  int vertex_count = 0;
  int words = 0;
  std::vector<std::vector<std::uint64_t>> neighbor_masks;  // [vertex][word]
  std::vector<std::pair<int, int>> edge_list;

  explicit MaskGraph(const Graph& g)
      : vertex_count(g.vertex_count),
        words((g.vertex_count + 63) / 64),
        neighbor_masks(g.vertex_count, std::vector<std::uint64_t>(words, 0)),
        edge_list(g.edges()) {
    for (int v = 0; v < g.vertex_count; ++v)
      for (int w : g.adjacency[v])
        neighbor_masks[v][w / 64] |= std::uint64_t{1} << (w % 64);
  }
};

bool spin_up(const std::vector<std::uint64_t>& spins, int v) {
  return (spins[v / 64] >> (v % 64)) & 1u;
}

int agreeing_neighbors(const MaskGraph& mg, const std::vector<std::uint64_t>& spins, int v) {
  const bool up = spin_up(spins, v);
  int count = 0;
  for (int w = 0; w < mg.words; ++w) {
    const std::uint64_t same = up ? spins[w] : ~spins[w];
    count += std::popcount(mg.neighbor_masks[v][w] & same);
  }
  return count;
}

void step_in_place(const MaskGraph& mg, std::vector<std::uint64_t>& spins,
                   std::vector<std::uint64_t>& scratch, int tau) {
  scratch = spins;
  for (int v = 0; v < mg.vertex_count; ++v)
    if (agreeing_neighbors(mg, spins, v) >= tau)
      scratch[v / 64] ^= std::uint64_t{1} << (v % 64);
  spins.swap(scratch);
}

int cut_size(const MaskGraph& mg, const std::vector<std::uint64_t>& spins) {
  int cut = 0;
  for (const auto& [u, v] : mg.edge_list)
    cut += spin_up(spins, u) != spin_up(spins, v);
  return cut;
}

void check_params(const ThresholdParams& params, int degree, const char* who) {
  if (params.steps != 1 && params.steps != 2)
    throw std::domain_error(std::string(who) + ": steps must be 1 or 2");
  if (params.tau1 < 0 || params.tau1 > degree + 1)
    throw std::domain_error(std::string(who) + ": tau1 out of range");
  if (params.steps == 2 && (params.tau2 < 0 || params.tau2 > degree + 1))
    throw std::domain_error(std::string(who) + ": tau2 out of range");
}

void run_steps(const MaskGraph& mg, std::vector<std::uint64_t>& spins,
               std::vector<std::uint64_t>& scratch, const ThresholdParams& params) {
  step_in_place(mg, spins, scratch, params.tau1);
  if (params.steps == 2) step_in_place(mg, spins, scratch, params.tau2);
}

}  // namespace

std::vector<std::uint64_t> threshold_step(const Graph& g,
                                          const std::vector<std::uint64_t>& spins,
                                          int tau) {
  const MaskGraph mg(g);
  if (static_cast<int>(spins.size()) != mg.words)
    throw std::invalid_argument("threshold_step: spin vector has wrong size");
  std::vector<std::uint64_t> next = spins;
  std::vector<std::uint64_t> scratch;
  step_in_place(mg, next, scratch, tau);
  return next;
}

double enumerate_threshold_exact(const Graph& g, const ThresholdParams& params) {
  const auto degree = g.regular_degree();
  if (!degree) throw std::domain_error("enumerate_threshold_exact: graph must be regular");
  if (g.vertex_count > kMaxEnumerationVertices)
    throw std::length_error("enumerate_threshold_exact: too many vertices to enumerate");
  check_params(params, *degree, "enumerate_threshold_exact");
  const MaskGraph mg(g);
  if (mg.edge_list.empty())
    throw std::domain_error("enumerate_threshold_exact: graph has no edges");

  const std::uint64_t configs = std::uint64_t{1} << g.vertex_count;
  std::uint64_t total_cut = 0;
  std::vector<std::uint64_t> spins(1), scratch(1);
  for (std::uint64_t assignment = 0; assignment < configs; ++assignment) {
    spins[0] = assignment;
    run_steps(mg, spins, scratch, params);
    total_cut += static_cast<std::uint64_t>(cut_size(mg, spins));
  }
  return static_cast<double>(total_cut) /
         (static_cast<double>(configs) * static_cast<double>(mg.edge_list.size()));
}

McEstimate mc_threshold(const Graph& g, const ThresholdParams& params,
                        long long trials, std::uint64_t seed, int jobs) {
  if (trials < 1) throw std::domain_error("mc_threshold: trials must be >= 1");
  const auto degree = g.regular_degree();
  const int tau_bound = degree ? *degree : g.vertex_count;
  check_params(params, tau_bound, "mc_threshold");
  const MaskGraph mg(g);
  if (mg.edge_list.empty()) throw std::domain_error("mc_threshold: graph has no edges");

  const long long chunk_count = (trials + kChunkTrials - 1) / kChunkTrials;
  std::vector<double> chunk_sum(chunk_count, 0.0);
  std::vector<double> chunk_sum_sq(chunk_count, 0.0);

  const auto run_chunk = [&](long long c) {
    SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(c));
    const long long begin = c * kChunkTrials;
    const long long end = std::min(trials, begin + kChunkTrials);
    std::vector<std::uint64_t> spins(mg.words), scratch(mg.words);
    double sum = 0.0, sum_sq = 0.0;
    for (long long t = begin; t < end; ++t) {
      for (int w = 0; w < mg.words; ++w) spins[w] = rng.next();
      run_steps(mg, spins, scratch, params);
      const double fraction = static_cast<double>(cut_size(mg, spins)) /
                              static_cast<double>(mg.edge_list.size());
      sum += fraction;
      sum_sq += fraction * fraction;
    }
    chunk_sum[c] = sum;
    chunk_sum_sq[c] = sum_sq;
  };

  if (jobs <= 1 || chunk_count == 1) {
    for (long long c = 0; c < chunk_count; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> workers;
    const int worker_count = static_cast<int>(std::min<long long>(jobs, chunk_count));
    workers.reserve(worker_count);
    for (int w = 0; w < worker_count; ++w)
      workers.emplace_back([&, w] {
        for (long long c = w; c < chunk_count; c += worker_count) run_chunk(c);
      });
    for (auto& t : workers) t.join();
  }

  // Reduce in chunk order so the estimate is bit-identical for any job count.
  double sum = 0.0, sum_sq = 0.0;
  for (long long c = 0; c < chunk_count; ++c) {
    sum += chunk_sum[c];
    sum_sq += chunk_sum_sq[c];
  }

  McEstimate est;
  est.trials = trials;
  est.seed = seed;
  est.mean = sum / static_cast<double>(trials);
  if (trials > 1) {
    const double variance =
        std::max(0.0, (sum_sq - static_cast<double>(trials) * est.mean * est.mean) /
                          static_cast<double>(trials - 1));
    est.std_error = std::sqrt(variance / static_cast<double>(trials));
  }
  return est;
}

}  // namespace girthcut
