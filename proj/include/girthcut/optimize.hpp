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
#include <optional>
#include <utility>
#include <vector>

#include "girthcut/qaoa.hpp"
#include "girthcut/threshold.hpp"

namespace girthcut {

struct QaoaOpt {
  Qaoa2Angles angles;
  CutStats stats;
  int starts_used = 0;
  bool converged = false;
};

/// Integer search range for threshold optimization. The full range
/// [0, D+1] is used when D <= 60 or when explicit_range is set; otherwise
/// tau runs over [D/2 + k_min sqrt(D), D/2 + k_max sqrt(D)], where the
/// defaults narrow from (0.3, 0.6) to (0.35, 0.52) above D = 150 because the
/// optimum concentrates near D/2 + 0.4 sqrt(D).
struct TauWindow {
  double k_min = 0.3;
  double k_max = 0.6;
  std::optional<std::pair<int, int>> explicit_range;

  static TauWindow default_for_degree(int degree) {
    TauWindow w;
    if (degree > 150) {
      w.k_min = 0.35;
      w.k_max = 0.52;
    }
    return w;
  }
};

struct ThresholdOpt {
  ThresholdParams params;
  CutStats stats;
  int candidates_evaluated = 0;
  // Set when a windowed search ends on the window edge; the window was
  // probably too narrow and the result may not be the true optimum.
  bool window_boundary_hit = false;
};

/// Maximizes f1 over (gamma, beta). beta is analytic (sin 4 beta = 1, i.e.
/// beta = pi/8); gamma by 1-D golden-section search. The result is returned
/// as depth-2 angles with a zero second stage, under which f2 reduces to f1.
QaoaOpt optimize_qaoa1(int degree);

/// Multistart bounded Nelder-Mead on f2 over gamma_i in (0, pi),
/// beta_i in (0, pi/4]. Start 0 extends the depth-1 optimum as
/// (gamma*, beta*, 0+, 0+); the rest are drawn from substream(seed, start),
/// so results are deterministic and best-so-far is monotone in starts.
QaoaOpt optimize_qaoa2(int degree, int starts = 64, std::uint64_t seed = 1);

/// Exhaustive integer threshold search over the window (diagonal only when
/// equal_taus). Ties break toward lexicographically smaller (tau1, tau2).
ThresholdOpt optimize_threshold(int degree, int steps, bool equal_taus,
                                const TauWindow& window);
ThresholdOpt optimize_threshold(int degree, int steps, bool equal_taus);

enum class SweepWinner { qaoa2, threshold2, tie };

struct SweepRecord {
  int degree = 0;
  double qaoa1_improvement = 0.0;
  double qaoa2_improvement = 0.0;
  double threshold1_improvement = 0.0;
  double threshold2_improvement = 0.0;
  Qaoa2Angles qaoa2_angles;
  int threshold1_tau = 0;
  int threshold2_tau1 = 0;
  int threshold2_tau2 = 0;
  double b_qaoa2 = 0.0;
  double b_threshold2 = 0.0;
  std::optional<SweepWinner> winner;
  // Set when a windowed tau search ended on the window edge (see
  // ThresholdOpt::window_boundary_hit); operational warning, not CSV data.
  bool threshold_window_warning = false;
};

struct SweepConfig {
  int starts = 64;
  std::uint64_t seed = 1;

  enum class TauMode { automatic, equal_only, free_pairs };
  TauMode tau_mode = TauMode::automatic;  // automatic: free pairs for D < 50
  int free_tau_degree_cap = 50;
  std::optional<TauWindow> window;  // override for both threshold searches

  bool with_qaoa1 = true;
  bool with_qaoa2 = true;
  bool with_threshold1 = true;
  bool with_threshold2 = true;

  int jobs = 1;
};

/// One record per degree in [d_min, d_max], parallelized over degrees when
/// jobs > 1; records are returned in ascending degree order either way.
/// Fields of disabled algorithms are NaN and winner is only set when both
/// qaoa2 and threshold2 ran (tie below a 1e-9 improvement gap).
std::vector<SweepRecord> compare_sweep(int d_min, int d_max,
                                       const SweepConfig& config = {});

}  // namespace girthcut
