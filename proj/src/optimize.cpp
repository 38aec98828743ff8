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

#include "girthcut/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "girthcut/nelder_mead.hpp"
#include "girthcut/numerics.hpp"
#include "girthcut/random.hpp"

namespace girthcut {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBoxEdge = 1e-9;       // keeps the open (0, pi) ends open
constexpr double kSecondStageSeed = 1e-3;
constexpr double kWinnerTieTol = 1e-9;

void require_degree(int degree, const char* who) {
  if (degree < 2) throw std::domain_error(std::string(who) + ": degree must be >= 2");
}

double golden_section_maximize(const std::function<double(double)>& f, double a,
                               double b) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > 1e-14) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

struct TauRange {
  int lo;
  int hi;
  bool windowed;  // true when derived from the k_min/k_max scaling window
};

TauRange resolve_tau_range(int degree, const TauWindow& window) {
  if (window.explicit_range) {
    const auto [lo, hi] = *window.explicit_range;
    const int clo = std::max(lo, 0);
    const int chi = std::min(hi, degree + 1);
    if (clo > chi) throw std::domain_error("optimize_threshold: empty explicit range");
    return {clo, chi, false};
  }
  if (degree <= 60) return {0, degree + 1, false};
  if (!(window.k_min < window.k_max))
    throw std::domain_error("optimize_threshold: window requires k_min < k_max");
  const double root_d = std::sqrt(static_cast<double>(degree));
  const int lo = std::max(0, static_cast<int>(std::ceil(degree / 2.0 + window.k_min * root_d)));
  const int hi = std::min(degree + 1,
                          static_cast<int>(std::floor(degree / 2.0 + window.k_max * root_d)));
  if (lo > hi) throw std::domain_error("optimize_threshold: empty threshold window");
  return {lo, hi, true};
}

}  // namespace

QaoaOpt optimize_qaoa1(int degree) {
  require_degree(degree, "optimize_qaoa1");
  const auto shape = [degree](double gamma) {
    return std::sin(gamma) * rpow_int(std::cos(gamma), degree - 1);
  };
  const double gamma_star = golden_section_maximize(shape, 0.0, 0.5 * kPi);
  const double beta_star = kPi / 8.0;  // sin(4 beta) = 1

  QaoaOpt result;
  result.angles = {gamma_star, beta_star, 0.0, 0.0};
  result.stats = f1(degree, gamma_star, beta_star);
  result.starts_used = 1;
  result.converged = true;
  return result;
}

QaoaOpt optimize_qaoa2(int degree, int starts, std::uint64_t seed) {
  require_degree(degree, "optimize_qaoa2");
  if (starts < 1) throw std::domain_error("optimize_qaoa2: starts must be >= 1");

  Eigen::VectorXd lower(4), upper(4);
  lower << kBoxEdge, kBoxEdge, kBoxEdge, kBoxEdge;
  upper << kPi - kBoxEdge, kPi / 4.0, kPi - kBoxEdge, kPi / 4.0;

  const auto objective = [degree](const Eigen::VectorXd& x) {
    return f2(degree, {x(0), x(1), x(2), x(3)}).improvement;
  };

  const QaoaOpt stage1 = optimize_qaoa1(degree);

  NelderMeadResult best;
  best.value = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < starts; ++s) {
    Eigen::VectorXd x0(4);
    if (s == 0) {
      // Extending the depth-1 optimum with a vanishing second stage keeps
      // the depth-2 result at least as good as depth 1.
      x0 << stage1.angles.gamma1, stage1.angles.beta1, kSecondStageSeed,
          kSecondStageSeed;
    } else {
      SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(s));
      for (int i = 0; i < 4; ++i) x0(i) = rng.next_in(lower(i), upper(i));
    }
    const NelderMeadResult run = nelder_mead_maximize(objective, x0, lower, upper);
    if (run.value > best.value) best = run;
  }

  QaoaOpt result;
  result.angles = {best.x(0), best.x(1), best.x(2), best.x(3)};
  result.stats = f2(degree, result.angles);
  result.starts_used = starts;
  result.converged = best.converged;
  return result;
}

ThresholdOpt optimize_threshold(int degree, int steps, bool equal_taus,
                                const TauWindow& window) {
  require_degree(degree, "optimize_threshold");
  if (steps != 1 && steps != 2)
    throw std::domain_error("optimize_threshold: steps must be 1 or 2");
  const TauRange range = resolve_tau_range(degree, window);

  double best = -std::numeric_limits<double>::infinity();
  int best_tau1 = range.lo;
  int best_tau2 = range.lo;
  int evaluated = 0;

  const auto consider = [&](int tau1, int tau2, double improvement) {
    ++evaluated;
    if (improvement > best) {  // strict: ascending scan keeps the smallest tie
      best = improvement;
      best_tau1 = tau1;
      best_tau2 = tau2;
    }
  };

  if (steps == 1) {
    for (int tau = range.lo; tau <= range.hi; ++tau)
      consider(tau, tau, threshold1_improvement(degree, tau).improvement);
  } else if (equal_taus) {
    for (int tau = range.lo; tau <= range.hi; ++tau)
      consider(tau, tau, threshold2_improvement(degree, tau, tau).improvement);
  } else {
    for (int tau1 = range.lo; tau1 <= range.hi; ++tau1)
      for (int tau2 = range.lo; tau2 <= range.hi; ++tau2)
        consider(tau1, tau2, threshold2_improvement(degree, tau1, tau2).improvement);
  }

  ThresholdOpt result;
  result.params.steps = steps;
  result.params.tau1 = best_tau1;
  result.params.tau2 = steps == 2 ? best_tau2 : 0;
  result.stats = cut_stats_from_improvement(degree, best);
  result.candidates_evaluated = evaluated;
  if (range.windowed) {
    const bool on_edge1 = best_tau1 == range.lo || best_tau1 == range.hi;
    const bool on_edge2 =
        steps == 2 && !equal_taus && (best_tau2 == range.lo || best_tau2 == range.hi);
    result.window_boundary_hit = on_edge1 || on_edge2;
  }
  return result;
}

ThresholdOpt optimize_threshold(int degree, int steps, bool equal_taus) {
  return optimize_threshold(degree, steps, equal_taus,
                            TauWindow::default_for_degree(degree));
}

std::vector<SweepRecord> compare_sweep(int d_min, int d_max, const SweepConfig& config) {
  if (d_min < 2 || d_min > d_max)
    throw std::domain_error("compare_sweep: need 2 <= d_min <= d_max");

  const auto compute = [&config](int degree) {
    constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
    SweepRecord record;
    record.degree = degree;
    record.qaoa1_improvement = kNaN;
    record.qaoa2_improvement = kNaN;
    record.threshold1_improvement = kNaN;
    record.threshold2_improvement = kNaN;
    record.b_qaoa2 = kNaN;
    record.b_threshold2 = kNaN;

    if (config.with_qaoa1)
      record.qaoa1_improvement = optimize_qaoa1(degree).stats.improvement;

    if (config.with_qaoa2) {
      const QaoaOpt q2 = optimize_qaoa2(degree, config.starts, config.seed);
      record.qaoa2_improvement = q2.stats.improvement;
      record.qaoa2_angles = q2.angles;
      record.b_qaoa2 = q2.stats.scaled_b;
    }

    const TauWindow window =
        config.window ? *config.window : TauWindow::default_for_degree(degree);

    if (config.with_threshold1) {
      const ThresholdOpt t1 = optimize_threshold(degree, 1, true, window);
      record.threshold1_improvement = t1.stats.improvement;
      record.threshold1_tau = t1.params.tau1;
      record.threshold_window_warning |= t1.window_boundary_hit;
    }

    if (config.with_threshold2) {
      const bool free_pairs =
          config.tau_mode == SweepConfig::TauMode::free_pairs ||
          (config.tau_mode == SweepConfig::TauMode::automatic &&
           degree < config.free_tau_degree_cap);
      const ThresholdOpt t2 = optimize_threshold(degree, 2, !free_pairs, window);
      record.threshold2_improvement = t2.stats.improvement;
      record.threshold2_tau1 = t2.params.tau1;
      record.threshold2_tau2 = t2.params.tau2;
      record.b_threshold2 = t2.stats.scaled_b;
      record.threshold_window_warning |= t2.window_boundary_hit;
    }

    if (config.with_qaoa2 && config.with_threshold2) {
      const double gap = record.qaoa2_improvement - record.threshold2_improvement;
      if (std::abs(gap) <= kWinnerTieTol)
        record.winner = SweepWinner::tie;
      else
        record.winner = gap > 0 ? SweepWinner::qaoa2 : SweepWinner::threshold2;
    }
    return record;
  };

  const int count = d_max - d_min + 1;
  std::vector<SweepRecord> records(count);
  if (config.jobs <= 1 || count == 1) {
    for (int i = 0; i < count; ++i) records[i] = compute(d_min + i);
  } else {
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const auto worker = [&] {
      while (true) {
        const int i = next.fetch_add(1);
        if (i >= count) break;
        try {
          records[i] = compute(d_min + i);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          break;
        }
      }
    };
    std::vector<std::thread> pool;
    const int workers = std::min(config.jobs, count);
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }
  return records;
}

}  // namespace girthcut
