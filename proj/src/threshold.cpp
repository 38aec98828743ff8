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

#include "girthcut/threshold.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "girthcut/numerics.hpp"

namespace girthcut {
namespace {

void require_tau(int degree, int tau, const char* who) {
  if (tau < 0 || tau > degree + 1)
    throw std::domain_error(std::string(who) + ": threshold out of range [0, D+1]");
}

// Binomial(k, p) pmf rows for k = 0..n, built by the Pascal-style
// recurrence; exact point masses for p in {0, 1}.
std::vector<Eigen::ArrayXd> binomial_rows(int n, double p) {
  std::vector<Eigen::ArrayXd> rows(n + 1);
  rows[0] = Eigen::ArrayXd::Ones(1);
  for (int k = 1; k <= n; ++k) {
    const Eigen::ArrayXd& prev = rows[k - 1];
    Eigen::ArrayXd row(k + 1);
    for (int l = 0; l <= k; ++l) {
      double v = 0.0;
      if (l > 0) v += p * prev(l - 1);
      if (l < k) v += (1.0 - p) * prev(l);
      row(l) = v;
    }
    rows[k] = std::move(row);
  }
  return rows;
}

}  // namespace

int q_threshold(int count, int tau) { return count >= tau ? -1 : 1; }

NeighborStepStats neighbor_step_stats(int n, int tau1) {
  if (n < 0) throw std::domain_error("neighbor_step_stats: n must be >= 0");
  double z_plus = 0.0;
  double z_minus = 0.0;
  for (int m = 0; m <= n; ++m) {
    const double w = binom_pmf(n, m);
    // An initially agreeing neighbor sees its own m agreeing others plus the
    // center vertex; a disagreeing one sees only its m agreeing others.
    z_plus += w * q_threshold(m + 1, tau1);
    z_minus -= w * q_threshold(m, tau1);
  }
  NeighborStepStats stats;
  stats.z1_plus = z_plus;
  stats.z1_minus = z_minus;
  stats.p_plus = std::clamp(0.5 * (1.0 + z_plus), 0.0, 1.0);
  stats.p_minus = std::clamp(0.5 * (1.0 + z_minus), 0.0, 1.0);
  stats.n = n;
  return stats;
}

double agreement_pmf(int k, int l, int r, const NeighborStepStats& stats) {
  if (k < 0 || k > stats.n) throw std::domain_error("agreement_pmf: k out of range");
  if (l < 0 || l > k) throw std::domain_error("agreement_pmf: l out of range");
  if (r < 0 || r > stats.n - k) throw std::domain_error("agreement_pmf: r out of range");
  return bernoulli_pmf(stats.p_plus, k, l) * bernoulli_pmf(stats.p_minus, stats.n - k, r);
}

int q2_count(int l, int r, int a_sign, int b_sign, int n, int tau2) {
  const int s = l + r;
  const int count = (a_sign > 0 ? s : n - s) + (b_sign > 0 ? 1 : 0);
  return q_threshold(count, tau2);
}

Z2Table z2_table(int n, int tau1, int tau2) {
  if (n < 0) throw std::domain_error("z2_table: n must be >= 0");
  require_tau(n + 1, tau1, "z2_table");
  require_tau(n + 1, tau2, "z2_table");

  const NeighborStepStats stats = neighbor_step_stats(n, tau1);
  const std::vector<Eigen::ArrayXd> plus_rows = binomial_rows(n, stats.p_plus);
  const double pm = stats.p_minus;

  Z2Table table;
  table.n = n;
  for (int a_sign : {-1, +1}) {
    for (int b_sign : {-1, +1}) {
      // The vote depends on (l, r) only through s = l + r, so fold the
      // disagreeing-side binomial into g one Bernoulli at a time:
      // G_j(l) = (1-p_minus) G_{j-1}(l) + p_minus G_{j-1}(l+1),
      // then contract with the agreeing-side pmf row at k = n - j.
      Eigen::ArrayXd acc(n + 1);
      for (int s = 0; s <= n; ++s)
        acc(s) = static_cast<double>(q2_count(s, 0, a_sign, b_sign, n, tau2));

      Eigen::ArrayXd out(n + 1);
      out(n) = (plus_rows[n] * acc).sum();
      for (int k = n - 1; k >= 0; --k) {
        const int j = n - k;
        for (int l = 0; l <= n - j; ++l)
          acc(l) = (1.0 - pm) * acc(l) + pm * acc(l + 1);
        out(k) = (plus_rows[k] * acc.head(k + 1)).sum();
      }
      table.planes[Z2Table::plane(a_sign, b_sign)] = std::move(out);
    }
  }
  return table;
}

double correlation2(int degree, int tau1, int tau2) {
  if (degree < 2) throw std::domain_error("correlation2: degree must be >= 2");
  require_tau(degree, tau1, "correlation2");
  require_tau(degree, tau2, "correlation2");

  const int n = degree - 1;
  const Z2Table table = z2_table(n, tau1, tau2);

  Eigen::ArrayXd pn(n + 1);
  for (int k = 0; k <= n; ++k) pn(k) = binom_pmf(n, k);

  double total = 0.0;
  for (int k = 0; k <= n; ++k) {
    for (int u = 0; u <= n; ++u) {
      // Endpoints initially equal: both step-1 spins come from counts that
      // include the partner.
      const int zi1 = q_threshold(k + 1, tau1);
      const int zj1 = q_threshold(u + 1, tau1);
      const int b_eq = zi1 * zj1;
      const double equal_term = zi1 * table.value(zi1, b_eq, k) *
                                zj1 * table.value(zj1, b_eq, u);

      // Endpoints initially unequal (i starts +1, j starts -1).
      const int wi1 = q_threshold(k, tau1);
      const int wj1 = -q_threshold(u, tau1);
      const int a_i = wi1;    // wi1 * z_i0, z_i0 = +1
      const int a_j = -wj1;   // wj1 * z_j0, z_j0 = -1
      const int b_ne = wi1 * wj1;
      const double unequal_term = wi1 * table.value(a_i, b_ne, k) *
                                  wj1 * table.value(a_j, b_ne, u);

      total += pn(k) * pn(u) * 0.5 * (equal_term + unequal_term);
    }
  }
  return total;
}

CutStats threshold2_improvement(int degree, int tau1, int tau2) {
  return cut_stats_from_improvement(degree, -0.5 * correlation2(degree, tau1, tau2));
}

CutStats threshold1_improvement(int degree, int tau) {
  if (degree < 2) throw std::domain_error("threshold1_improvement: degree must be >= 2");
  require_tau(degree, tau, "threshold1_improvement");
  // tau2 = D + 1 never fires, so step 2 is the identity and the 2-step
  // machinery yields the 1-step marginal.
  return threshold2_improvement(degree, tau, degree + 1);
}

CutStats threshold_improvement(int degree, const ThresholdParams& params) {
  if (params.steps == 1) return threshold1_improvement(degree, params.tau1);
  if (params.steps == 2) return threshold2_improvement(degree, params.tau1, params.tau2);
  throw std::domain_error("threshold_improvement: steps must be 1 or 2");
}

}  // namespace girthcut
