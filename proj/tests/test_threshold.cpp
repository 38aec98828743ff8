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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "girthcut/numerics.hpp"
#include "girthcut/random.hpp"
#include "girthcut/threshold.hpp"

using namespace girthcut;

namespace {

// Test-only oracle: the same expectations via plain double sums over (l, r),
// no convolution collapse, pmfs from first principles.
double z2_sum_literal(int n, int tau1, int tau2, int a_sign, int b_sign, int k) {
  const NeighborStepStats st = neighbor_step_stats(n, tau1);
  double total = 0.0;
  for (int l = 0; l <= k; ++l)
    for (int r = 0; r <= n - k; ++r)
      total += bernoulli_pmf(st.p_plus, k, l) * bernoulli_pmf(st.p_minus, n - k, r) *
               q2_count(l, r, a_sign, b_sign, n, tau2);
  return total;
}

double correlation2_literal(int degree, int tau1, int tau2) {
  const int n = degree - 1;
  auto q1 = [&](int c) { return q_threshold(c, tau1); };
  auto z2 = [&](int k, int z1, int z0, int zother) {
    return z1 * z2_sum_literal(n, tau1, tau2, z1 * z0, z1 * zother, k);
  };
  double total = 0.0;
  for (int k = 0; k <= n; ++k)
    for (int u = 0; u <= n; ++u) {
      const double w = binom_pmf(n, k) * binom_pmf(n, u);
      const double equal = z2(k, q1(k + 1), +1, q1(u + 1)) * z2(u, q1(u + 1), +1, q1(k + 1));
      const double unequal = z2(k, q1(k), +1, -q1(u)) * z2(u, -q1(u), -1, q1(k));
      total += w * 0.5 * (equal + unequal);
    }
  return total;
}

}  // namespace

TEST_CASE("q_threshold basics") {
  CHECK(q_threshold(3, 3) == -1);
  CHECK(q_threshold(2, 3) == +1);
  CHECK(q_threshold(0, 0) == -1);  // always-flip edge case
  CHECK(q_threshold(100, 101) == +1);
}

TEST_CASE("neighbor_step_stats hand cases") {
  const NeighborStepStats a = neighbor_step_stats(1, 2);
  CHECK(a.z1_plus == doctest::Approx(0.0));
  CHECK(a.p_plus == doctest::Approx(0.5));
  CHECK(a.z1_minus == doctest::Approx(-1.0));
  CHECK(a.p_minus == doctest::Approx(0.0));

  for (int n : {0, 1, 3, 10}) {
    const NeighborStepStats never = neighbor_step_stats(n, n + 2);
    CHECK(never.z1_plus == doctest::Approx(1.0));
    CHECK(never.p_plus == doctest::Approx(1.0));

    const NeighborStepStats always = neighbor_step_stats(n, 0);
    CHECK(always.z1_plus == doctest::Approx(-1.0));
    CHECK(always.p_plus == doctest::Approx(0.0));
    CHECK(always.z1_minus == doctest::Approx(1.0));
    CHECK(always.p_minus == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(neighbor_step_stats(-1, 0), std::domain_error);
}

TEST_CASE("neighbor_step_stats probability identity") {
  SplitMix64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const int n = static_cast<int>(rng.next() % 200);
    const int tau = static_cast<int>(rng.next() % (n + 3));
    const NeighborStepStats st = neighbor_step_stats(n, tau);
    CHECK(std::abs(st.p_plus - 0.5 * (1.0 + st.z1_plus)) <= 1e-14);
    CHECK(std::abs(st.p_minus - 0.5 * (1.0 + st.z1_minus)) <= 1e-14);
    CHECK(st.n == n);
  }
}

TEST_CASE("agreement_pmf degenerate and hand values") {
  NeighborStepStats st{};
  st.n = 3;
  st.p_plus = 1.0;
  st.p_minus = 0.0;
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= k; ++l)
      for (int r = 0; r <= 3 - k; ++r)
        CHECK(agreement_pmf(k, l, r, st) == ((l == k && r == 0) ? 1.0 : 0.0));

  NeighborStepStats half{};
  half.n = 1;
  half.p_plus = 0.5;
  half.p_minus = 0.0;
  CHECK(agreement_pmf(1, 1, 0, half) == doctest::Approx(0.5));

  CHECK_THROWS_AS(agreement_pmf(4, 0, 0, st), std::domain_error);
  CHECK_THROWS_AS(agreement_pmf(2, 3, 0, st), std::domain_error);
  CHECK_THROWS_AS(agreement_pmf(2, 0, 2, st), std::domain_error);
}

TEST_CASE("agreement_pmf normalizes for every k") {
  for (const int n : {0, 1, 2, 5, 17, 100, 500}) {
    const int k_stride = n > 100 ? 13 : 1;  // full sweep is O(n^3) per tau
    for (const int tau : {0, 1, n / 2 + 1, n + 1, n + 2}) {
      const NeighborStepStats st = neighbor_step_stats(n, tau);
      for (int k = 0; k <= n; k += k_stride) {
        double total = 0.0;
        for (int l = 0; l <= k; ++l)
          for (int r = 0; r <= n - k; ++r) total += agreement_pmf(k, l, r, st);
        CHECK(std::abs(total - 1.0) <= 1e-12);
      }
    }
  }
}

TEST_CASE("q2_count cases and literal cross-check") {
  const int n = 6;
  CHECK(q2_count(4, 2, +1, +1, n, n + 2) == +1);  // count n+1 under threshold
  CHECK(q2_count(0, 0, -1, -1, n, n) == -1);      // count n >= n
  // exhaustive comparison with the composed-count expression at n=4, tau2=3
  for (int l = 0; l <= 4; ++l)
    for (int r = 0; l + r <= 4; ++r)
      for (int a : {-1, +1})
        for (int b : {-1, +1}) {
          const int count = (4 - l - r) * (1 - a) / 2 + (l + r) * (1 + a) / 2 + (1 + b) / 2;
          CHECK(q2_count(l, r, a, b, 4, 3) == q_threshold(count, 3));
        }
}

TEST_CASE("z2_table transparent second step is all ones") {
  for (const int n : {0, 1, 4, 9}) {
    const Z2Table t = z2_table(n, (n + 1) / 2 + 1, n + 2);
    for (int b : {-1, +1})
      for (int k = 0; k <= n; ++k) {
        CHECK(t.value(+1, b, k) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(t.value(-1, b, k) == doctest::Approx(1.0).epsilon(1e-12));
      }
  }
}

TEST_CASE("z2_table matches literal double sums") {
  // n=1 hand-scale case plus larger asymmetric ones
  for (const auto& [n, tau1, tau2] : {std::array<int, 3>{1, 2, 2},
                                      std::array<int, 3>{4, 2, 3},
                                      std::array<int, 3>{9, 5, 6},
                                      std::array<int, 3>{17, 9, 10},
                                      std::array<int, 3>{30, 14, 17}}) {
    const Z2Table t = z2_table(n, tau1, tau2);
    for (int a : {-1, +1})
      for (int b : {-1, +1})
        for (int k = 0; k <= n; ++k)
          CHECK(std::abs(t.value(a, b, k) - z2_sum_literal(n, tau1, tau2, a, b, k)) <=
                1e-13);
  }
}

TEST_CASE("z2_table values are averages of signs") {
  SplitMix64 rng(19);
  for (int i = 0; i < 50; ++i) {
    const int n = static_cast<int>(rng.next() % 120);
    const int tau1 = static_cast<int>(rng.next() % (n + 3));
    const int tau2 = static_cast<int>(rng.next() % (n + 3));
    const Z2Table t = z2_table(n, tau1, tau2);
    for (int a : {-1, +1})
      for (int b : {-1, +1})
        for (int k = 0; k <= n; ++k) CHECK(std::abs(t.value(a, b, k)) <= 1.0 + 1e-12);
  }
}

TEST_CASE("correlation2 known values") {
  CHECK(correlation2(2, 2, 2) == doctest::Approx(-0.625).epsilon(1e-12));
  CHECK(correlation2(3, 2, 3) == doctest::Approx(-0.4922).epsilon(2e-4));
  for (const int d : {2, 3, 7, 20}) CHECK(correlation2(d, d + 1, d + 1) == 0.0);
  CHECK_THROWS_AS(correlation2(1, 0, 0), std::domain_error);
  CHECK_THROWS_AS(correlation2(5, -1, 2), std::domain_error);
  CHECK_THROWS_AS(correlation2(5, 2, 7), std::domain_error);
}

TEST_CASE("correlation2 equals a literal transcription") {
  SplitMix64 rng(29);
  for (int i = 0; i < 40; ++i) {
    const int d = 2 + static_cast<int>(rng.next() % 14);
    const int tau1 = static_cast<int>(rng.next() % (d + 2));
    const int tau2 = static_cast<int>(rng.next() % (d + 2));
    CHECK(std::abs(correlation2(d, tau1, tau2) - correlation2_literal(d, tau1, tau2)) <=
          1e-12);
  }
}

TEST_CASE("threshold improvements match published anchor rows") {
  CHECK(threshold2_improvement(2, 2, 2).improvement == doctest::Approx(0.3125).epsilon(1e-12));
  CHECK(threshold1_improvement(2, 2).improvement == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(threshold1_improvement(3, 3).improvement == doctest::Approx(0.1875).epsilon(1e-12));
  CHECK(threshold1_improvement(11, 7).improvement == doctest::Approx(0.0925).epsilon(5e-4));
  CHECK(threshold2_improvement(3, 2, 3).improvement == doctest::Approx(0.2461).epsilon(2e-4));
}

TEST_CASE("threshold1 equals its direct 1-step closed form") {
  // the 1-step correlation factorizes: <Z1 Z1> = (z1_plus^2 - z1_minus^2) / 2
  for (int d = 2; d <= 24; ++d) {
    for (int tau = 0; tau <= d + 1; ++tau) {
      const NeighborStepStats st = neighbor_step_stats(d - 1, tau);
      const double direct = 0.25 * (st.z1_minus * st.z1_minus - st.z1_plus * st.z1_plus);
      CHECK(std::abs(threshold1_improvement(d, tau).improvement - direct) <= 1e-12);
    }
  }
}

TEST_CASE("never-flip and double-flip give exactly zero improvement") {
  for (const int d : {2, 3, 5, 11, 40, 200}) {
    CHECK(threshold2_improvement(d, d + 1, d + 1).improvement == 0.0);
    CHECK(threshold2_improvement(d, 0, 0).improvement == 0.0);
    CHECK(threshold1_improvement(d, d + 1).improvement == 0.0);
  }
}

TEST_CASE("correlation and improvement ranges") {
  SplitMix64 rng(37);
  for (int i = 0; i < 100; ++i) {
    const int d = 2 + static_cast<int>(rng.next() % 80);
    const int tau1 = static_cast<int>(rng.next() % (d + 2));
    const int tau2 = static_cast<int>(rng.next() % (d + 2));
    const double corr = correlation2(d, tau1, tau2);
    CHECK(corr >= -1.0 - 1e-12);
    CHECK(corr <= 1.0 + 1e-12);
    const CutStats s = threshold2_improvement(d, tau1, tau2);
    CHECK(s.improvement >= -0.5 - 1e-12);
    CHECK(s.improvement <= 0.5 + 1e-12);
    CHECK(std::abs(s.cut_fraction - 0.5 - s.improvement) <= 1e-15);
  }
}

TEST_CASE("pmf normalization across the threshold range") {
  for (const int n : {0, 1, 2, 40, 500}) {
    double total = 0.0;
    for (int k = 0; k <= n; ++k) total += binom_pmf(n, k);
    CHECK(std::abs(total - 1.0) <= 1e-12);
  }
}

TEST_CASE("threshold_improvement dispatch") {
  CHECK(threshold_improvement(3, {1, 3, 0}).improvement ==
        threshold1_improvement(3, 3).improvement);
  CHECK(threshold_improvement(3, {2, 2, 3}).improvement ==
        threshold2_improvement(3, 2, 3).improvement);
  CHECK_THROWS_AS(threshold_improvement(3, {4, 1, 1}), std::domain_error);
}
