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
#include <complex>
#include <stdexcept>

#include "girthcut/numerics.hpp"
#include "girthcut/random.hpp"

using namespace girthcut;

TEST_CASE("log_binomial small exact values") {
  CHECK(log_binomial(5, 2) == doctest::Approx(std::log(10.0)).epsilon(1e-14));
  for (int n : {0, 1, 7, 64, 65, 500, 10000}) CHECK(log_binomial(n, 0) == 0.0);
  CHECK(log_binomial(64, 32) == doctest::Approx(std::log(1832624140942590534.0)).epsilon(1e-14));
}

TEST_CASE("log_binomial summation oracle at n=500") {
  // sum_k C(500,k) 2^-500 must be exactly a probability distribution
  double total = 0.0;
  for (int k = 0; k <= 500; ++k)
    total += std::exp(log_binomial(500, k) - 500 * std::log(2.0));
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("log_binomial rejects bad arguments") {
  CHECK_THROWS_AS(log_binomial(5, -1), std::domain_error);
  CHECK_THROWS_AS(log_binomial(5, 6), std::domain_error);
  CHECK_THROWS_AS(log_binomial(-1, 0), std::domain_error);
  CHECK_THROWS_AS(log_binomial(10001, 3), std::domain_error);
}

TEST_CASE("binom_pmf values and normalization") {
  CHECK(binom_pmf(1, 0) == 0.5);
  CHECK(binom_pmf(4, 2) == 0.375);
  CHECK(binom_pmf(500, 250) ==
        doctest::Approx(std::exp(log_binomial(500, 250) - 500 * std::log(2.0)))
            .epsilon(1e-13));
  for (int n : {0, 1, 2, 7, 64, 65, 500, 10000}) {
    double total = 0.0;
    for (int k = 0; k <= n; ++k) total += binom_pmf(n, k);
    CHECK(std::abs(total - 1.0) <= 1e-12);
  }
  CHECK_THROWS_AS(binom_pmf(4, 5), std::domain_error);
}

TEST_CASE("bernoulli_pmf point masses use 0^0 = 1") {
  CHECK(bernoulli_pmf(0.0, 9, 0) == 1.0);
  CHECK(bernoulli_pmf(0.0, 9, 3) == 0.0);
  CHECK(bernoulli_pmf(1.0, 7, 7) == 1.0);
  CHECK(bernoulli_pmf(1.0, 7, 6) == 0.0);
  CHECK(bernoulli_pmf(0.0, 0, 0) == 1.0);
  CHECK(bernoulli_pmf(0.5, 4, 2) == 0.375);
}

TEST_CASE("bernoulli_pmf normalizes for random p") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.next() % 501);
    const double p = rng.next_double();
    double total = 0.0;
    for (int l = 0; l <= n; ++l) total += bernoulli_pmf(p, n, l);
    CHECK(std::abs(total - 1.0) <= 1e-12);
  }
  CHECK_THROWS_AS(bernoulli_pmf(1.5, 4, 2), std::domain_error);
  CHECK_THROWS_AS(bernoulli_pmf(-0.1, 4, 2), std::domain_error);
}

TEST_CASE("cpow_int basics") {
  const ComplexScalar i(0.0, 1.0);
  CHECK(cpow_int(i, 2) == ComplexScalar(-1.0, 0.0));
  CHECK(cpow_int(ComplexScalar(3.7, -0.2), 0) == ComplexScalar(1.0, 0.0));
}

TEST_CASE("cpow_int matches repeated multiplication") {
  const ComplexScalar z(0.3, 0.4);
  ComplexScalar slow(1.0, 0.0);
  for (int k = 0; k < 7; ++k) slow *= z;
  const ComplexScalar fast = cpow_int(z, 7);
  CHECK(std::abs(fast - slow) <= 1e-14 * std::abs(slow));
}

TEST_CASE("cpow_int exponent additivity") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const ComplexScalar z(rng.next_in(-1.4, 1.4), rng.next_in(-1.4, 1.4));
    const unsigned a = static_cast<unsigned>(rng.next() % 51);
    const unsigned b = static_cast<unsigned>(rng.next() % 50);
    const ComplexScalar split = cpow_int(z, a) * cpow_int(z, b);
    const ComplexScalar whole = cpow_int(z, a + b);
    CHECK(std::abs(split - whole) <= 1e-12 * (1.0 + std::abs(whole)));
  }
}
