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

#include "girthcut/qaoa.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "girthcut/numerics.hpp"

namespace girthcut {
namespace {

constexpr double kImagResidueTol = 1e-9;

void require_degree(int degree, const char* who) {
  if (degree < 2) throw std::domain_error(std::string(who) + ": degree must be >= 2");
}

// The closed forms are real by conjugate-pair structure; a nonzero residue
// here means the expression was edited into something that no longer pairs
// up, so fail loudly instead of silently dropping the imaginary part.
double real_part_checked(ComplexScalar v, const char* who) {
  if (std::abs(v.imag()) > kImagResidueTol * (1.0 + std::abs(v.real())))
    throw std::runtime_error(std::string(who) +
                             ": imaginary residue exceeds tolerance, value " +
                             std::to_string(v.imag()));
  return v.real();
}

}  // namespace

TrigBundle trig_bundle(const Qaoa2Angles& a) {
  TrigBundle b;
  b.cos_2b2 = std::cos(2.0 * a.beta2);
  b.sin_2b2 = std::sin(2.0 * a.beta2);
  b.cos_g2 = std::cos(a.gamma2);
  b.sin_g2 = std::sin(a.gamma2);
  b.cos_2b1 = std::cos(2.0 * a.beta1);
  b.sin_2b1 = std::sin(2.0 * a.beta1);
  b.cos_g1 = std::cos(a.gamma1);
  b.sin_g1 = std::sin(a.gamma1);
  b.cos_hg1 = std::cos(0.5 * a.gamma1);
  b.sin_hg1 = std::sin(0.5 * a.gamma1);
  b.cos_b1 = std::cos(a.beta1);
  b.sin_b1 = std::sin(a.beta1);
  return b;
}

CutStats f1(int degree, double gamma, double beta) {
  require_degree(degree, "f1");
  const double improvement = std::sin(2.0 * beta) * std::cos(2.0 * beta) *
                             std::sin(gamma) *
                             rpow_int(std::cos(gamma), degree - 1);
  return cut_stats_from_improvement(degree, improvement);
}

double term_a(int degree, const Qaoa2Angles& angles) {
  require_degree(degree, "term_a");
  const TrigBundle b = trig_bundle(angles);
  const double c = b.cos_2b2, r = b.cos_2b1, t = b.sin_2b1;
  const double y = b.cos_g1, z = b.sin_g1;
  return -2.0 * c * c * r * t * rpow_int(y, degree - 1) * z;
}

double alpha(int degree, double gamma1, double beta1, double gamma2) {
  require_degree(degree, "alpha");
  const TrigBundle b = trig_bundle({gamma1, beta1, gamma2, 0.0});
  const double m = b.cos_g2, n = b.sin_g2, r = b.cos_2b1, t = b.sin_2b1;
  const double y = b.cos_g1, z = b.sin_g1;
  const unsigned e = static_cast<unsigned>(degree - 1);

  const double yz = rpow_int(y, e) * z;  // y^(D-1) z
  const ComplexScalar inner(m, n * t * yz);
  const ComplexScalar lead(m * t * yz, n);
  const ComplexScalar value =
      (1.0 + r) * (-m * r * z - n * y) * rpow_int(m * y - n * r * z, e) +
      (1.0 - r) * (m * r * z - n * y) * rpow_int(m * y + n * r * z, e) +
      t * (lead * cpow_int(inner, e) +
           std::conj(lead) * cpow_int(std::conj(inner), e));
  return real_part_checked(value, "alpha");
}

double kappa(int degree, double gamma1, double beta1, double gamma2) {
  require_degree(degree, "kappa");
  const TrigBundle b = trig_bundle({gamma1, beta1, gamma2, 0.0});
  const double m = b.cos_g2, n = b.sin_g2, r = b.cos_2b1, t = b.sin_2b1;
  const double y = b.cos_g1, z = b.sin_g1;
  const unsigned e = static_cast<unsigned>(degree - 1);

  const double yz = rpow_int(y, e) * z;
  const ComplexScalar inner(m, n * t * yz);
  const double first = (1.0 + r) * rpow_int(m * y - n * r * z, e) -
                       (1.0 - r) * rpow_int(m * y + n * r * z, e);
  const ComplexScalar value =
      first * (cpow_int(inner, e) + cpow_int(std::conj(inner), e));
  return real_part_checked(value, "kappa");
}

CutStats f2(int degree, const Qaoa2Angles& angles) {
  require_degree(degree, "f2");
  const TrigBundle b = trig_bundle(angles);
  const double c = b.cos_2b2, s = b.sin_2b2, t = b.sin_2b1, z = b.sin_g1;

  const double block_a = term_a(degree, angles);
  const double block_b1 =
      0.5 * c * s * alpha(degree, angles.gamma1, angles.beta1, angles.gamma2);
  const double block_e =
      0.5 * s * s * t * z *
      kappa(degree, angles.gamma1, angles.beta1, angles.gamma2);

  const double cut_fraction = 0.5 - 0.5 * (block_a + 2.0 * block_b1 + block_e);
  return cut_stats_from_cut_fraction(degree, cut_fraction);
}

CutStats f2_ring(const Qaoa2Angles& angles) {
  const TrigBundle b = trig_bundle(angles);
  const double c = b.cos_2b2, s = b.sin_2b2, m = b.cos_g2, n = b.sin_g2;
  const double r = b.cos_2b1, t = b.sin_2b1, y = b.cos_g1, z = b.sin_g1;

  const double cut_fraction =
      0.5 + c * c * r * t * y * z - c * s * m * n * (r * r * z * z - y * y) -
      c * s * y * z * (t * t - r * r) * (m * m - n * n) -
      s * s * t * z * m * r * (m * y - n * z);
  return cut_stats_from_cut_fraction(2, cut_fraction);
}

}  // namespace girthcut
