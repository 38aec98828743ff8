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

#include <Eigen/Core>
#include <array>

#include "girthcut/stats.hpp"

namespace girthcut {

/// Parameters of the synchronous threshold algorithm: in step i every vertex
/// that agrees with at least tau_i of its D neighbors flips, all flips
/// computed from the pre-step configuration. tau = D+1 means "never flip",
/// tau = 0 means "always flip". tau2 is ignored when steps == 1.
struct ThresholdParams {
  int steps = 2;
  int tau1 = 0;
  int tau2 = 0;
};

/// Step-1 spin statistics of a neighbor of a fixed vertex on the local tree,
/// conditioned on whether the neighbor initially agreed with that vertex.
/// z1_* are mean post-step spins (in the frame where the vertex starts +1),
/// p_* = (1 + z1_*)/2 the matching probabilities of post-step spin +1.
/// n = D - 1 is the number of neighbors a vertex has besides the edge
/// partner under consideration.
struct NeighborStepStats {
  double z1_plus;
  double z1_minus;
  double p_plus;
  double p_minus;
  int n;
};

/// Expected step-2 vote sum S(A, B, k) = sum_{l,r} H(k,l,r) Q(l,r,A,B),
/// for each sign pair (A, B): A = +1 when the vertex kept its initial spin
/// through step 1, B = +1 when the two edge endpoints agree after step 1.
/// The leading step-1 spin factor is applied by the caller.
struct Z2Table {
  int n = 0;
  std::array<Eigen::ArrayXd, 4> planes;  // indexed by plane(A, B), each size n+1

  static int plane(int a_sign, int b_sign) {
    return (a_sign > 0 ? 2 : 0) + (b_sign > 0 ? 1 : 0);
  }
  double value(int a_sign, int b_sign, int k) const {
    return planes[plane(a_sign, b_sign)](k);
  }
};

/// -1 if count >= tau, +1 otherwise.
int q_threshold(int count, int tau);

NeighborStepStats neighbor_step_stats(int n, int tau1);

/// H(k,l,r): probability that after step 1 exactly l of the k initially
/// agreeing neighbors and r of the n-k initially disagreeing neighbors
/// carry the vertex's initial spin.
double agreement_pmf(int k, int l, int r, const NeighborStepStats& stats);

/// Step-2 threshold vote: counts l+r agreeing neighbors when A = +1 and
/// n-l-r when A = -1, adds one for the edge partner when B = +1, and applies
/// the tau2 threshold.
int q2_count(int l, int r, int a_sign, int b_sign, int n, int tau2);

/// Full table of step-2 vote sums. Internally collapses the (l, r) double
/// sum over l + r = s and folds the disagreeing-side binomial in one
/// recurrence per plane, so the whole table costs O(n^2) per plane after an
/// O(n^2) pmf precompute.
Z2Table z2_table(int n, int tau1, int tau2);

/// Exact post-step-2 spin correlation of the two endpoints of an edge of a
/// D-regular graph of girth > 5, averaged over the initially-equal and
/// initially-unequal cases with equal weight. In [-1, 1].
double correlation2(int degree, int tau1, int tau2);

/// Improvement over random assignment of the 2-step algorithm:
/// -correlation2 / 2.
CutStats threshold2_improvement(int degree, int tau1, int tau2);

/// Exact 1-step expectation, realized as the 2-step machinery with a
/// transparent second step (tau2 = D + 1 never flips).
CutStats threshold1_improvement(int degree, int tau);

/// Dispatch on params.steps.
CutStats threshold_improvement(int degree, const ThresholdParams& params);

}  // namespace girthcut
