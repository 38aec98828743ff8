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
#include <complex>

#include "girthcut/graph.hpp"
#include "girthcut/qaoa.hpp"

namespace girthcut {

inline constexpr int kMaxStatevectorQubits = 24;

/// Full 2^V amplitude vector, one qubit per graph vertex (bit v of the basis
/// index is vertex v).
struct StateVector {
  int qubit_count = 0;
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }
};

/// Runs the depth-p QAOA circuit exactly: uniform superposition, then for
/// each stage a diagonal cut-counting phase e^{-i gamma_k C} followed by the
/// product of single-qubit x-rotations e^{-i beta_k X}. p = 1 uses
/// (gamma1, beta1). Norm drift beyond 1e-10 after any stage throws.
StateVector qaoa_evolve(const Graph& g, const Qaoa2Angles& angles, int p);

/// Probability that measuring the state cuts the edge (u, v).
double edge_cut_probability(const StateVector& state, int u, int v);

/// Expected cut fraction sum_(u,v) <C_uv> / |E| from the exact final state.
double qaoa_statevector_cut_fraction(const Graph& g, const Qaoa2Angles& angles, int p);

}  // namespace girthcut
