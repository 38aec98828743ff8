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
#include <functional>

namespace girthcut {

struct NelderMeadOptions {
  double f_tol = 1e-12;  // stop when the simplex value spread falls below
  int max_iterations = 2000;
  double initial_step_fraction = 0.05;  // of the box width, per coordinate
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Box-constrained Nelder-Mead ascent. Every candidate vertex is clamped
/// into [lower, upper] before evaluation, so the returned point always lies
/// in the box. converged reports termination by f_tol rather than by the
/// iteration cap.
NelderMeadResult nelder_mead_maximize(
    const std::function<double(const Eigen::VectorXd&)>& objective,
    const Eigen::VectorXd& start, const Eigen::VectorXd& lower,
    const Eigen::VectorXd& upper, const NelderMeadOptions& options = {});

}  // namespace girthcut
