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

#include "girthcut/nelder_mead.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace girthcut {

NelderMeadResult nelder_mead_maximize(
    const std::function<double(const Eigen::VectorXd&)>& objective,
    const Eigen::VectorXd& start, const Eigen::VectorXd& lower,
    const Eigen::VectorXd& upper, const NelderMeadOptions& options) {
  const Eigen::Index dim = start.size();
  if (lower.size() != dim || upper.size() != dim)
    throw std::invalid_argument("nelder_mead_maximize: bound size mismatch");
  if ((lower.array() > upper.array()).any())
    throw std::invalid_argument("nelder_mead_maximize: lower exceeds upper");

  const auto clip = [&](Eigen::VectorXd x) -> Eigen::VectorXd {
    return x.cwiseMax(lower).cwiseMin(upper);
  };

  struct Vertex {
    Eigen::VectorXd x;
    double f;
  };
  std::vector<Vertex> simplex;
  simplex.reserve(dim + 1);

  const Eigen::VectorXd x0 = clip(start);
  simplex.push_back({x0, objective(x0)});
  for (Eigen::Index i = 0; i < dim; ++i) {
    double step = options.initial_step_fraction * (upper(i) - lower(i));
    if (step == 0.0) step = options.initial_step_fraction;
    Eigen::VectorXd xi = x0;
    xi(i) += step;
    if (xi(i) > upper(i)) xi(i) = x0(i) - step;
    xi = clip(xi);
    simplex.push_back({xi, objective(xi)});
  }

  const auto by_value_desc = [](const Vertex& a, const Vertex& b) { return a.f > b.f; };
  std::sort(simplex.begin(), simplex.end(), by_value_desc);

  int iterations = 0;
  bool converged = false;
  while (iterations < options.max_iterations) {
    if (simplex.front().f - simplex.back().f <= options.f_tol) {
      converged = true;
      break;
    }
    ++iterations;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      for (std::size_t v = 0; v + 1 < simplex.size(); ++v) centroid(i) += simplex[v].x(i);
    centroid /= static_cast<double>(dim);

    Vertex& worst = simplex.back();
    const double second_worst = simplex[simplex.size() - 2].f;

    const Eigen::VectorXd reflected = clip(centroid + (centroid - worst.x));
    const double f_reflected = objective(reflected);

    bool shrink = false;
    if (f_reflected > simplex.front().f) {
      const Eigen::VectorXd expanded = clip(centroid + 2.0 * (centroid - worst.x));
      const double f_expanded = objective(expanded);
      if (f_expanded > f_reflected)
        worst = {expanded, f_expanded};
      else
        worst = {reflected, f_reflected};
    } else if (f_reflected > second_worst) {
      worst = {reflected, f_reflected};
    } else if (f_reflected > worst.f) {
      const Eigen::VectorXd contracted = clip(centroid + 0.5 * (centroid - worst.x));
      const double f_contracted = objective(contracted);
      if (f_contracted >= f_reflected)
        worst = {contracted, f_contracted};
      else
        shrink = true;
    } else {
      const Eigen::VectorXd contracted = clip(centroid - 0.5 * (centroid - worst.x));
      const double f_contracted = objective(contracted);
      if (f_contracted > worst.f)
        worst = {contracted, f_contracted};
      else
        shrink = true;
    }

    if (shrink) {
      for (std::size_t v = 1; v < simplex.size(); ++v) {
        simplex[v].x = clip(simplex.front().x + 0.5 * (simplex[v].x - simplex.front().x));
        simplex[v].f = objective(simplex[v].x);
      }
    }
    std::sort(simplex.begin(), simplex.end(), by_value_desc);
  }

  NelderMeadResult result;
  result.x = simplex.front().x;
  result.value = simplex.front().f;
  result.iterations = iterations;
  result.converged = converged;
  return result;
}

}  // namespace girthcut
