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

#include "girthcut/statevector.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "girthcut/numerics.hpp"

namespace girthcut {
namespace {

constexpr double kNormDriftTol = 1e-10;

std::vector<std::uint32_t> neighbor_masks(const Graph& g) {
  std::vector<std::uint32_t> masks(g.vertex_count, 0);
  for (int v = 0; v < g.vertex_count; ++v)
    for (int w : g.adjacency[v]) masks[v] |= std::uint32_t{1} << w;
  return masks;
}

// Cut size of every basis state, counting each cut edge once from its
// 1-side endpoint.
std::vector<std::uint16_t> cut_counts(const Graph& g) {
  const auto masks = neighbor_masks(g);
  const std::size_t dim = std::size_t{1} << g.vertex_count;
  std::vector<std::uint16_t> cuts(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    std::uint32_t ones = static_cast<std::uint32_t>(x);
    int count = 0;
    while (ones != 0) {
      const int v = std::countr_zero(ones);
      ones &= ones - 1;
      count += std::popcount(masks[v] & ~static_cast<std::uint32_t>(x));
    }
    cuts[x] = static_cast<std::uint16_t>(count);
  }
  return cuts;
}

void check_norm(const StateVector& sv, const char* stage) {
  if (std::abs(sv.norm() - 1.0) > kNormDriftTol)
    throw std::runtime_error(std::string("qaoa_evolve: norm drift after ") + stage);
}

// Diagonal phase e^{-i gamma C}: each basis state picks up a phase set by
// its cut size.
void apply_cut_phase(StateVector& sv, const std::vector<std::uint16_t>& cuts,
                     int max_cut, double gamma) {
  std::vector<ComplexScalar> phase(max_cut + 1);
  for (int c = 0; c <= max_cut; ++c)
    phase[c] = std::polar(1.0, -gamma * c);
  for (Eigen::Index x = 0; x < sv.amplitudes.size(); ++x)
    sv.amplitudes(x) *= phase[cuts[static_cast<std::size_t>(x)]];
}

// Product of single-qubit rotations e^{-i beta X}: an in-place butterfly
// per qubit with the 2x2 block [[cos, -i sin], [-i sin, cos]].
void apply_mixer(StateVector& sv, double beta) {
  const double c = std::cos(beta);
  const ComplexScalar minus_i_s(0.0, -std::sin(beta));
  const std::size_t dim = static_cast<std::size_t>(sv.amplitudes.size());
  for (int q = 0; q < sv.qubit_count; ++q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t base = 0; base < dim; base += 2 * bit) {
      for (std::size_t offset = 0; offset < bit; ++offset) {
        const std::size_t i0 = base + offset;
        const std::size_t i1 = i0 | bit;
        const ComplexScalar a0 = sv.amplitudes(static_cast<Eigen::Index>(i0));
        const ComplexScalar a1 = sv.amplitudes(static_cast<Eigen::Index>(i1));
        sv.amplitudes(static_cast<Eigen::Index>(i0)) = c * a0 + minus_i_s * a1;
        sv.amplitudes(static_cast<Eigen::Index>(i1)) = minus_i_s * a0 + c * a1;
      }
    }
  }
}

}  // namespace

StateVector qaoa_evolve(const Graph& g, const Qaoa2Angles& angles, int p) {
  if (p != 1 && p != 2) throw std::domain_error("qaoa_evolve: p must be 1 or 2");
  if (g.vertex_count <= 0) throw std::domain_error("qaoa_evolve: empty graph");
  if (g.vertex_count > kMaxStatevectorQubits)
    throw std::length_error("qaoa_evolve: graph exceeds " +
                            std::to_string(kMaxStatevectorQubits) + " qubits");

  const std::size_t dim = std::size_t{1} << g.vertex_count;
  StateVector sv;
  sv.qubit_count = g.vertex_count;
  sv.amplitudes = Eigen::VectorXcd::Constant(
      static_cast<Eigen::Index>(dim),
      ComplexScalar(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));

  const auto cuts = cut_counts(g);
  const int edge_total = g.edge_count();

  const auto stage = [&](double gamma, double beta) {
    apply_cut_phase(sv, cuts, edge_total, gamma);
    check_norm(sv, "cut phase");
    apply_mixer(sv, beta);
    check_norm(sv, "mixer");
  };
  stage(angles.gamma1, angles.beta1);
  if (p == 2) stage(angles.gamma2, angles.beta2);
  return sv;
}

double edge_cut_probability(const StateVector& state, int u, int v) {
  if (u < 0 || u >= state.qubit_count || v < 0 || v >= state.qubit_count || u == v)
    throw std::domain_error("edge_cut_probability: bad edge");
  double p = 0.0;
  const std::size_t dim = static_cast<std::size_t>(state.amplitudes.size());
  for (std::size_t x = 0; x < dim; ++x)
    if (((x >> u) ^ (x >> v)) & 1u)
      p += std::norm(state.amplitudes(static_cast<Eigen::Index>(x)));
  return p;
}

double qaoa_statevector_cut_fraction(const Graph& g, const Qaoa2Angles& angles, int p) {
  const auto edge_list = g.edges();
  if (edge_list.empty())
    throw std::domain_error("qaoa_statevector_cut_fraction: graph has no edges");
  const StateVector sv = qaoa_evolve(g, angles, p);
  double total = 0.0;
  for (const auto& [u, v] : edge_list) total += edge_cut_probability(sv, u, v);
  return total / static_cast<double>(edge_list.size());
}

}  // namespace girthcut
