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

#include "girthcut/stats.hpp"

namespace girthcut {

/// The four parameters of a depth-2 QAOA circuit, in radians. The closed
/// forms below are 2*pi-periodic in each gamma and pi-periodic in each beta,
/// so no range restriction is imposed.
struct Qaoa2Angles {
  double gamma1 = 0.0;
  double beta1 = 0.0;
  double gamma2 = 0.0;
  double beta2 = 0.0;
};

/// Sines and cosines of the angle combinations the closed forms are written
/// in. Satisfies the usual Pythagorean identities plus the double-angle
/// relations cos_2b1 = cos_b1^2 - sin_b1^2, sin_2b1 = 2 cos_b1 sin_b1,
/// cos_g1 = cos_hg1^2 - sin_hg1^2, sin_g1 = 2 cos_hg1 sin_hg1.
struct TrigBundle {
  double cos_2b2, sin_2b2;  // cos/sin(2 beta2)
  double cos_g2, sin_g2;    // cos/sin(gamma2)
  double cos_2b1, sin_2b1;  // cos/sin(2 beta1)
  double cos_g1, sin_g1;    // cos/sin(gamma1)
  double cos_hg1, sin_hg1;  // cos/sin(gamma1 / 2)
  double cos_b1, sin_b1;    // cos/sin(beta1)
};

TrigBundle trig_bundle(const Qaoa2Angles& angles);

/// Expected cut fraction of depth-1 QAOA on a D-regular graph of girth > 5:
/// 1/2 + sin(2 beta) cos(2 beta) sin(gamma) cos^(D-1)(gamma).
CutStats f1(int degree, double gamma, double beta);

/// The z-z correlation block of the depth-2 cut expectation,
/// -2 c^2 r t y^(D-1) z in the shorthand of TrigBundle.
double term_a(int degree, const Qaoa2Angles& angles);

/// The mixed y-z correlation block. Evaluated with complex intermediates;
/// returns the real part and throws if the imaginary residue exceeds
/// 1e-9 * (1 + |real part|), which would indicate an implementation bug
/// since the conjugate-pair structure makes the result real.
double alpha(int degree, double gamma1, double beta1, double gamma2);

/// The y-y correlation block, with the same complex-residue guard as alpha.
double kappa(int degree, double gamma1, double beta1, double gamma2);

/// Expected cut fraction of depth-2 QAOA on a D-regular graph of girth > 5,
/// assembled from the three blocks above. The raw value is reported
/// unclamped.
CutStats f2(int degree, const Qaoa2Angles& angles);

/// Degree-2 specialization of f2 as one expanded polynomial, kept as an
/// independent cross-check of the complex-intermediate route.
CutStats f2_ring(const Qaoa2Angles& angles);

}  // namespace girthcut
