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

#include <cmath>
#include <complex>

namespace girthcut {

/// A probability-like weight kept on the natural-log scale so quantities
/// such as 2^-n C(n,k) stay representable for large n. -inf encodes zero.
struct LogProb {
  double value;

  double prob() const { return std::exp(value); }
};

using ComplexScalar = std::complex<double>;

inline constexpr int kMaxBinomialN = 10000;

/// ln C(n,k). Exact 64-bit integer binomials up to n = 64, log-gamma above
/// (with a log-product path when min(k, n-k) is small, which keeps at least
/// 12 significant digits everywhere in range).
double log_binomial(int n, int k);

/// Symmetric binomial mass 2^-n C(n,k).
double binom_pmf(int n, int k);

/// Binomial(n, p) mass at l. Uses the 0^0 = 1 convention, so p in {0,1}
/// degenerates to a point mass at 0 or n.
double bernoulli_pmf(double p, int n, int l);

/// z^e by exponentiation by squaring; cpow_int(z, 0) = 1.
ComplexScalar cpow_int(ComplexScalar z, unsigned exponent);

/// Real counterpart of cpow_int, same squaring order.
double rpow_int(double x, unsigned exponent);

}  // namespace girthcut
