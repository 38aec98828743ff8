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

namespace girthcut {

/// Expected cut quality of an algorithm on a D-regular graph, in the three
/// equivalent encodings used throughout: the cut fraction itself, the
/// improvement over a uniformly random assignment (cut_fraction - 1/2), and
/// the degree-scaled performance b with cut_fraction = 1/2 + b / sqrt(D).
struct CutStats {
  double cut_fraction;
  double improvement;
  double scaled_b;
  int degree;
};

inline CutStats cut_stats_from_improvement(int degree, double improvement) {
  return CutStats{0.5 + improvement, improvement,
                  improvement * std::sqrt(static_cast<double>(degree)), degree};
}

inline CutStats cut_stats_from_cut_fraction(int degree, double cut_fraction) {
  return cut_stats_from_improvement(degree, cut_fraction - 0.5);
}

}  // namespace girthcut
