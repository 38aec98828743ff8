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

#include <cstdint>

namespace girthcut {

/// SplitMix64: tiny, fast, platform-independent generator. Used everywhere
/// reproducibility across runs and machines matters (multistart draws,
/// Monte-Carlo substreams, randomized test points).
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }
};

/// Decorrelated substream for (seed, index): the index is pushed through the
/// SplitMix64 output mixer before combining with the hashed seed, so distinct
/// streams start at pseudo-random state offsets instead of adjacent ones and
/// do not overlap in practice.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 seeder(seed);
  const std::uint64_t base = seeder.next();
  SplitMix64 indexer(index + 0x632BE59BD9B4E019ULL);
  SplitMix64 s;
  s.state = base ^ indexer.next();
  return s;
}

}  // namespace girthcut
