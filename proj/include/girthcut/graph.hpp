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

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace girthcut {

/// Simple undirected graph: symmetric adjacency lists, no self-loops, no
/// parallel edges. Build through make_graph or the named constructors so the
/// invariants are enforced.
struct Graph {
  int vertex_count = 0;
  std::vector<std::vector<int>> adjacency;

  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted
  std::optional<int> regular_degree() const;       // nullopt if not regular
};

/// Validates endpoints, rejects self-loops and duplicate edges, sorts
/// adjacency lists.
Graph make_graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list);

/// n-cycle, n >= 3. Girth n.
Graph cycle_graph(int n);

/// The 14-vertex cubic graph of girth 6, from LCF notation [5, -5]^7:
/// a 14-cycle plus chords i -> i+5 for even i (equivalently i -> i-5 for
/// odd i).
Graph heawood_graph();

/// Radius-2 tree around an edge: both endpoints have degree D, every other
/// interior vertex has degree D, leaves have degree 1. Experimental builder
/// for probing how closed forms behave on the exact light cone of an edge.
Graph lightcone_tree(int degree);

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

/// Length of the shortest cycle via per-vertex BFS; kInfiniteGirth for
/// forests.
int girth(const Graph& g);

/// Reads whitespace-separated "u v" integer pairs, 0-indexed, one per line.
/// Lines starting with '#' are comments. Duplicate edges and self-loops are
/// rejected with the offending line number. An empty file yields the
/// 0-vertex graph.
Graph load_edge_list(const std::string& path);

}  // namespace girthcut
