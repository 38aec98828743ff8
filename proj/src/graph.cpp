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

#include "girthcut/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace girthcut {

int Graph::edge_count() const {
  int half_edges = 0;
  for (const auto& nbrs : adjacency) half_edges += static_cast<int>(nbrs.size());
  return half_edges / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count; ++u)
    for (int v : adjacency[u])
      if (u < v) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> Graph::regular_degree() const {
  if (vertex_count == 0) return std::nullopt;
  const int degree = static_cast<int>(adjacency[0].size());
  for (const auto& nbrs : adjacency)
    if (static_cast<int>(nbrs.size()) != degree) return std::nullopt;
  return degree;
}

Graph make_graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list) {
  if (vertex_count < 0) throw std::invalid_argument("make_graph: negative vertex count");
  Graph g;
  g.vertex_count = vertex_count;
  g.adjacency.resize(vertex_count);
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : edge_list) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw std::invalid_argument("make_graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("make_graph: self-loop");
    const std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second) throw std::invalid_argument("make_graph: duplicate edge");
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::domain_error("cycle_graph: need at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return make_graph(n, edges);
}

Graph heawood_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 14; ++i) edges.emplace_back(i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2) edges.emplace_back(i, (i + 5) % 14);
  return make_graph(14, edges);
}

Graph lightcone_tree(int degree) {
  if (degree < 2) throw std::domain_error("lightcone_tree: degree must be >= 2");
  const int shell = degree - 1;
  std::vector<std::pair<int, int>> edges;
  edges.emplace_back(0, 1);
  int next = 2;
  std::vector<int> interior;
  for (int root : {0, 1}) {
    for (int c = 0; c < shell; ++c) {
      edges.emplace_back(root, next);
      interior.push_back(next);
      ++next;
    }
  }
  for (int mid : interior) {
    for (int c = 0; c < shell; ++c) {
      edges.emplace_back(mid, next);
      ++next;
    }
  }
  return make_graph(next, edges);
}

int girth(const Graph& g) {
  int best = kInfiniteGirth;
  std::vector<int> dist(g.vertex_count);
  std::vector<int> parent(g.vertex_count);
  for (int root = 0; root < g.vertex_count; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> frontier;
    dist[root] = 0;
    frontier.push(root);
    while (!frontier.empty()) {
      const int x = frontier.front();
      frontier.pop();
      if (2 * dist[x] >= best) continue;  // cannot improve from here
      for (int y : g.adjacency[x]) {
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          frontier.push(y);
        } else if (y != parent[x]) {
          // Non-tree edge closes a walk of this length through the root;
          // every such walk contains a cycle no longer than it.
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  return best;
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_edge_list: cannot open " + path);

  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  int max_vertex = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fail = [&](const std::string& msg) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + msg);
    };
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream cells(line);
    long long u = 0, v = 0;
    if (!(cells >> u >> v)) fail("expected two integers");
    std::string extra;
    if (cells >> extra) fail("unexpected trailing token '" + extra + "'");
    if (u < 0 || v < 0) fail("negative vertex index");
    if (u == v) fail("self-loop");
    const std::pair<int, int> key{static_cast<int>(std::min(u, v)),
                                  static_cast<int>(std::max(u, v))};
    if (!seen.insert(key).second) fail("duplicate edge");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_vertex = std::max({max_vertex, static_cast<int>(u), static_cast<int>(v)});
  }
  return make_graph(max_vertex + 1, edges);
}

}  // namespace girthcut
