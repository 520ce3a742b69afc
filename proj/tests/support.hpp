#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <doctest.h>

#include "cubekit/graph.hpp"

namespace cubekit::test {

inline Vertex by_name(const Graph& g, const std::string& name) {
  const auto& names = g.names();
  auto it = std::find(names.begin(), names.end(), name);
  REQUIRE_MESSAGE(it != names.end(), "no vertex named " << name);
  return static_cast<Vertex>(it - names.begin());
}

inline Graph from_pairs(std::vector<std::pair<int, int>> pairs, std::optional<int> n = std::nullopt) {
  return Graph::from_edge_list(pairs, n);
}

// Floyd-Warshall over the adjacency matrix; independent of the BFS kernels.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.vertex_count();
  constexpr int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  for (auto& row : d) {
    for (auto& x : row) {
      if (x == inf) x = kUnreachable;
    }
  }
  return d;
}

}  // namespace cubekit::test
