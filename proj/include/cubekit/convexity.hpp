#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "cubekit/graph.hpp"
#include "cubekit/theta.hpp"

namespace cubekit {

// Vertex sequence in cyclic order. Canonical form starts at the smallest
// vertex and walks toward its smaller cycle neighbor, which is the
// lexicographically least of all rotations and reflections.
struct Cycle {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  auto operator<=>(const Cycle&) const = default;
};

Cycle canonical_cycle(std::vector<Vertex> vertices);

// Throws NOT_A_CYCLE unless c has >= 3 distinct vertices with consecutive
// (and last-to-first) pairs adjacent.
void validate_cycle(const Graph& g, const Cycle& c);

// Θ-class of each edge v_i v_{i+1}, the closing edge last.
std::vector<int> cycle_classes(const Graph& g, const ThetaPartition& tp, const Cycle& c);

struct ConvexCycleSet {
  std::vector<Cycle> cycles;         // canonical, sorted, unique
  std::map<int, int> spectrum;       // length -> count

  static ConvexCycleSet from(std::vector<Cycle> cycles);
  std::optional<int> uniform_length() const;
  friend bool operator==(const ConvexCycleSet&, const ConvexCycleSet&) = default;
};

// Throws INDUCED_DISCONNECTED when s does not induce a connected subgraph.
bool is_isometric_set(const Graph& g, const DistanceMatrix& d, const VertexSet& s);

struct ConvexityCheck {
  bool convex = true;
  // (u, v, z): u, v in s, z on a u,v-geodesic but outside s.
  std::optional<std::array<Vertex, 3>> violation;

  explicit operator bool() const { return convex; }
};

ConvexityCheck is_convex_set(const Graph& g, const DistanceMatrix& d, const VertexSet& s);

// Smallest convex superset: fixed point of interval closure.
VertexSet convex_hull(const Graph& g, const DistanceMatrix& d, const VertexSet& s);

// Convex vertex set and chordless. Throws NOT_A_CYCLE.
bool is_convex_cycle(const Graph& g, const DistanceMatrix& d, const Cycle& c);

// All convex cycles of a partial cube, found from pairs of Θ-related edges
// joined by two vertex-disjoint unique geodesics. Θ-classes are processed in
// parallel; the merged set does not depend on the schedule.
// Throws NOT_PARTIAL_CUBE if g is disconnected, not bipartite, or tp does not
// cover its edges.
ConvexCycleSet enumerate_convex_cycles(const Graph& g, const DistanceMatrix& d,
                                       const ThetaPartition& tp);

inline constexpr int kDefaultOracleBound = 24;

// CUBEKIT_ORACLE_BOUND if set to a positive integer, else kDefaultOracleBound.
int oracle_bound_from_env();

// Every chordless cycle, by DFS from its least vertex. Throws
// ORACLE_BOUND_EXCEEDED above `bound` vertices.
std::vector<Cycle> chordless_cycles(const Graph& g, int bound = kDefaultOracleBound);

// Independent oracle: chordless cycles filtered by is_convex_cycle.
ConvexCycleSet enumerate_convex_cycles_bruteforce(const Graph& g, const DistanceMatrix& d,
                                                  int bound = kDefaultOracleBound);

std::optional<int> length_spectrum_uniform(const ConvexCycleSet& ccs);

}  // namespace cubekit
