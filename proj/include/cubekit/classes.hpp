#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "cubekit/convexity.hpp"
#include "cubekit/graph.hpp"
#include "cubekit/theta.hpp"

namespace cubekit {

struct MedianCheck {
  bool median = true;
  // First triple u < v < w (index order) whose three intervals do not meet
  // in exactly one vertex, with the size of that intersection.
  std::optional<std::array<Vertex, 3>> witness;
  int witness_intersection = 0;
  // Above 512 vertices only a seeded sample of triples is checked, so a
  // positive answer is not a proof.
  bool sampled = false;

  explicit operator bool() const { return median; }
};

// Exact triple check over precomputed interval bit-strings; the outer loop
// runs on OpenMP threads. Disconnected graphs are not median.
MedianCheck is_median(const Graph& g, const DistanceMatrix& d);

struct USetCheck {
  bool holds = true;
  // Directed edge (u, v) whose U_uv fails the predicate.
  std::optional<std::pair<Vertex, Vertex>> witness;

  explicit operator bool() const { return holds; }
};

// Every U_uv, U_vu induces a connected subgraph. Throws NOT_PARTIAL_CUBE if
// tp does not cover g's edges.
USetCheck is_semi_median(const Graph& g, const DistanceMatrix& d, const ThetaPartition& tp);
// Every U_uv, U_vu induces an isometric subgraph.
USetCheck is_almost_median(const Graph& g, const DistanceMatrix& d, const ThetaPartition& tp);
// Every convex cycle is a 4-cycle (vacuous for an empty set).
bool is_almost_median_via_cycles(const ConvexCycleSet& ccs);

struct TilingCheck {
  bool tiled = false;
  int four_cycles = 0;
  int rank = 0;                // GF(2) rank of the 4-cycle edge vectors
  int cycle_space_dimension = 0;

  explicit operator bool() const { return tiled; }
};

// The 4-cycles span the whole cycle space over GF(2). Vacuous for forests.
TilingCheck is_tiled(const Graph& g, const DistanceMatrix& d);

// Flags for the chain hypercube ⊆ median ⊆ almost-median ⊆ tiled ⊆
// semi-median ⊆ partial cube. Every flag except partial_cube and median is
// false outside partial cubes; `tiled` here means a tiled partial cube.
struct ClassMembershipReport {
  bool partial_cube = false;
  bool semi_median = false;
  bool tiled = false;
  bool almost_median = false;
  bool almost_median_via_cycles = false;
  bool median = false;
  bool hypercube = false;

  Recognition recognition;
  std::optional<ConvexCycleSet> convex_cycles;
  USetCheck semi_median_check;
  USetCheck almost_median_check;
  TilingCheck tiling;
  MedianCheck median_check;
  std::optional<Cycle> non_square_convex_cycle;
};

// Computes every flag independently; no consistency checks.
ClassMembershipReport class_membership(const Graph& g, const DistanceMatrix& d);

// First failed implication of the chain, or disagreement of the two
// almost-median routes, as a description.
std::optional<std::string> find_chain_violation(const ClassMembershipReport& r);

// class_membership followed by find_chain_violation; a violation throws
// INTERNAL_THEOREM_VIOLATION.
ClassMembershipReport class_report(const Graph& g);
ClassMembershipReport class_report(const Graph& g, const DistanceMatrix& d);

}  // namespace cubekit
