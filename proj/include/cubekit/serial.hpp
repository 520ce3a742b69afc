#pragma once

// Single-threaded reference versions of the OpenMP kernels. They take a
// different route where one exists and are compared against the parallel
// kernels in tests and benchmarks.

#include <vector>

#include "cubekit/classes.hpp"
#include "cubekit/convexity.hpp"
#include "cubekit/graph.hpp"
#include "cubekit/theta.hpp"

namespace cubekit::serial {

DistanceMatrix all_pairs_distances(const Graph& g);
std::vector<Bits> theta_relation_rows(const Graph& g, const DistanceMatrix& d);
// Ordered edge pairs; geodesic uniqueness by path counting.
ConvexCycleSet enumerate_convex_cycles(const Graph& g, const DistanceMatrix& d, const ThetaPartition& tp);
// Direct O(n^4) triple test with no interval table.
MedianCheck is_median(const Graph& g, const DistanceMatrix& d);

}  // namespace cubekit::serial
