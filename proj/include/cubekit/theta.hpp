#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubekit/graph.hpp"

namespace cubekit {

// Djoković–Winkler classes. Class ids are ordered by the smallest edge id
// they contain, so class 0 holds edge 0.
struct ThetaPartition {
  std::vector<int> class_of;                 // edge id -> class id
  std::vector<std::vector<EdgeId>> classes;  // each sorted by edge id

  int class_count() const { return static_cast<int>(classes.size()); }
};

// uv Θ xy  iff  d(u,x) + d(v,y) != d(u,y) + d(v,x). Requires the endpoints to
// share a component.
bool theta_related(const Graph& g, const DistanceMatrix& d, EdgeId e, EdgeId f);
// Throws NOT_AN_EDGE when either pair is not an edge of g.
bool theta_related(const Graph& g, const DistanceMatrix& d, std::pair<Vertex, Vertex> e,
                   std::pair<Vertex, Vertex> f);

// Row e: the set of edges f with e Θ f, as a bit-string over edge ids. For
// bipartite graphs this is exactly the set of edges crossing the W_uv / W_vu
// cut of e = uv.
std::vector<Bits> theta_relation_rows(const Graph& g, const DistanceMatrix& d);

// e Θ f and f Θ h, yet not e Θ h.
struct TransitivityWitness {
  EdgeId e = 0;
  EdgeId f = 0;
  EdgeId h = 0;
};

enum class ThetaMode {
  kRaw,     // greedy classes; later rows never steal already-assigned edges
  kStrict,  // throws NOT_PARTIAL_CUBE if Θ is not transitive
};

ThetaPartition theta_partition(const Graph& g, const DistanceMatrix& d,
                               ThetaMode mode = ThetaMode::kStrict);

// Exhaustive pairwise diagnosis: the first non-transitive triple in edge-id
// order, if any.
std::optional<TransitivityWitness> find_transitivity_violation(const Graph& g,
                                                              const DistanceMatrix& d);

using Label = Bits;

// Vertex -> bit string embedding into Q_n, n = class count.
//
// Bit i of a label belongs to class i. For class i the directed edge
// one_side[i] = (a, b) marks the 1-side: vertex w has bit i set iff
// d(a, w) < d(b, w). Orientation puts vertex 0 on the 0-side of every class.
struct HypercubeLabeling {
  std::vector<Label> labels;
  std::vector<int> class_bit;
  std::vector<std::pair<Vertex, Vertex>> one_side;

  int dimension() const { return static_cast<int>(class_bit.size()); }
  // Bit 0 first.
  std::string label_string(Vertex v) const;
};

// First pair (u, v) with Hamming(label u, label v) != d(u, v).
std::optional<std::pair<Vertex, Vertex>> find_non_isometric_pair(const HypercubeLabeling& lab,
                                                                  const DistanceMatrix& d);

// Throws LABELING_NOT_ISOMETRIC if the result fails the full Hamming check.
HypercubeLabeling labeling(const Graph& g, const DistanceMatrix& d, const ThetaPartition& tp);

int isometric_dimension(const ThetaPartition& tp);

enum class RecognitionFailure {
  kNone,
  kNotConnected,
  kNotBipartite,
  kThetaNotTransitive,
  kLabelingNotIsometric,
};
std::string_view to_string(RecognitionFailure f);

// Outcome of partial-cube recognition. Positive answers carry the verified
// labeling; negative answers carry exactly the witness matching `failure`.
struct Recognition {
  RecognitionFailure failure = RecognitionFailure::kNone;
  std::optional<ThetaPartition> partition;
  std::optional<HypercubeLabeling> labeling;
  std::vector<Vertex> odd_cycle;
  std::optional<TransitivityWitness> transitivity;
  std::optional<std::pair<Vertex, Vertex>> non_isometric_pair;

  bool is_partial_cube() const { return failure == RecognitionFailure::kNone; }
  explicit operator bool() const { return is_partial_cube(); }
};

Recognition is_partial_cube(const Graph& g, const DistanceMatrix& d);
Recognition is_partial_cube(const Graph& g);

struct HalfSpaces {
  VertexSet w_uv;
  VertexSet w_vu;
  VertexSet u_uv;
  VertexSet u_vu;
  std::vector<EdgeId> class_edges;  // F_uv: the edges crossing the cut
};

// Halfspaces of the directed edge (u, v). Throws NOT_AN_EDGE.
HalfSpaces halfspaces(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v);

// F(v) for every vertex, both as sorted class-id lists and as bit-strings.
class IncidentClassFamily {
 public:
  IncidentClassFamily(const Graph& g, const ThetaPartition& tp);

  const std::vector<int>& classes(Vertex v) const { return lists_[v]; }
  bool contains(Vertex v, int class_id) const {
    return bits_[v].test(static_cast<std::size_t>(class_id));
  }
  const Bits& bits(Vertex v) const { return bits_[v]; }

 private:
  std::vector<std::vector<int>> lists_;
  std::vector<Bits> bits_;
};

std::vector<int> incident_classes(const Graph& g, const ThetaPartition& tp, Vertex v);

}  // namespace cubekit
