#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cubekit {

using Vertex = int;
using EdgeId = int;

// Canonical undirected edge, always u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

using Bits = boost::dynamic_bitset<std::uint64_t>;

// Membership bit-string over the vertex indices [0, universe).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}

  static VertexSet of(std::size_t universe, std::span<const Vertex> members);
  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  bool contains(Vertex v) const { return bits_.test(static_cast<std::size_t>(v)); }
  void insert(Vertex v) { bits_.set(static_cast<std::size_t>(v)); }
  void erase(Vertex v) { bits_.reset(static_cast<std::size_t>(v)); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool is_subset_of(const VertexSet& other) const { return bits_.is_subset_of(other.bits_); }

  // Members in increasing order.
  std::vector<Vertex> members() const;

  VertexSet& operator&=(const VertexSet& other) {
    bits_ &= other.bits_;
    return *this;
  }
  VertexSet& operator|=(const VertexSet& other) {
    bits_ |= other.bits_;
    return *this;
  }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  const Bits& bits() const { return bits_; }

 private:
  Bits bits_;
};

// Immutable undirected simple graph on dense vertex indices 0..n-1.
//
// Edges are stored in lexicographic order of their canonical (u < v) pairs;
// an EdgeId is a position in that order. Optional vertex names carry the
// original identifiers through to reports.
class Graph {
 public:
  Graph() = default;

  // Duplicate pairs and both orientations of a pair collapse to one edge.
  // Throws REJECT_LOOP on (v, v), REJECT_RANGE on negative indices or on
  // indices >= vertex_count when a count is supplied.
  static Graph from_edge_list(std::span<const std::pair<int, int>> pairs,
                              std::optional<int> vertex_count = std::nullopt);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  // Parallel to neighbors(v): incident_edges(v)[i] joins v and neighbors(v)[i].
  std::span<const EdgeId> incident_edges(Vertex v) const { return incident_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }

  // Name for reports; falls back to the decimal index.
  std::string name(Vertex v) const;
  bool has_names() const { return !names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  Graph with_names(std::vector<std::string> names) const;

  // Same vertex count and edge set; names are ignored.
  bool same_structure(const Graph& other) const {
    return adjacency_.size() == other.adjacency_.size() && edges_ == other.edges_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<Edge> edges_;
  std::vector<std::string> names_;
};

inline constexpr int kUnreachable = -1;

// Dense hop-distance table. Pairs in different components hold kUnreachable;
// at() refuses to hand that sentinel out.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<int> dist) : n_(n), dist_(std::move(dist)) {}

  int size() const { return n_; }
  int operator()(Vertex u, Vertex v) const {
    return dist_[static_cast<std::size_t>(u) * n_ + v];
  }
  // Throws DISCONNECTED_PAIR for unreachable pairs.
  int at(Vertex u, Vertex v) const;
  bool reachable(Vertex u, Vertex v) const { return (*this)(u, v) != kUnreachable; }
  std::span<const int> row(Vertex u) const {
    return {dist_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
  }
  // True for a non-empty graph with every pair reachable.
  bool connected() const;
  int diameter() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<int> dist_;
};

// Single-source BFS; unreachable vertices get kUnreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// One BFS per source, sources distributed over OpenMP threads.
DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

// std::nullopt encodes an infinite girth (acyclic graph).
using Girth = std::optional<int>;
Girth girth(const Graph& g);

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  bool regular = false;
  std::optional<int> k;
};
DegreeProfile degree_profile(const Graph& g);

struct Bipartition {
  bool bipartite = false;
  std::vector<int> color;             // 0/1 per vertex when bipartite
  std::vector<Vertex> odd_cycle;      // closed walk order, when not bipartite
};
Bipartition is_bipartite(const Graph& g);

// I(u, v): vertices on some u,v-geodesic. Throws DISCONNECTED_PAIR.
VertexSet interval(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v);

// Number of distinct u,v-geodesics, saturating at UINT64_MAX.
// Throws DISCONNECTED_PAIR.
std::uint64_t geodesic_count(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v);

// The u,v-geodesic when it is unique, found by walking back from v and
// requiring exactly one closer neighbor at every step.
std::optional<std::vector<Vertex>> unique_geodesic(const Graph& g, const DistanceMatrix& d,
                                                   Vertex u, Vertex v);

// Box product; vertex (a, x) gets index a * |V(h)| + x.
Graph cartesian_product(const Graph& g, const Graph& h);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;  // subgraph index -> host index
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

}  // namespace cubekit
