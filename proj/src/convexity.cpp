#include "cubekit/convexity.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "cubekit/error.hpp"
#include "cubekit/serial.hpp"

namespace cubekit {

Cycle canonical_cycle(std::vector<Vertex> vertices) {
  if (vertices.empty()) return {};
  auto min_it = std::min_element(vertices.begin(), vertices.end());
  std::rotate(vertices.begin(), min_it, vertices.end());
  if (vertices.size() > 2 && vertices.back() < vertices[1]) {
    std::reverse(vertices.begin() + 1, vertices.end());
  }
  return Cycle{std::move(vertices)};
}

void validate_cycle(const Graph& g, const Cycle& c) {
  const int m = c.length();
  if (m < 3) throw Error(ErrorCode::kNotACycle, "a cycle needs at least 3 vertices");
  std::vector<bool> seen(g.vertex_count(), false);
  for (int i = 0; i < m; ++i) {
    Vertex v = c.vertices[i];
    if (v < 0 || v >= g.vertex_count()) {
      throw Error(ErrorCode::kNotACycle, "vertex " + std::to_string(v) + " out of range");
    }
    if (seen[v]) throw Error(ErrorCode::kNotACycle, "vertex " + g.name(v) + " repeats");
    seen[v] = true;
    Vertex w = c.vertices[(i + 1) % m];
    if (w >= 0 && w < g.vertex_count() && !g.adjacent(v, w)) {
      throw Error(ErrorCode::kNotACycle, g.name(v) + " and " + g.name(w) + " are not adjacent");
    }
  }
}

std::vector<int> cycle_classes(const Graph& g, const ThetaPartition& tp, const Cycle& c) {
  validate_cycle(g, c);
  std::vector<int> out;
  const int m = c.length();
  for (int i = 0; i < m; ++i) {
    out.push_back(tp.class_of[*g.edge_id(c.vertices[i], c.vertices[(i + 1) % m])]);
  }
  return out;
}

ConvexCycleSet ConvexCycleSet::from(std::vector<Cycle> cycles) {
  ConvexCycleSet s;
  for (auto& c : cycles) c = canonical_cycle(std::move(c.vertices));
  std::sort(cycles.begin(), cycles.end());
  cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
  for (const auto& c : cycles) ++s.spectrum[c.length()];
  s.cycles = std::move(cycles);
  return s;
}

std::optional<int> ConvexCycleSet::uniform_length() const {
  if (spectrum.size() != 1) return std::nullopt;
  return spectrum.begin()->first;
}

bool is_isometric_set(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
  auto sub = induced_subgraph(g, s);
  if (!is_connected(sub.graph)) {
    throw Error(ErrorCode::kInducedDisconnected, "vertex set does not induce a connected subgraph");
  }
  const int k = sub.graph.vertex_count();
  for (Vertex a = 0; a < k; ++a) {
    auto local = bfs_distances(sub.graph, a);
    for (Vertex b = a + 1; b < k; ++b) {
      if (local[b] != d(sub.to_host[a], sub.to_host[b])) return false;
    }
  }
  return true;
}

ConvexityCheck is_convex_set(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
  auto inside = s.members();
  std::vector<Vertex> outside;
  for (Vertex z = 0; z < g.vertex_count(); ++z) {
    if (!s.contains(z)) outside.push_back(z);
  }
  for (std::size_t i = 0; i < inside.size(); ++i) {
    const Vertex u = inside[i];
    auto du = d.row(u);
    for (std::size_t j = i + 1; j < inside.size(); ++j) {
      const Vertex v = inside[j];
      if (du[v] == kUnreachable) continue;
      auto dv = d.row(v);
      for (Vertex z : outside) {
        if (du[z] != kUnreachable && du[z] + dv[z] == du[v]) {
          return {false, std::array<Vertex, 3>{u, v, z}};
        }
      }
    }
  }
  return {};
}

VertexSet convex_hull(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
  VertexSet hull = s;
  std::vector<Vertex> members = s.members();
  std::vector<Vertex> pending = members;
  while (!pending.empty()) {
    Vertex x = pending.back();
    pending.pop_back();
    auto dx = d.row(x);
    const std::size_t snapshot = members.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      const Vertex y = members[i];
      if (dx[y] == kUnreachable) continue;
      auto dy = d.row(y);
      for (Vertex z = 0; z < g.vertex_count(); ++z) {
        if (!hull.contains(z) && dx[z] != kUnreachable && dx[z] + dy[z] == dx[y]) {
          hull.insert(z);
          members.push_back(z);
          pending.push_back(z);
        }
      }
    }
  }
  return hull;
}

bool is_convex_cycle(const Graph& g, const DistanceMatrix& d, const Cycle& c) {
  validate_cycle(g, c);
  auto s = VertexSet::of(g.vertex_count(), c.vertices);
  int induced_edges = 0;
  for (Vertex v : c.vertices) {
    for (Vertex w : g.neighbors(v)) {
      if (v < w && s.contains(w)) ++induced_edges;
    }
  }
  if (induced_edges != c.length()) return false;
  return is_convex_set(g, d, s).convex;
}

namespace {

void require_partial_cube_shape(const Graph& g, const DistanceMatrix& d, const ThetaPartition& tp) {
  if (!d.connected()) throw Error(ErrorCode::kNotPartialCube, "graph is not connected");
  if (!is_bipartite(g).bipartite) throw Error(ErrorCode::kNotPartialCube, "graph is not bipartite");
  if (static_cast<int>(tp.class_of.size()) != g.edge_count()) {
    throw Error(ErrorCode::kNotPartialCube, "Θ-partition does not match the edge set");
  }
}

// Orient e2 = {a, b} against (u1, v1): returns (u2, v2) with
// d(u1,u2) = d(v1,v2) = d(u1,v2) - 1, or nullopt if no orientation fits.
std::optional<std::pair<Vertex, Vertex>> pair_endpoints(const DistanceMatrix& d, Vertex u1,
                                                        Vertex v1, Edge e2) {
  Vertex u2 = e2.u;
  Vertex v2 = e2.v;
  if (d(u1, u2) != d(u1, v2) - 1) std::swap(u2, v2);
  if (d(u1, u2) != d(u1, v2) - 1 || d(v1, v2) != d(u1, u2)) return std::nullopt;
  return std::pair{u2, v2};
}

std::optional<Cycle> join_arcs(const std::vector<Vertex>& p, const std::vector<Vertex>& q,
                               std::vector<bool>& mark) {
  for (Vertex x : p) mark[x] = true;
  bool disjoint = std::none_of(q.begin(), q.end(), [&](Vertex y) { return mark[y]; });
  for (Vertex x : p) mark[x] = false;
  if (!disjoint) return std::nullopt;
  std::vector<Vertex> cyc = p;
  cyc.insert(cyc.end(), q.rbegin(), q.rend());
  return Cycle{std::move(cyc)};
}

std::vector<Cycle> cycles_of_class(const Graph& g, const DistanceMatrix& d,
                                   const std::vector<EdgeId>& cls) {
  std::vector<Cycle> found;
  std::vector<bool> mark(g.vertex_count(), false);
  for (std::size_t i = 0; i < cls.size(); ++i) {
    const auto [u1, v1] = g.edge(cls[i]);
    for (std::size_t j = i + 1; j < cls.size(); ++j) {
      auto ends = pair_endpoints(d, u1, v1, g.edge(cls[j]));
      if (!ends) continue;
      auto p = unique_geodesic(g, d, u1, ends->first);
      if (!p) continue;
      auto q = unique_geodesic(g, d, v1, ends->second);
      if (!q) continue;
      auto c = join_arcs(*p, *q, mark);
      if (c && is_convex_cycle(g, d, *c)) found.push_back(canonical_cycle(std::move(c->vertices)));
    }
  }
  return found;
}

// Reference route: uniqueness via path counting, the arc read off the
// interval layer by layer.
std::vector<Cycle> cycles_of_class_by_counting(const Graph& g, const DistanceMatrix& d,
                                               const std::vector<EdgeId>& cls) {
  auto arc = [&](Vertex a, Vertex b) -> std::optional<std::vector<Vertex>> {
    if (geodesic_count(g, d, a, b) != 1) return std::nullopt;
    auto members = interval(g, d, a, b).members();
    std::sort(members.begin(), members.end(),
              [&](Vertex x, Vertex y) { return d(a, x) < d(a, y); });
    return members;
  };
  std::vector<Cycle> found;
  std::vector<bool> mark(g.vertex_count(), false);
  for (EdgeId e1 : cls) {
    for (EdgeId e2 : cls) {
      if (e1 == e2) continue;
      const auto [u1, v1] = g.edge(e1);
      auto ends = pair_endpoints(d, u1, v1, g.edge(e2));
      if (!ends) continue;
      auto p = arc(u1, ends->first);
      auto q = arc(v1, ends->second);
      if (!p || !q) continue;
      auto c = join_arcs(*p, *q, mark);
      if (c && is_convex_cycle(g, d, *c)) found.push_back(std::move(*c));
    }
  }
  return found;
}

}  // namespace

ConvexCycleSet enumerate_convex_cycles(const Graph& g, const DistanceMatrix& d,
                                       const ThetaPartition& tp) {
  require_partial_cube_shape(g, d, tp);
  const int k = tp.class_count();
  std::vector<std::vector<Cycle>> per_class(k);
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < k; ++c) per_class[c] = cycles_of_class(g, d, tp.classes[c]);
  std::vector<Cycle> all;
  for (auto& v : per_class) std::move(v.begin(), v.end(), std::back_inserter(all));
  return ConvexCycleSet::from(std::move(all));
}

namespace serial {

ConvexCycleSet enumerate_convex_cycles(const Graph& g, const DistanceMatrix& d,
                                       const ThetaPartition& tp) {
  require_partial_cube_shape(g, d, tp);
  std::vector<Cycle> all;
  for (const auto& cls : tp.classes) {
    auto found = cycles_of_class_by_counting(g, d, cls);
    std::move(found.begin(), found.end(), std::back_inserter(all));
  }
  return ConvexCycleSet::from(std::move(all));
}

}  // namespace serial

int oracle_bound_from_env() {
  if (const char* raw = std::getenv("CUBEKIT_ORACLE_BOUND")) {
    try {
      int v = std::stoi(raw);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultOracleBound;
}

namespace {

class ChordlessSearch {
 public:
  explicit ChordlessSearch(const Graph& g) : g_(g), on_path_(g.vertex_count(), false) {}

  std::vector<Cycle> run() {
    for (Vertex s = 0; s < g_.vertex_count(); ++s) {
      start_ = s;
      path_.assign(1, s);
      on_path_[s] = true;
      extend();
      on_path_[s] = false;
    }
    return std::move(out_);
  }

 private:
  void extend() {
    const Vertex x = path_.back();
    for (Vertex y : g_.neighbors(x)) {
      if (y <= start_ || on_path_[y]) continue;
      bool chord = false;
      bool closes = false;
      for (Vertex w : g_.neighbors(y)) {
        if (w == x) continue;
        if (w == start_) {
          closes = true;
        } else if (on_path_[w]) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (closes) {
        // One direction per cycle: second vertex below the last.
        if (path_[1] < y) {
          std::vector<Vertex> c = path_;
          c.push_back(y);
          out_.push_back(Cycle{std::move(c)});
        }
        continue;
      }
      path_.push_back(y);
      on_path_[y] = true;
      extend();
      on_path_[y] = false;
      path_.pop_back();
    }
  }

  const Graph& g_;
  std::vector<bool> on_path_;
  std::vector<Vertex> path_;
  Vertex start_ = 0;
  std::vector<Cycle> out_;
};

}  // namespace

std::vector<Cycle> chordless_cycles(const Graph& g, int bound) {
  if (g.vertex_count() > bound) {
    throw Error(ErrorCode::kOracleBoundExceeded,
                std::to_string(g.vertex_count()) + " vertices exceed the oracle bound of " +
                    std::to_string(bound));
  }
  return ChordlessSearch(g).run();
}

ConvexCycleSet enumerate_convex_cycles_bruteforce(const Graph& g, const DistanceMatrix& d,
                                                  int bound) {
  std::vector<Cycle> convex;
  for (auto& c : chordless_cycles(g, bound)) {
    if (is_convex_cycle(g, d, c)) convex.push_back(std::move(c));
  }
  return ConvexCycleSet::from(std::move(convex));
}

std::optional<int> length_spectrum_uniform(const ConvexCycleSet& ccs) {
  return ccs.uniform_length();
}

}  // namespace cubekit
