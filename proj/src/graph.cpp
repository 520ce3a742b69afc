#include "cubekit/graph.hpp"

#include <algorithm>
#include <limits>

#include "cubekit/error.hpp"
#include "cubekit/serial.hpp"

namespace cubekit {

VertexSet VertexSet::of(std::size_t universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  s.bits_.set();
  return s;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
    out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

Graph Graph::from_edge_list(std::span<const std::pair<int, int>> pairs,
                            std::optional<int> vertex_count) {
  int n = vertex_count.value_or(0);
  if (n < 0) throw Error(ErrorCode::kRejectRange, "negative vertex count");
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0) {
      throw Error(ErrorCode::kRejectRange,
                  "negative vertex index in pair (" + std::to_string(a) + "," +
                      std::to_string(b) + ")");
    }
    if (a == b) {
      throw Error(ErrorCode::kRejectLoop, "self-loop at vertex " + std::to_string(a));
    }
    if (vertex_count && (a >= *vertex_count || b >= *vertex_count)) {
      throw Error(ErrorCode::kRejectRange,
                  "pair (" + std::to_string(a) + "," + std::to_string(b) +
                      ") outside vertex count " + std::to_string(*vertex_count));
    }
    if (!vertex_count) n = std::max({n, a + 1, b + 1});
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.edges_ = std::move(edges);
  g.adjacency_.assign(n, {});
  g.incident_.assign(n, {});
  // neighbors and incident_edges stay aligned: both come from one sorted list.
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> tmp(n);
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges_.size()); ++e) {
    const auto& [u, v] = g.edges_[e];
    tmp[u].push_back({v, e});
    tmp[v].push_back({u, e});
  }
  for (Vertex v = 0; v < n; ++v) {
    std::sort(tmp[v].begin(), tmp[v].end());
    g.adjacency_[v].reserve(tmp[v].size());
    g.incident_[v].reserve(tmp[v].size());
    for (auto [w, e] : tmp[v]) {
      g.adjacency_[v].push_back(w);
      g.incident_[v].push_back(e);
    }
  }
  return g;
}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return std::nullopt;
  const auto& adj = adjacency_[u];
  auto it = std::lower_bound(adj.begin(), adj.end(), v);
  if (it == adj.end() || *it != v) return std::nullopt;
  return incident_[u][static_cast<std::size_t>(it - adj.begin())];
}

std::string Graph::name(Vertex v) const {
  if (static_cast<std::size_t>(v) < names_.size()) return names_[v];
  return std::to_string(v);
}

Graph Graph::with_names(std::vector<std::string> names) const {
  if (static_cast<int>(names.size()) != vertex_count()) {
    throw Error(ErrorCode::kRejectRange, "name table size differs from vertex count");
  }
  Graph g = *this;
  g.names_ = std::move(names);
  return g;
}

int DistanceMatrix::at(Vertex u, Vertex v) const {
  int x = (*this)(u, v);
  if (x == kUnreachable) {
    throw Error(ErrorCode::kDisconnectedPair,
                "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                    " lie in different components");
  }
  return x;
}

bool DistanceMatrix::connected() const {
  if (n_ == 0) return false;
  return std::none_of(dist_.begin(), dist_.end(), [](int x) { return x == kUnreachable; });
}

int DistanceMatrix::diameter() const {
  int best = 0;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, at(u, v));
  }
  return best;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

namespace {

void fill_row(const Graph& g, Vertex s, std::vector<int>& out) {
  auto row = bfs_distances(g, s);
  std::copy(row.begin(), row.end(), out.begin() + static_cast<std::ptrdiff_t>(s) * g.vertex_count());
}

}  // namespace

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> dist(static_cast<std::size_t>(n) * n);
#pragma omp parallel for schedule(dynamic, 8)
  for (Vertex s = 0; s < n; ++s) fill_row(g, s, dist);
  return DistanceMatrix(n, std::move(dist));
}

namespace serial {

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> dist(static_cast<std::size_t>(n) * n);
  for (Vertex s = 0; s < n; ++s) fill_row(g, s, dist);
  return DistanceMatrix(n, std::move(dist));
}

}  // namespace serial

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

Girth girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    queue.clear();
    dist[root] = 0;
    parent[root] = -1;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      if (2 * dist[x] >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] == kUnreachable) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (y != parent[x]) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  if (g.vertex_count() == 0) return p;
  p.min_degree = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    p.min_degree = std::min(p.min_degree, g.degree(v));
    p.max_degree = std::max(p.max_degree, g.degree(v));
  }
  p.regular = p.min_degree == p.max_degree;
  if (p.regular) p.k = p.min_degree;
  return p;
}

Bipartition is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  Bipartition out;
  std::vector<int> depth(n, kUnreachable);
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (depth[root] != kUnreachable) continue;
    depth[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) {
        if (depth[y] == kUnreachable) {
          depth[y] = depth[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if ((depth[y] - depth[x]) % 2 == 0) {
          // Same BFS level: climb to the common ancestor.
          std::vector<Vertex> left{x};
          std::vector<Vertex> right{y};
          Vertex a = x;
          Vertex b = y;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          out.odd_cycle = std::move(left);
          out.odd_cycle.insert(out.odd_cycle.end(), right.rbegin(), right.rend());
          return out;
        }
      }
    }
  }
  out.bipartite = true;
  out.color.resize(n);
  for (Vertex v = 0; v < n; ++v) out.color[v] = depth[v] % 2;
  return out;
}

VertexSet interval(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v) {
  const int duv = d.at(u, v);
  VertexSet s(g.vertex_count());
  auto du = d.row(u);
  auto dv = d.row(v);
  for (Vertex z = 0; z < g.vertex_count(); ++z) {
    if (du[z] != kUnreachable && dv[z] != kUnreachable && du[z] + dv[z] == duv) s.insert(z);
  }
  return s;
}

std::uint64_t geodesic_count(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v) {
  const int duv = d.at(u, v);
  // Layer the interval by distance from u and accumulate path counts.
  std::vector<std::vector<Vertex>> layers(duv + 1);
  auto du = d.row(u);
  auto dv = d.row(v);
  for (Vertex z = 0; z < g.vertex_count(); ++z) {
    if (du[z] != kUnreachable && dv[z] != kUnreachable && du[z] + dv[z] == duv) {
      layers[du[z]].push_back(z);
    }
  }
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> count(g.vertex_count(), 0);
  count[u] = 1;
  for (int level = 1; level <= duv; ++level) {
    for (Vertex z : layers[level]) {
      std::uint64_t c = 0;
      for (Vertex w : g.neighbors(z)) {
        if (du[w] == level - 1 && dv[w] == duv - level + 1) {
          c = (count[w] > kMax - c) ? kMax : c + count[w];
        }
      }
      count[z] = c;
    }
  }
  return count[v];
}

std::optional<std::vector<Vertex>> unique_geodesic(const Graph& g, const DistanceMatrix& d,
                                                   Vertex u, Vertex v) {
  const int duv = d.at(u, v);
  std::vector<Vertex> path(duv + 1);
  path[duv] = v;
  auto du = d.row(u);
  Vertex z = v;
  for (int level = duv; level > 0; --level) {
    Vertex pred = -1;
    for (Vertex w : g.neighbors(z)) {
      if (du[w] == level - 1) {
        if (pred != -1) return std::nullopt;
        pred = w;
      }
    }
    path[level - 1] = z = pred;
  }
  return path;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(ng) * h.edge_count() +
                static_cast<std::size_t>(nh) * g.edge_count());
  for (Vertex a = 0; a < ng; ++a) {
    for (const auto& [x, y] : h.edges()) pairs.push_back({a * nh + x, a * nh + y});
  }
  for (const auto& [a, b] : g.edges()) {
    for (Vertex x = 0; x < nh; ++x) pairs.push_back({a * nh + x, b * nh + x});
  }
  Graph p = Graph::from_edge_list(pairs, ng * nh);
  if (g.has_names() || h.has_names()) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(ng) * nh);
    for (Vertex a = 0; a < ng; ++a) {
      for (Vertex x = 0; x < nh; ++x) names.push_back("(" + g.name(a) + "," + h.name(x) + ")");
    }
    p = p.with_names(std::move(names));
  }
  return p;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.to_host = s.members();
  std::vector<int> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < out.to_host.size(); ++i) local[out.to_host[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [u, v] : g.edges()) {
    if (local[u] >= 0 && local[v] >= 0) pairs.push_back({local[u], local[v]});
  }
  out.graph = Graph::from_edge_list(pairs, static_cast<int>(out.to_host.size()));
  if (g.has_names()) {
    std::vector<std::string> names;
    for (Vertex v : out.to_host) names.push_back(g.name(v));
    out.graph = out.graph.with_names(std::move(names));
  }
  return out;
}

}  // namespace cubekit
