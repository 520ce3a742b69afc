#include "cubekit/theta.hpp"

#include <algorithm>

#include "cubekit/error.hpp"
#include "cubekit/serial.hpp"

namespace cubekit {

namespace {

void require_connected(const DistanceMatrix& d) {
  if (d.size() > 0 && !d.connected()) {
    throw Error(ErrorCode::kDisconnectedPair, "the Θ relation needs a connected graph");
  }
}

Bits relation_row(const Graph& g, const DistanceMatrix& d, EdgeId e) {
  const auto& [u, v] = g.edge(e);
  auto du = d.row(u);
  auto dv = d.row(v);
  Bits row(g.edge_count());
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    const auto& [x, y] = g.edge(f);
    if (du[x] + dv[y] != du[y] + dv[x]) row.set(f);
  }
  return row;
}

std::optional<TransitivityWitness> first_violation(const std::vector<Bits>& rows) {
  const auto m = static_cast<EdgeId>(rows.size());
  for (EdgeId e = 0; e < m; ++e) {
    for (auto f = rows[e].find_first(); f != Bits::npos; f = rows[e].find_next(f)) {
      if (rows[f] == rows[e]) continue;
      Bits only_f = rows[f] - rows[e];
      if (auto h = only_f.find_first(); h != Bits::npos) {
        return TransitivityWitness{e, static_cast<EdgeId>(f), static_cast<EdgeId>(h)};
      }
      Bits only_e = rows[e] - rows[f];
      auto h = only_e.find_first();
      return TransitivityWitness{static_cast<EdgeId>(h), e, static_cast<EdgeId>(f)};
    }
  }
  return std::nullopt;
}

ThetaPartition greedy_classes(const std::vector<Bits>& rows) {
  const auto m = static_cast<EdgeId>(rows.size());
  ThetaPartition tp;
  tp.class_of.assign(m, -1);
  for (EdgeId e = 0; e < m; ++e) {
    if (tp.class_of[e] != -1) continue;
    const int id = tp.class_count();
    tp.classes.emplace_back();
    for (auto f = rows[e].find_first(); f != Bits::npos; f = rows[e].find_next(f)) {
      if (tp.class_of[f] != -1) continue;
      tp.class_of[f] = id;
      tp.classes.back().push_back(static_cast<EdgeId>(f));
    }
  }
  return tp;
}

HypercubeLabeling unchecked_labeling(const Graph& g, const DistanceMatrix& d,
                                     const ThetaPartition& tp) {
  const int n = g.vertex_count();
  const int k = tp.class_count();
  HypercubeLabeling lab;
  lab.labels.assign(n, Label(k));
  lab.class_bit.resize(k);
  lab.one_side.resize(k);
  for (int c = 0; c < k; ++c) {
    lab.class_bit[c] = c;
    auto [a, b] = g.edge(tp.classes[c].front());
    if (d.at(a, 0) < d.at(b, 0)) std::swap(a, b);
    lab.one_side[c] = {a, b};
    for (Vertex w = 0; w < n; ++w) {
      if (d(a, w) < d(b, w)) lab.labels[w].set(c);
    }
  }
  return lab;
}

std::string describe(const Graph& g, EdgeId e) {
  return "(" + g.name(g.edge(e).u) + "," + g.name(g.edge(e).v) + ")";
}

}  // namespace

bool theta_related(const Graph& g, const DistanceMatrix& d, EdgeId e, EdgeId f) {
  const auto& [u, v] = g.edge(e);
  const auto& [x, y] = g.edge(f);
  return d.at(u, x) + d.at(v, y) != d.at(u, y) + d.at(v, x);
}

bool theta_related(const Graph& g, const DistanceMatrix& d, std::pair<Vertex, Vertex> e,
                   std::pair<Vertex, Vertex> f) {
  auto lookup = [&](std::pair<Vertex, Vertex> p) {
    auto id = g.edge_id(p.first, p.second);
    if (!id) {
      throw Error(ErrorCode::kNotAnEdge, "(" + std::to_string(p.first) + "," +
                                             std::to_string(p.second) + ") is not an edge");
    }
    return *id;
  };
  return theta_related(g, d, lookup(e), lookup(f));
}

std::vector<Bits> theta_relation_rows(const Graph& g, const DistanceMatrix& d) {
  require_connected(d);
  std::vector<Bits> rows(g.edge_count());
#pragma omp parallel for schedule(dynamic, 16)
  for (EdgeId e = 0; e < g.edge_count(); ++e) rows[e] = relation_row(g, d, e);
  return rows;
}

namespace serial {

std::vector<Bits> theta_relation_rows(const Graph& g, const DistanceMatrix& d) {
  require_connected(d);
  std::vector<Bits> rows(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) rows[e] = relation_row(g, d, e);
  return rows;
}

}  // namespace serial

std::optional<TransitivityWitness> find_transitivity_violation(const Graph& g,
                                                              const DistanceMatrix& d) {
  return first_violation(theta_relation_rows(g, d));
}

ThetaPartition theta_partition(const Graph& g, const DistanceMatrix& d, ThetaMode mode) {
  auto rows = theta_relation_rows(g, d);
  if (mode == ThetaMode::kStrict) {
    if (auto w = first_violation(rows)) {
      throw Error(ErrorCode::kNotPartialCube,
                  "Θ is not transitive: " + describe(g, w->e) + " Θ " + describe(g, w->f) +
                      " Θ " + describe(g, w->h) + " but not " + describe(g, w->e) + " Θ " +
                      describe(g, w->h));
    }
  }
  return greedy_classes(rows);
}

std::string HypercubeLabeling::label_string(Vertex v) const {
  std::string s(labels[v].size(), '0');
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (labels[v].test(i)) s[i] = '1';
  }
  return s;
}

std::optional<std::pair<Vertex, Vertex>> find_non_isometric_pair(const HypercubeLabeling& lab,
                                                                  const DistanceMatrix& d) {
  const int n = d.size();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (static_cast<int>((lab.labels[u] ^ lab.labels[v]).count()) != d(u, v)) {
        return std::pair{u, v};
      }
    }
  }
  return std::nullopt;
}

HypercubeLabeling labeling(const Graph& g, const DistanceMatrix& d, const ThetaPartition& tp) {
  HypercubeLabeling lab = unchecked_labeling(g, d, tp);
  if (auto bad = find_non_isometric_pair(lab, d)) {
    throw Error(ErrorCode::kLabelingNotIsometric,
                "Hamming distance of " + g.name(bad->first) + " and " + g.name(bad->second) +
                    " differs from their graph distance");
  }
  return lab;
}

int isometric_dimension(const ThetaPartition& tp) { return tp.class_count(); }

std::string_view to_string(RecognitionFailure f) {
  switch (f) {
    case RecognitionFailure::kNone: return "NONE";
    case RecognitionFailure::kNotConnected: return "NOT_CONNECTED";
    case RecognitionFailure::kNotBipartite: return "NOT_BIPARTITE";
    case RecognitionFailure::kThetaNotTransitive: return "THETA_NOT_TRANSITIVE";
    case RecognitionFailure::kLabelingNotIsometric: return "LABELING_NOT_ISOMETRIC";
  }
  return "UNKNOWN";
}

Recognition is_partial_cube(const Graph& g, const DistanceMatrix& d) {
  Recognition r;
  if (!d.connected()) {
    r.failure = RecognitionFailure::kNotConnected;
    return r;
  }
  auto bip = is_bipartite(g);
  if (!bip.bipartite) {
    r.failure = RecognitionFailure::kNotBipartite;
    r.odd_cycle = std::move(bip.odd_cycle);
    return r;
  }
  auto rows = theta_relation_rows(g, d);
  if (auto w = first_violation(rows)) {
    r.failure = RecognitionFailure::kThetaNotTransitive;
    r.transitivity = w;
    return r;
  }
  r.partition = greedy_classes(rows);
  auto lab = unchecked_labeling(g, d, *r.partition);
  if (auto bad = find_non_isometric_pair(lab, d)) {
    r.failure = RecognitionFailure::kLabelingNotIsometric;
    r.non_isometric_pair = bad;
  } else {
    r.labeling = std::move(lab);
  }
  return r;
}

Recognition is_partial_cube(const Graph& g) { return is_partial_cube(g, all_pairs_distances(g)); }

HalfSpaces halfspaces(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v) {
  if (!g.adjacent(u, v)) {
    throw Error(ErrorCode::kNotAnEdge,
                "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  }
  const int n = g.vertex_count();
  HalfSpaces h{VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n), {}};
  for (Vertex w = 0; w < n; ++w) {
    int a = d.at(u, w);
    int b = d.at(v, w);
    if (a < b) h.w_uv.insert(w);
    if (b < a) h.w_vu.insert(w);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [x, y] = g.edge(e);
    if (h.w_uv.contains(x) == h.w_uv.contains(y)) continue;
    if (h.w_vu.contains(x) == h.w_vu.contains(y)) continue;
    h.class_edges.push_back(e);
    if (h.w_uv.contains(y)) std::swap(x, y);
    h.u_uv.insert(x);
    h.u_vu.insert(y);
  }
  return h;
}

IncidentClassFamily::IncidentClassFamily(const Graph& g, const ThetaPartition& tp) {
  const int n = g.vertex_count();
  lists_.resize(n);
  bits_.assign(n, Bits(tp.class_count()));
  for (Vertex v = 0; v < n; ++v) {
    for (EdgeId e : g.incident_edges(v)) bits_[v].set(tp.class_of[e]);
    for (auto c = bits_[v].find_first(); c != Bits::npos; c = bits_[v].find_next(c)) {
      lists_[v].push_back(static_cast<int>(c));
    }
  }
}

std::vector<int> incident_classes(const Graph& g, const ThetaPartition& tp, Vertex v) {
  std::vector<int> out;
  for (EdgeId e : g.incident_edges(v)) out.push_back(tp.class_of[e]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cubekit
