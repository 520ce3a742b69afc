#include "cubekit/classes.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <unordered_map>

#include "cubekit/classify.hpp"
#include "cubekit/error.hpp"
#include "cubekit/serial.hpp"

namespace cubekit {

namespace {

// All intervals I(u, v) packed as n*n rows of 64-bit words.
class IntervalTable {
 public:
  IntervalTable(const Graph& g, const DistanceMatrix& d)
      : n_(g.vertex_count()), words_((n_ + 63) / 64),
        data_(static_cast<std::size_t>(n_) * n_ * words_, 0) {
#pragma omp parallel for schedule(dynamic, 4)
    for (Vertex u = 0; u < n_; ++u) {
      auto du = d.row(u);
      for (Vertex v = 0; v < n_; ++v) {
        auto dv = d.row(v);
        std::uint64_t* row = slot(u, v);
        for (Vertex z = 0; z < n_; ++z) {
          if (du[z] + dv[z] == du[v]) row[z / 64] |= std::uint64_t{1} << (z % 64);
        }
      }
    }
  }

  int meet_count(Vertex u, Vertex v, Vertex w) const {
    const std::uint64_t* a = slot(u, v);
    const std::uint64_t* b = slot(v, w);
    const std::uint64_t* c = slot(u, w);
    int total = 0;
    for (int k = 0; k < words_; ++k) total += std::popcount(a[k] & b[k] & c[k]);
    return total;
  }

 private:
  std::uint64_t* slot(Vertex u, Vertex v) {
    return data_.data() + (static_cast<std::size_t>(u) * n_ + v) * words_;
  }
  const std::uint64_t* slot(Vertex u, Vertex v) const {
    return data_.data() + (static_cast<std::size_t>(u) * n_ + v) * words_;
  }

  int n_;
  int words_;
  std::vector<std::uint64_t> data_;
};

int meet_count_direct(const DistanceMatrix& d, int n, Vertex u, Vertex v, Vertex w) {
  int total = 0;
  for (Vertex z = 0; z < n; ++z) {
    if (d(u, z) + d(z, v) == d(u, v) && d(v, z) + d(z, w) == d(v, w) &&
        d(u, z) + d(z, w) == d(u, w)) {
      ++total;
    }
  }
  return total;
}

// Interval tables grow as n^3 bits; beyond this the check samples triples.
constexpr int kExactMedianVertices = 512;
constexpr int kMedianSamples = 200000;

}  // namespace

MedianCheck is_median(const Graph& g, const DistanceMatrix& d) {
  const int n = g.vertex_count();
  if (!d.connected()) return {false, std::nullopt, 0};
  if (n > kExactMedianVertices) {
    // TODO: replace sampling with an exact median-graph recognizer for large inputs.
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    for (int s = 0; s < kMedianSamples; ++s) {
      Vertex u = pick(rng), v = pick(rng), w = pick(rng);
      if (u == v || v == w || u == w) continue;
      int c = meet_count_direct(d, n, u, v, w);
      if (c != 1) return {false, std::array{u, v, w}, c, true};
    }
    MedianCheck ok;
    ok.sampled = true;
    return ok;
  }
  IntervalTable table(g, d);
  // Per-u first failure; the smallest failing u gives the lexicographic witness.
  std::vector<MedianCheck> first(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n && first[u].median; ++v) {
      for (Vertex w = v + 1; w < n; ++w) {
        int c = table.meet_count(u, v, w);
        if (c != 1) {
          first[u] = {false, std::array{u, v, w}, c};
          break;
        }
      }
    }
  }
  for (const auto& f : first) {
    if (!f.median) return f;
  }
  return {};
}

namespace serial {

MedianCheck is_median(const Graph& g, const DistanceMatrix& d) {
  const int n = g.vertex_count();
  if (!d.connected()) return {false, std::nullopt, 0};
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      for (Vertex w = v + 1; w < n; ++w) {
        int c = meet_count_direct(d, n, u, v, w);
        if (c != 1) return {false, std::array{u, v, w}, c};
      }
    }
  }
  return {};
}

}  // namespace serial

namespace {

// Each class must be exactly the cut between the two halves of its first edge.
void require_partition(const Graph& g, const DistanceMatrix& d, const ThetaPartition& tp) {
  auto fail = [] { throw Error(ErrorCode::kNotPartialCube, "U-set predicates need a partial cube and its Θ-classes"); };
  if (!d.connected() || static_cast<int>(tp.class_of.size()) != g.edge_count()) fail();
  const int n = g.vertex_count();
  std::vector<char> side(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < tp.classes.size(); ++c) {
    if (tp.classes[c].empty()) fail();
    const Edge rep = g.edge(tp.classes[c].front());
    for (Vertex x = 0; x < n; ++x) {
      if (d(x, rep.u) == d(x, rep.v)) fail();
      side[x] = d(x, rep.u) < d(x, rep.v);
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge ed = g.edge(e);
      if ((side[ed.u] != side[ed.v]) != (tp.class_of[e] == static_cast<int>(c))) fail();
    }
  }
}

bool induces_connected(const Graph& g, const VertexSet& s) {
  if (s.empty()) return true;
  return is_connected(induced_subgraph(g, s).graph);
}

bool induces_isometric(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
  if (s.empty()) return true;
  if (!induces_connected(g, s)) return false;
  return is_isometric_set(g, d, s);
}

template <typename Pred>
USetCheck check_usets(const Graph& g, const DistanceMatrix& d, const ThetaPartition& tp, Pred pred) {
  require_partition(g, d, tp);
  const int k = tp.class_count();
  std::vector<USetCheck> per_class(k);
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < k; ++c) {
    const auto [u, v] = g.edge(tp.classes[c].front());
    auto h = halfspaces(g, d, u, v);
    if (!pred(h.u_uv)) {
      per_class[c] = {false, std::pair{u, v}};
    } else if (!pred(h.u_vu)) {
      per_class[c] = {false, std::pair{v, u}};
    }
  }
  for (const auto& r : per_class) {
    if (!r.holds) return r;
  }
  return {};
}

}  // namespace

USetCheck is_semi_median(const Graph& g, const DistanceMatrix& d, const ThetaPartition& tp) {
  return check_usets(g, d, tp, [&](const VertexSet& s) { return induces_connected(g, s); });
}

USetCheck is_almost_median(const Graph& g, const DistanceMatrix& d, const ThetaPartition& tp) {
  return check_usets(g, d, tp, [&](const VertexSet& s) { return induces_isometric(g, d, s); });
}

bool is_almost_median_via_cycles(const ConvexCycleSet& ccs) {
  return std::all_of(ccs.cycles.begin(), ccs.cycles.end(),
                     [](const Cycle& c) { return c.length() == 4; });
}

TilingCheck is_tiled(const Graph& g, const DistanceMatrix& d) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  int components = 0;
  {
    std::vector<bool> seen(n, false);
    for (Vertex s = 0; s < n; ++s) {
      if (seen[s]) continue;
      ++components;
      for (Vertex v = 0; v < n; ++v) {
        if (d(s, v) != kUnreachable) seen[v] = true;
      }
    }
  }
  TilingCheck out;
  out.cycle_space_dimension = m - n + components;

  std::vector<Bits> pivots(m);
  auto absorb = [&](Bits vec) {
    while (vec.any()) {
      auto p = vec.find_first();
      if (pivots[p].empty()) {
        pivots[p] = std::move(vec);
        ++out.rank;
        return;
      }
      vec ^= pivots[p];
    }
  };

  // Each 4-cycle a-b1-c-b2 is generated once, from its least vertex a.
  std::unordered_map<Vertex, std::vector<Vertex>> via;
  for (Vertex a = 0; a < n; ++a) {
    via.clear();
    for (Vertex b : g.neighbors(a)) {
      if (b < a) continue;
      for (Vertex c : g.neighbors(b)) {
        if (c > a) via[c].push_back(b);
      }
    }
    std::vector<Vertex> opposite;
    for (const auto& [c, bs] : via) opposite.push_back(c);
    std::sort(opposite.begin(), opposite.end());
    for (Vertex c : opposite) {
      const auto& bs = via[c];
      for (std::size_t i = 0; i < bs.size(); ++i) {
        for (std::size_t j = i + 1; j < bs.size(); ++j) {
          ++out.four_cycles;
          if (out.rank == out.cycle_space_dimension) continue;
          Bits vec(m);
          vec.set(*g.edge_id(a, bs[i]));
          vec.set(*g.edge_id(bs[i], c));
          vec.set(*g.edge_id(c, bs[j]));
          vec.set(*g.edge_id(bs[j], a));
          absorb(std::move(vec));
        }
      }
    }
  }
  out.tiled = out.rank == out.cycle_space_dimension;
  return out;
}

ClassMembershipReport class_membership(const Graph& g, const DistanceMatrix& d) {
  ClassMembershipReport r;
  r.recognition = is_partial_cube(g, d);
  r.partial_cube = r.recognition.is_partial_cube();
  r.median_check = is_median(g, d);
  r.median = r.median_check.median;
  if (!r.partial_cube) {
    r.semi_median_check.holds = false;
    r.almost_median_check.holds = false;
    return r;
  }
  const auto& tp = *r.recognition.partition;
  r.convex_cycles = enumerate_convex_cycles(g, d, tp);
  r.semi_median_check = is_semi_median(g, d, tp);
  r.almost_median_check = is_almost_median(g, d, tp);
  r.tiling = is_tiled(g, d);
  r.semi_median = r.semi_median_check.holds;
  r.almost_median = r.almost_median_check.holds;
  r.almost_median_via_cycles = is_almost_median_via_cycles(*r.convex_cycles);
  r.tiled = r.tiling.tiled;
  r.hypercube = verify_hypercube(g, tp, *r.recognition.labeling, tp.class_count());
  for (const auto& c : r.convex_cycles->cycles) {
    if (c.length() != 4) {
      r.non_square_convex_cycle = c;
      break;
    }
  }
  return r;
}

std::optional<std::string> find_chain_violation(const ClassMembershipReport& r) {
  if (r.hypercube && !r.median) return "hypercube that is not median";
  if (r.median && !r.almost_median) return "median graph that is not almost-median";
  if (r.almost_median && !r.tiled) return "almost-median graph that is not tiled";
  if (r.tiled && !r.semi_median) return "tiled partial cube that is not semi-median";
  if (r.semi_median && !r.partial_cube) return "semi-median graph that is not a partial cube";
  if (r.median && !r.partial_cube) return "median graph that is not a partial cube";
  if (r.partial_cube && r.almost_median != r.almost_median_via_cycles) {
    return "U-set isometry and the convex-cycle spectrum disagree on almost-median";
  }
  return std::nullopt;
}

ClassMembershipReport class_report(const Graph& g) { return class_report(g, all_pairs_distances(g)); }

ClassMembershipReport class_report(const Graph& g, const DistanceMatrix& d) {
  auto r = class_membership(g, d);
  if (auto v = find_chain_violation(r)) throw Error(ErrorCode::kInternalTheoremViolation, *v);
  return r;
}

}  // namespace cubekit
