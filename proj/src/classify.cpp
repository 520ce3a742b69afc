#include "cubekit/classify.hpp"

#include <algorithm>
#include <set>

#include "cubekit/convexity.hpp"
#include "cubekit/error.hpp"
#include "cubekit/families.hpp"

namespace cubekit {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::kHypercube: return "HYPERCUBE";
    case Outcome::kDoubledOdd: return "DOUBLED_ODD";
    case Outcome::kEvenCycle: return "EVEN_CYCLE";
    case Outcome::kExcluded: return "EXCLUDED";
  }
  return "UNKNOWN";
}

std::string_view to_string(ExclusionReason r) {
  switch (r) {
    case ExclusionReason::kNotPartialCube: return "NOT_PARTIAL_CUBE";
    case ExclusionReason::kNotRegular: return "NOT_REGULAR";
    case ExclusionReason::kTrivialK1K2: return "TRIVIAL_K1_K2";
    case ExclusionReason::kMixedCycleLengths: return "MIXED_CYCLE_LENGTHS";
    case ExclusionReason::kNoCycles: return "NO_CYCLES";
  }
  return "UNKNOWN";
}

std::string_view to_string(PathType t) {
  switch (t) {
    case PathType::kTypeOne: return "TYPE_I";
    case PathType::kTypeTwo: return "TYPE_II";
    case PathType::kNeither: return "NEITHER";
  }
  return "UNKNOWN";
}

std::string Classification::label() const {
  if (outcome == Outcome::kExcluded) {
    return "EXCLUDED(" + std::string(to_string(*reason)) + ")";
  }
  return std::string(to_string(outcome)) + "(" + std::to_string(parameter) + ")";
}

bool verify_hypercube(const Graph& g, const ThetaPartition& tp, const HypercubeLabeling& lab, int k) {
  if (k < 0 || k > 30 || tp.class_count() != k || lab.dimension() != k) return false;
  if (g.vertex_count() != (1 << k)) return false;
  std::set<unsigned long> seen;
  for (const auto& label : lab.labels) {
    if (static_cast<int>(label.size()) != k) return false;
    if (!seen.insert(label.to_ulong()).second) return false;
  }
  return true;
}

namespace {

[[noreturn]] void theorem_violation(const std::string& what) {
  throw Error(ErrorCode::kInternalTheoremViolation, what);
}

Classification excluded(ExclusionReason r) {
  Classification c;
  c.outcome = Outcome::kExcluded;
  c.reason = r;
  return c;
}

}  // namespace

Classification classify(const Graph& g, ClassifyOptions options) {
  const auto d = all_pairs_distances(g);
  auto rec = is_partial_cube(g, d);
  if (!rec) return excluded(ExclusionReason::kNotPartialCube);
  if (g.vertex_count() <= 2) return excluded(ExclusionReason::kTrivialK1K2);

  const auto profile = degree_profile(g);
  const auto& tp = *rec.partition;
  if (!profile.regular) {
    auto c = excluded(ExclusionReason::kNotRegular);
    c.idim = tp.class_count();
    return c;
  }
  const int k = *profile.k;
  auto ccs = enumerate_convex_cycles(g, d, tp);

  Classification c;
  c.degree = k;
  c.idim = tp.class_count();
  c.spectrum = ccs.spectrum;
  if (ccs.cycles.empty()) {
    c.outcome = Outcome::kExcluded;
    c.reason = ExclusionReason::kNoCycles;
    c.note = "regular partial cube without cycles beyond K_1/K_2";
    return c;
  }
  auto uniform = ccs.uniform_length();
  if (!uniform) {
    c.outcome = Outcome::kExcluded;
    c.reason = ExclusionReason::kMixedCycleLengths;
    return c;
  }
  const int length = *uniform;
  c.convex_cycle_length = length;

  if (length == 4) {
    if (k != tp.class_count()) {
      theorem_violation("uniform 4-cycles but degree " + std::to_string(k) + " != idim " +
                        std::to_string(tp.class_count()));
    }
    if (!verify_hypercube(g, tp, *rec.labeling, k)) {
      theorem_violation("uniform 4-cycles but the labeling is not a bijection onto {0,1}^k");
    }
    c.outcome = Outcome::kHypercube;
    c.parameter = k;
    c.labeling = std::move(rec.labeling);
    return c;
  }
  if (length == 6) {
    c.outcome = Outcome::kDoubledOdd;
    c.parameter = k;
    if (k == 2) c.note = "DOUBLED_ODD(2) is the 6-cycle C_6";
    if (options.certify) {
      if (k > 8) theorem_violation("uniform 6-cycles at degree " + std::to_string(k) + " beyond generator range");
      const Graph target = doubled_odd(k);
      c.isomorphism = verify_isomorphism(g, target);
      for (Vertex v = 0; v < target.vertex_count(); ++v) c.generator_names.push_back(target.name(v));
      if (!c.isomorphism) theorem_violation("uniform 6-cycles but not isomorphic to the Doubled Odd graph");
    }
    return c;
  }
  if (length >= 8 && length % 2 == 0) {
    if (k != 2 || g.vertex_count() != length) {
      theorem_violation("uniform " + std::to_string(length) + "-cycles but the graph is not C_" +
                        std::to_string(length));
    }
    c.outcome = Outcome::kEvenCycle;
    c.parameter = length / 2;
    if (options.certify) {
      const Graph target = even_cycle(length / 2);
      c.isomorphism = verify_isomorphism(g, target);
      for (Vertex v = 0; v < target.vertex_count(); ++v) c.generator_names.push_back(target.name(v));
      if (!c.isomorphism) theorem_violation("uniform long cycles but not isomorphic to the even cycle");
    }
    return c;
  }
  theorem_violation("convex cycle length " + std::to_string(length) + " in a partial cube");
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& g, const Graph& h)
      : g_(g), h_(h), dg_(all_pairs_distances(g)), dh_(all_pairs_distances(h)) {}

  std::optional<std::vector<Vertex>> run() {
    const int n = g_.vertex_count();
    auto pg = profiles(dg_, n);
    auto ph = profiles(dh_, n);
    auto sorted_g = pg;
    auto sorted_h = ph;
    std::sort(sorted_g.begin(), sorted_g.end());
    std::sort(sorted_h.begin(), sorted_h.end());
    if (sorted_g != sorted_h) return std::nullopt;
    profile_g_ = std::move(pg);
    profile_h_ = std::move(ph);

    order_ = bfs_order();
    map_.assign(n, -1);
    used_.assign(n, false);
    if (!extend(0)) return std::nullopt;
    return map_;
  }

 private:
  // Per vertex: count of vertices at each distance, unreachable last.
  static std::vector<std::vector<int>> profiles(const DistanceMatrix& d, int n) {
    std::vector<std::vector<int>> out(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> hist(n + 1, 0);
      for (Vertex w = 0; w < n; ++w) {
        int x = d(v, w);
        ++hist[x == kUnreachable ? n : x];
      }
      out[v] = std::move(hist);
    }
    return out;
  }

  // BFS order per component so each vertex after a root has a mapped parent.
  std::vector<std::pair<Vertex, Vertex>> bfs_order() const {
    const int n = g_.vertex_count();
    std::vector<std::pair<Vertex, Vertex>> order;  // (vertex, parent or -1)
    std::vector<bool> seen(n, false);
    for (Vertex root = 0; root < n; ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      std::size_t head = order.size();
      order.push_back({root, -1});
      for (; head < order.size(); ++head) {
        Vertex x = order[head].first;
        for (Vertex y : g_.neighbors(x)) {
          if (!seen[y]) {
            seen[y] = true;
            order.push_back({y, x});
          }
        }
      }
    }
    return order;
  }

  bool consistent(Vertex x, Vertex y, std::size_t depth) const {
    if (profile_g_[x] != profile_h_[y]) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      Vertex a = order_[i].first;
      if (dg_(a, x) != dh_(map_[a], y)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const auto [x, parent] = order_[depth];
    auto try_candidate = [&](Vertex y) {
      if (used_[y] || !consistent(x, y, depth)) return false;
      map_[x] = y;
      used_[y] = true;
      if (extend(depth + 1)) return true;
      used_[y] = false;
      map_[x] = -1;
      return false;
    };
    if (parent >= 0) {
      for (Vertex y : h_.neighbors(map_[parent])) {
        if (try_candidate(y)) return true;
      }
      return false;
    }
    for (Vertex y = 0; y < h_.vertex_count(); ++y) {
      if (try_candidate(y)) return true;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  DistanceMatrix dg_;
  DistanceMatrix dh_;
  std::vector<std::vector<int>> profile_g_;
  std::vector<std::vector<int>> profile_h_;
  std::vector<std::pair<Vertex, Vertex>> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> verify_isomorphism(const Graph& g, const Graph& h) {
  if (g.vertex_count() > kIsomorphismVertexBound || h.vertex_count() > kIsomorphismVertexBound) {
    throw Error(ErrorCode::kSizeBoundExceeded, "isomorphism check is limited to 2000 vertices");
  }
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  std::vector<int> dg;
  std::vector<int> dh;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;
  return IsomorphismSearch(g, h).run();
}

namespace {

void validate_path(const Graph& g, std::span<const Vertex> path) {
  if (path.size() < 2) throw Error(ErrorCode::kNotAPath, "a path needs at least one edge");
  std::vector<bool> seen(g.vertex_count(), false);
  for (std::size_t i = 0; i < path.size(); ++i) {
    Vertex v = path[i];
    if (v < 0 || v >= g.vertex_count()) throw Error(ErrorCode::kNotAPath, "vertex out of range");
    if (seen[v]) throw Error(ErrorCode::kNotAPath, "vertex " + g.name(v) + " repeats");
    seen[v] = true;
    if (i > 0 && !g.adjacent(path[i - 1], v)) {
      throw Error(ErrorCode::kNotAPath, g.name(path[i - 1]) + " and " + g.name(v) + " are not adjacent");
    }
  }
}

// classes[i - 1] is the class of e_i = v_{i-1} v_i.
std::vector<int> edge_classes(const Graph& g, const ThetaPartition& tp, std::span<const Vertex> path) {
  std::vector<int> out;
  for (std::size_t i = 1; i < path.size(); ++i) out.push_back(tp.class_of[*g.edge_id(path[i - 1], path[i])]);
  return out;
}

PathCheck fail(int index, std::string what) { return {false, index, std::move(what)}; }

}  // namespace

PathCheck is_type_one_path(const Graph& g, const ThetaPartition& tp, const IncidentClassFamily& fam,
                           std::span<const Vertex> path) {
  validate_path(g, path);
  const int l = static_cast<int>(path.size()) - 1;
  auto cls = edge_classes(g, tp, path);
  auto e = [&](int i) { return cls[i - 1]; };
  if ((fam.bits(path[0]) - fam.bits(path[1])).none()) return fail(0, "F(v_0) \\ F(v_1) is empty");
  if ((fam.bits(path[l]) - fam.bits(path[l - 1])).none()) {
    return fail(l, "F(v_l) \\ F(v_{l-1}) is empty");
  }
  for (int i = 1; i <= l - 1; ++i) {
    if (fam.contains(path[i - 1], e(i + 1))) return fail(i, "class of e_{i+1} lies in F(v_{i-1})");
    if (fam.contains(path[i + 1], e(i))) return fail(i, "class of e_i lies in F(v_{i+1})");
  }
  return {};
}

PathCheck is_type_one_path(const Graph& g, const ThetaPartition& tp, std::span<const Vertex> path) {
  return is_type_one_path(g, tp, IncidentClassFamily(g, tp), path);
}

PathCheck is_type_two_path(const Graph& g, const ThetaPartition& tp, const IncidentClassFamily& fam,
                           std::span<const Vertex> path) {
  validate_path(g, path);
  const int l = static_cast<int>(path.size()) - 1;
  if (l < 3) throw Error(ErrorCode::kPathTooShort, "type-II paths have length at least 3");
  auto cls = edge_classes(g, tp, path);
  auto e = [&](int i) { return cls[i - 1]; };
  for (int i = 1; i <= l - 2; ++i) {
    if (fam.contains(path[i + 2], e(i))) return fail(i, "class of e_i lies in F(v_{i+2})");
    if (fam.contains(path[i - 1], e(i + 2))) return fail(i, "class of e_{i+2} lies in F(v_{i-1})");
  }
  return {};
}

PathCheck is_type_two_path(const Graph& g, const ThetaPartition& tp, std::span<const Vertex> path) {
  return is_type_two_path(g, tp, IncidentClassFamily(g, tp), path);
}

PathWitness classify_path(const Graph& g, const ThetaPartition& tp, const IncidentClassFamily& fam,
                          std::span<const Vertex> path) {
  PathWitness w;
  w.vertices.assign(path.begin(), path.end());
  auto one = is_type_one_path(g, tp, fam, path);
  if (one) {
    w.type = PathType::kTypeOne;
    return w;
  }
  if (path.size() >= 4 && is_type_two_path(g, tp, fam, path)) {
    w.type = PathType::kTypeTwo;
    return w;
  }
  w.failing_index = one.failing_index;
  return w;
}

ThreePathCheck every_3path_in_6cycle(const Graph& g) {
  const int n = g.vertex_count();
  for (Vertex v0 = 0; v0 < n; ++v0) {
    for (Vertex v1 : g.neighbors(v0)) {
      for (Vertex v2 : g.neighbors(v1)) {
        if (v2 == v0) continue;
        for (Vertex v3 : g.neighbors(v2)) {
          if (v3 == v1 || v3 == v0 || v3 < v0) continue;
          auto on_path = [&](Vertex z) { return z == v0 || z == v1 || z == v2 || z == v3; };
          bool closed = false;
          for (Vertex x : g.neighbors(v3)) {
            if (on_path(x)) continue;
            for (Vertex y : g.neighbors(x)) {
              if (!on_path(y) && g.adjacent(y, v0)) {
                closed = true;
                break;
              }
            }
            if (closed) break;
          }
          if (!closed) return {false, std::array{v0, v1, v2, v3}};
        }
      }
    }
  }
  return {};
}

}  // namespace cubekit
