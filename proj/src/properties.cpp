#include "cubekit/properties.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "cubekit/classes.hpp"
#include "cubekit/error.hpp"
#include "cubekit/io.hpp"
#include "cubekit/serial.hpp"

namespace cubekit {

bool is_geodesic_path(const DistanceMatrix& d, std::span<const Vertex> path) {
  if (path.empty()) return true;
  return d(path.front(), path.back()) == static_cast<int>(path.size()) - 1;
}

namespace {

void extend_paths(const Graph& g, std::vector<Vertex>& stack, std::vector<bool>& on_path, int max_length,
                  const std::function<void(std::span<const Vertex>)>& visit) {
  if (static_cast<int>(stack.size()) > max_length) return;
  for (Vertex w : g.neighbors(stack.back())) {
    if (on_path[w]) continue;
    stack.push_back(w);
    on_path[w] = true;
    visit(stack);
    extend_paths(g, stack, on_path, max_length, visit);
    on_path[w] = false;
    stack.pop_back();
  }
}

}  // namespace

void for_each_simple_path(const Graph& g, int max_length,
                          const std::function<void(std::span<const Vertex>)>& visit) {
  std::vector<bool> on_path(g.vertex_count(), false);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    stack.assign(1, s);
    on_path[s] = true;
    extend_paths(g, stack, on_path, max_length, visit);
    on_path[s] = false;
  }
}

std::vector<Cycle> cycles_of_length(const Graph& g, int length) {
  std::vector<Cycle> out;
  if (length < 3) return out;
  std::vector<bool> on_path(g.vertex_count(), false);
  std::vector<Vertex> stack;
  std::function<void()> grow = [&] {
    const Vertex s = stack.front();
    if (static_cast<int>(stack.size()) == length) {
      if (g.adjacent(stack.back(), s) && stack[1] < stack.back()) out.push_back(canonical_cycle(stack));
      return;
    }
    for (Vertex w : g.neighbors(stack.back())) {
      if (w <= s || on_path[w]) continue;
      stack.push_back(w);
      on_path[w] = true;
      grow();
      on_path[w] = false;
      stack.pop_back();
    }
  };
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    stack.assign(1, s);
    grow();
  }
  std::sort(out.begin(), out.end());
  return out;
}

PathScan scan_typed_paths(const Graph& g, const DistanceMatrix& d, const ThetaPartition& tp, PathType type,
                          int max_length) {
  PathScan scan;
  const IncidentClassFamily fam(g, tp);
  const std::size_t min_vertices = type == PathType::kTypeTwo ? 4 : 2;
  for_each_simple_path(g, max_length, [&](std::span<const Vertex> p) {
    if (p.size() < min_vertices || scan.counterexample) return;
    ++scan.paths;
    const bool typed = type == PathType::kTypeOne ? is_type_one_path(g, tp, fam, p).holds
                                                  : is_type_two_path(g, tp, fam, p).holds;
    if (!typed) return;
    ++scan.matching;
    if (!is_geodesic_path(d, p)) scan.counterexample = std::vector<Vertex>(p.begin(), p.end());
  });
  return scan;
}

GirthSixEquivalence girth_six_equivalence(const Graph& g, const ConvexCycleSet& ccs, int k) {
  GirthSixEquivalence eq;
  eq.uniform_six = ccs.uniform_length() == 6;
  eq.three_paths_closed = every_3path_in_6cycle(g).holds;
  if (k >= 1 && k <= 8) eq.doubled_odd = verify_isomorphism(g, doubled_odd(k)).has_value();
  return eq;
}

bool is_hypercube_graph(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 0 || (n & (n - 1)) != 0) return false;
  const int k = std::countr_zero(static_cast<unsigned>(n));
  if (k > 16) return false;
  return verify_isomorphism(g, hypercube(k)).has_value();
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kPass: return "PASS";
    case Status::kFail: return "FAIL";
    case Status::kSkip: return "SKIP";
  }
  return "UNKNOWN";
}

bool GraphAudit::passed() const {
  return std::none_of(properties.begin(), properties.end(),
                      [](const PropertyResult& p) { return p.status == Status::kFail; });
}

int CorpusAudit::count(Status s) const {
  int total = 0;
  for (const auto& g : graphs) {
    total += static_cast<int>(std::count_if(g.properties.begin(), g.properties.end(),
                                            [&](const PropertyResult& p) { return p.status == s; }));
  }
  total += static_cast<int>(std::count_if(corpus_properties.begin(), corpus_properties.end(),
                                          [&](const PropertyResult& p) { return p.status == s; }));
  return total;
}

namespace {

struct Verdict {
  Status status = Status::kPass;
  std::string detail;
};

Verdict pass(std::string detail = {}) { return {Status::kPass, std::move(detail)}; }
Verdict fail(std::string detail) { return {Status::kFail, std::move(detail)}; }
Verdict skip(std::string detail) { return {Status::kSkip, std::move(detail)}; }

PropertyResult run_property(const std::string& name, const std::function<Verdict()>& body) {
  try {
    auto v = body();
    return {name, v.status, std::move(v.detail)};
  } catch (const std::exception& ex) {
    return {name, Status::kFail, std::string("exception: ") + ex.what()};
  }
}

std::string pair_text(const Graph& g, Vertex u, Vertex v) { return "(" + g.name(u) + ", " + g.name(v) + ")"; }

std::string path_text(const Graph& g, std::span<const Vertex> p) {
  std::string s;
  for (Vertex v : p) s += (s.empty() ? "" : "-") + g.name(v);
  return s;
}

// Stable per-graph stream: the seed mixed with the graph's name.
std::mt19937_64 graph_rng(std::uint64_t seed, const std::string& name) {
  std::vector<std::uint32_t> words = {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  for (unsigned char c : name) words.push_back(c);
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

std::vector<Vertex> random_simple_path(const Graph& g, std::mt19937_64& rng, int max_length) {
  std::uniform_int_distribution<Vertex> pick(0, g.vertex_count() - 1);
  std::uniform_int_distribution<int> length(1, max_length);
  std::vector<Vertex> p = {pick(rng)};
  std::vector<bool> used(g.vertex_count(), false);
  used[p[0]] = true;
  const int target = length(rng);
  while (static_cast<int>(p.size()) <= target) {
    std::vector<Vertex> options;
    for (Vertex w : g.neighbors(p.back())) {
      if (!used[w]) options.push_back(w);
    }
    if (options.empty()) break;
    Vertex w = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    used[w] = true;
    p.push_back(w);
  }
  return p;
}

std::vector<Vertex> random_geodesic(const Graph& g, const DistanceMatrix& d, std::mt19937_64& rng) {
  std::uniform_int_distribution<Vertex> pick(0, g.vertex_count() - 1);
  const Vertex u = pick(rng);
  const Vertex v = pick(rng);
  std::vector<Vertex> p = {u};
  while (p.back() != v) {
    std::vector<Vertex> closer;
    for (Vertex w : g.neighbors(p.back())) {
      if (d(w, v) == d(p.back(), v) - 1) closer.push_back(w);
    }
    p.push_back(closer[std::uniform_int_distribution<std::size_t>(0, closer.size() - 1)(rng)]);
  }
  return p;
}

std::optional<int> single_param(const CorpusEntry& e, Family f) {
  if (e.spec.family != f) return std::nullopt;
  return e.spec.params.at(0);
}

class Auditor {
 public:
  Auditor(const CorpusEntry& entry, const AuditOptions& options)
      : e_(entry), g_(entry.graph), opt_(options), rng_(graph_rng(options.seed, entry.name)) {}

  GraphAudit run() {
    out_.name = e_.name;
    out_.vertices = g_.vertex_count();
    out_.edges = g_.edge_count();
    d_ = all_pairs_distances(g_);
    rec_ = is_partial_cube(g_, d_);
    out_.partial_cube = rec_.is_partial_cube();
    if (rec_) {
      tp_ = &*rec_.partition;
      ccs_ = enumerate_convex_cycles(g_, d_, *tp_);
      out_.spectrum = ccs_->spectrum;
    }
    try {
      cls_ = classify(g_, {.certify = degree_profile(g_).regular && g_.vertex_count() <= kIsomorphismVertexBound});
      out_.classification = cls_->label();
    } catch (const Error& ex) {
      out_.classification = std::string("ERROR: ") + ex.what();
    }

    graph_core_properties();
    recognition_properties();
    if (rec_) {
      theta_properties();
      convexity_properties();
    }
    family_properties();
    class_properties();
    classify_properties();
    io_properties();
    return std::move(out_);
  }

 private:
  void check(const std::string& name, const std::function<Verdict()>& body) {
    out_.properties.push_back(run_property(name, body));
  }

  // Every pair when small, otherwise a seeded sample.
  std::vector<std::pair<Vertex, Vertex>> pairs_to_check() {
    const int n = g_.vertex_count();
    std::vector<std::pair<Vertex, Vertex>> out;
    if (n <= 64) {
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) out.push_back({u, v});
      }
      return out;
    }
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    for (int i = 0; i < 2000; ++i) out.push_back({pick(rng_), pick(rng_)});
    return out;
  }

  void graph_core_properties() {
    check("graph.distances_match_bfs", [&] {
      for (Vertex s = 0; s < g_.vertex_count(); ++s) {
        auto row = bfs_distances(g_, s);
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
          if (row[v] != d_(s, v)) return fail("distance " + pair_text(g_, s, v));
        }
      }
      if (!(serial::all_pairs_distances(g_) == d_)) return fail("serial and parallel distance matrices differ");
      return pass();
    });
    const auto pairs = pairs_to_check();
    check("graph.interval_axioms", [&] {
      for (auto [u, v] : pairs) {
        if (!d_.reachable(u, v)) continue;
        auto iuv = interval(g_, d_, u, v);
        if (!iuv.contains(u) || !iuv.contains(v)) return fail("endpoints missing from I" + pair_text(g_, u, v));
        if (!(iuv == interval(g_, d_, v, u))) return fail("I" + pair_text(g_, u, v) + " not symmetric");
        for (Vertex z = 0; z < g_.vertex_count(); ++z) {
          const bool between = d_.reachable(u, z) && d_(u, z) + d_(z, v) == d_(u, v);
          if (between != iuv.contains(z)) return fail("membership of " + g_.name(z) + " in I" + pair_text(g_, u, v));
        }
      }
      return pass(std::to_string(pairs.size()) + " pairs");
    });
    check("graph.bipartite_girth_even", [&] {
      if (!is_bipartite(g_).bipartite) return skip("not bipartite");
      auto gi = girth(g_);
      if (gi && *gi % 2 != 0) return fail("odd girth " + std::to_string(*gi));
      return pass(gi ? "girth " + std::to_string(*gi) : "acyclic");
    });
    check("graph.geodesic_count", [&] {
      for (auto [u, v] : pairs) {
        if (!d_.reachable(u, v)) continue;
        auto c = geodesic_count(g_, d_, u, v);
        if (c < 1) return fail("no geodesic " + pair_text(g_, u, v));
        if (d_(u, v) == 1 && c != 1) return fail("edge " + pair_text(g_, u, v) + " has several geodesics");
      }
      return pass();
    });
    check("graph.product_counts", [&]() -> Verdict {
      if (e_.spec.family != Family::kProduct && e_.spec.family != Family::kGrid) return skip("not a product");
      std::vector<Graph> factors;
      if (e_.spec.family == Family::kGrid) {
        factors = {path(e_.spec.params[0]), path(e_.spec.params[1])};
      } else {
        for (const auto& f : e_.spec.factors) factors.push_back(f.build());
      }
      long long nv = factors[0].vertex_count();
      long long ne = factors[0].edge_count();
      for (std::size_t i = 1; i < factors.size(); ++i) {
        const long long hv = factors[i].vertex_count();
        const long long he = factors[i].edge_count();
        ne = nv * he + hv * ne;
        nv *= hv;
      }
      if (nv != g_.vertex_count() || ne != g_.edge_count()) return fail("counts differ from the product formula");
      return pass();
    });
  }

  void recognition_properties() {
    check("recognition.certificate", [&] {
      if (rec_) {
        if (find_non_isometric_pair(*rec_.labeling, d_)) return fail("labeling not isometric");
        if (e_.designated_negative) return fail("designated negative accepted");
        return pass("idim " + std::to_string(rec_.partition->class_count()));
      }
      if (!e_.designated_negative) return fail("generated graph rejected: " + std::string(to_string(rec_.failure)));
      switch (rec_.failure) {
        case RecognitionFailure::kNotBipartite:
          if (rec_.odd_cycle.size() % 2 == 1) return pass("odd cycle of length " + std::to_string(rec_.odd_cycle.size()));
          return fail("odd-cycle witness has even length");
        case RecognitionFailure::kThetaNotTransitive: {
          const auto& w = *rec_.transitivity;
          if (theta_related(g_, d_, w.e, w.f) && theta_related(g_, d_, w.f, w.h) && !theta_related(g_, d_, w.e, w.h)) {
            return pass("transitivity witness verified");
          }
          return fail("transitivity witness does not check out");
        }
        default:
          return pass(std::string(to_string(rec_.failure)));
      }
    });
  }

  void theta_properties() {
    const auto& tp = *tp_;
    check("theta.reflexive_symmetric", [&] {
      auto rows = theta_relation_rows(g_, d_);
      for (EdgeId e = 0; e < g_.edge_count(); ++e) {
        if (!rows[e].test(e)) return fail("edge " + std::to_string(e) + " not related to itself");
        for (EdgeId f = 0; f < g_.edge_count(); ++f) {
          if (rows[e].test(f) != rows[f].test(e)) return fail("asymmetric pair of edges");
        }
      }
      if (rows != serial::theta_relation_rows(g_, d_)) return fail("serial and parallel relation rows differ");
      return pass();
    });
    check("theta.adjacent_edges_unrelated", [&] {
      for (Vertex v = 0; v < g_.vertex_count(); ++v) {
        auto inc = g_.incident_edges(v);
        for (std::size_t i = 0; i < inc.size(); ++i) {
          for (std::size_t j = i + 1; j < inc.size(); ++j) {
            if (tp.class_of[inc[i]] == tp.class_of[inc[j]]) return fail("related edges meet at " + g_.name(v));
          }
        }
      }
      return pass();
    });
    check("theta.geodesic_iff_classes_distinct", [&] {
      auto distinct_classes = [&](const std::vector<Vertex>& p) {
        std::set<int> seen;
        for (std::size_t i = 1; i < p.size(); ++i) {
          if (!seen.insert(tp.class_of[*g_.edge_id(p[i - 1], p[i])]).second) return false;
        }
        return true;
      };
      const int max_len = std::max(2, d_.diameter() + 2);
      for (int i = 0; i < opt_.path_samples; ++i) {
        auto p = random_simple_path(g_, rng_, max_len);
        if (is_geodesic_path(d_, p) != distinct_classes(p)) return fail("path " + path_text(g_, p));
        auto q = random_geodesic(g_, d_, rng_);
        if (!distinct_classes(q)) return fail("geodesic with repeated class " + path_text(g_, q));
      }
      return pass(std::to_string(opt_.path_samples) + " paths and geodesics");
    });
    check("theta.labeling_isometric", [&] {
      if (auto bad = find_non_isometric_pair(*rec_.labeling, d_)) return fail(pair_text(g_, bad->first, bad->second));
      return pass();
    });
    check("theta.incident_classes_match_degree", [&] {
      const IncidentClassFamily fam(g_, tp);
      for (Vertex v = 0; v < g_.vertex_count(); ++v) {
        if (static_cast<int>(fam.classes(v).size()) != g_.degree(v)) return fail("at " + g_.name(v));
        if (fam.classes(v) != incident_classes(g_, tp, v)) return fail("family and direct lists differ");
      }
      return pass();
    });
    check("theta.class_cut_splits_in_two", [&] {
      for (int c = 0; c < tp.class_count(); ++c) {
        const auto [u, v] = g_.edge(tp.classes[c].front());
        auto h = halfspaces(g_, d_, u, v);
        std::vector<int> comp(g_.vertex_count(), -1);
        int comps = 0;
        for (Vertex s = 0; s < g_.vertex_count(); ++s) {
          if (comp[s] >= 0) continue;
          std::vector<Vertex> queue = {s};
          comp[s] = comps;
          for (std::size_t i = 0; i < queue.size(); ++i) {
            auto nb = g_.neighbors(queue[i]);
            auto inc = g_.incident_edges(queue[i]);
            for (std::size_t j = 0; j < nb.size(); ++j) {
              if (tp.class_of[inc[j]] == c || comp[nb[j]] >= 0) continue;
              comp[nb[j]] = comps;
              queue.push_back(nb[j]);
            }
          }
          ++comps;
        }
        if (comps != 2) return fail("class " + std::to_string(c) + " leaves " + std::to_string(comps) + " parts");
        for (Vertex w = 0; w < g_.vertex_count(); ++w) {
          if ((comp[w] == comp[u]) != h.w_uv.contains(w)) return fail("side of " + g_.name(w));
        }
      }
      return pass();
    });
  }

  void convexity_properties() {
    const auto& ccs = *ccs_;
    check("convexity.oracle_agreement", [&] {
      if (g_.vertex_count() > opt_.oracle_bound) return skip("above the oracle bound");
      if (!(enumerate_convex_cycles_bruteforce(g_, d_, opt_.oracle_bound) == ccs)) return fail("canonical sets differ");
      return pass(std::to_string(ccs.cycles.size()) + " cycles");
    });
    check("convexity.serial_agreement", [&] {
      if (!(serial::enumerate_convex_cycles(g_, d_, *tp_) == ccs)) return fail("serial enumeration differs");
      return pass();
    });
    check("convexity.cycles_isometric_antipodal", [&] {
      for (const auto& c : ccs.cycles) {
        const int len = c.length();
        for (int i = 0; i < len; ++i) {
          for (int j = 0; j < len; ++j) {
            if (d_(c.vertices[i], c.vertices[j]) != std::min(std::abs(i - j), len - std::abs(i - j))) {
              return fail("cycle not isometric");
            }
          }
        }
        auto cls = cycle_classes(g_, *tp_, c);
        for (int i = 0; i < len / 2; ++i) {
          if (cls[i] != cls[i + len / 2]) return fail("antipodal edges in different classes");
        }
      }
      return pass();
    });
    check("convexity.cycle_class_pairs", [&] {
      for (const auto& c : ccs.cycles) {
        auto cls = cycle_classes(g_, *tp_, c);
        std::map<int, std::vector<int>> where;
        for (int i = 0; i < c.length(); ++i) where[cls[i]].push_back(i);
        if (static_cast<int>(where.size()) != c.length() / 2) return fail("wrong number of classes on a cycle");
        for (const auto& [cl, idx] : where) {
          if (idx.size() != 2 || idx[1] - idx[0] != c.length() / 2) return fail("class not on one antipodal pair");
        }
      }
      return pass();
    });
    check("convexity.shortest_cycles_convex", [&] {
      auto gi = girth(g_);
      if (!gi) return skip("acyclic");
      std::set<Cycle> convex(ccs.cycles.begin(), ccs.cycles.end());
      auto shortest = cycles_of_length(g_, *gi);
      for (const auto& c : shortest) {
        if (!convex.contains(c)) return fail("a shortest cycle is missing");
      }
      return pass(std::to_string(shortest.size()) + " shortest cycles");
    });
    check("convexity.hull_closure_axioms", [&] {
      const int n = g_.vertex_count();
      std::uniform_int_distribution<Vertex> pick(0, n - 1);
      for (int t = 0; t < 20; ++t) {
        VertexSet s(static_cast<std::size_t>(n));
        for (int i = 0; i < 1 + t % 3; ++i) s.insert(pick(rng_));
        VertexSet bigger = s;
        bigger.insert(pick(rng_));
        auto hs = convex_hull(g_, d_, s);
        if (!s.is_subset_of(hs)) return fail("hull not extensive");
        if (!(convex_hull(g_, d_, hs) == hs)) return fail("hull not idempotent");
        if (!hs.is_subset_of(convex_hull(g_, d_, bigger))) return fail("hull not monotone");
        if (!is_convex_set(g_, d_, hs).convex) return fail("hull not convex");
      }
      return pass();
    });
    check("convexity.hypercube_cycle_count", [&]() -> Verdict {
      auto n = single_param(e_, Family::kHypercube);
      if (!n || *n < 2 || *n > 5) return skip("not Q_n with 2 <= n <= 5");
      const long long expected = static_cast<long long>(*n) * (*n - 1) / 2 * (1LL << (*n - 2));
      if (static_cast<long long>(ccs.cycles.size()) != expected) {
        return fail(std::to_string(ccs.cycles.size()) + " != " + std::to_string(expected));
      }
      return pass(std::to_string(expected) + " cycles");
    });
  }

  void family_properties() {
    check("families.generator_shape", [&]() -> Verdict {
      const auto prof = degree_profile(g_);
      if (auto n = single_param(e_, Family::kHypercube)) {
        if (g_.vertex_count() != (1 << *n) || (*n >= 1 && (!prof.regular || prof.k != *n))) return fail("not n-regular");
        if (*n >= 2 && girth(g_) != 4) return fail("girth is not 4");
        if (!rec_ || rec_.partition->class_count() != *n) return fail("not a partial cube of idim n");
        return pass();
      }
      if (auto k = single_param(e_, Family::kDoubledOdd)) {
        if (!prof.regular || prof.k != *k) return fail("not k-regular");
        if (!is_bipartite(g_).bipartite) return fail("not bipartite");
        if (*k >= 2 && girth(g_) != 6) return fail("girth is not 6");
        if (!rec_ || rec_.partition->class_count() != 2 * *k - 1) return fail("not a partial cube of idim 2k-1");
        return pass();
      }
      if (auto len = single_param(e_, Family::kCycle); len && *len % 2 == 0) {
        if (!rec_ || rec_.partition->class_count() != *len / 2) return fail("idim of an even cycle is not n");
        return pass();
      }
      return skip("no generator-specific shape");
    });
  }

  void class_properties() {
    auto r = class_membership(g_, d_);
    check("classes.chain", [&] {
      if (auto v = find_chain_violation(r)) return fail(*v);
      return pass();
    });
    check("classes.almost_median_routes_agree", [&] {
      if (!r.partial_cube) return skip("not a partial cube");
      if (r.almost_median != r.almost_median_via_cycles) return fail("U-set isometry vs convex cycles");
      return pass(r.almost_median ? "both true" : "both false");
    });
    check("classes.tiled_sandwich", [&] {
      if (!r.partial_cube) return skip("not a partial cube");
      if (r.almost_median && !r.tiled) return fail("almost-median but not tiled");
      if (r.tiled && !r.semi_median) return fail("tiled but not semi-median");
      return pass();
    });
    check("classes.semi_median_square_cycles", [&] {
      if (!r.semi_median) return skip("not semi-median");
      if (r.almost_median != is_almost_median_via_cycles(*r.convex_cycles)) return fail("disagreement");
      return pass();
    });
    check("classes.median_is_partial_cube", [&] {
      if (r.median && !r.partial_cube) return fail("median graph rejected by recognition");
      return pass();
    });
    check("classes.median_serial_agreement", [&] {
      if (g_.vertex_count() > 64) return skip("above 64 vertices");
      auto a = is_median(g_, d_);
      auto b = serial::is_median(g_, d_);
      if (a.median != b.median || a.witness != b.witness) return fail("serial and parallel median checks differ");
      return pass();
    });
  }

  void classify_properties() {
    check("classify.no_internal_violation", [&] {
      if (!cls_) return fail(out_.classification);
      return pass(cls_->label());
    });
    if (!cls_) return;
    const auto& c = *cls_;
    const auto prof = degree_profile(g_);
    const bool regular_pc = rec_ && prof.regular && g_.vertex_count() > 2;

    check("classify.generator_soundness", [&]() -> Verdict {
      std::string expected;
      if (auto k = single_param(e_, Family::kHypercube); k && *k >= 2 && *k <= 5) {
        expected = "HYPERCUBE(" + std::to_string(*k) + ")";
      } else if (auto k2 = single_param(e_, Family::kDoubledOdd); k2 && *k2 >= 3 && *k2 <= 4) {
        expected = "DOUBLED_ODD(" + std::to_string(*k2) + ")";
        if (!c.isomorphism) return fail("no certified isomorphism");
      } else if (auto len = single_param(e_, Family::kCycle); len && *len % 2 == 0 && *len >= 8 && *len <= 20) {
        expected = "EVEN_CYCLE(" + std::to_string(*len / 2) + ")";
      } else {
        return skip("not a covered generator");
      }
      if (c.label() != expected) return fail(c.label() + " != " + expected);
      return pass(expected);
    });
    check("classify.girth_six_equivalence", [&] {
      if (!regular_pc || girth(g_) != 6) return skip("not a regular partial cube of girth 6");
      auto eq = girth_six_equivalence(g_, *ccs_, *prof.k);
      if (!eq.agree()) {
        return fail(std::string("uniform-6 ") + (eq.uniform_six ? "1" : "0") + ", 3-paths " +
                    (eq.three_paths_closed ? "1" : "0") + ", doubled odd " + (eq.doubled_odd ? "1" : "0"));
      }
      return pass(eq.uniform_six ? "all true" : "all false");
    });
    auto typed_paths = [&](PathType type, int uniform) -> Verdict {
      if (!rec_ || ccs_->uniform_length() != uniform) {
        return skip("spectrum not uniformly " + std::to_string(uniform));
      }
      auto scan = scan_typed_paths(g_, d_, *tp_, type, opt_.max_path_length);
      if (scan.counterexample) return fail("non-geodesic typed path " + path_text(g_, *scan.counterexample));
      return pass(std::to_string(scan.matching) + " of " + std::to_string(scan.paths) + " paths typed");
    };
    check("classify.type_one_paths_geodesic", [&] { return typed_paths(PathType::kTypeOne, 4); });
    check("classify.type_two_paths_geodesic", [&] { return typed_paths(PathType::kTypeTwo, 6); });
    check("classify.hypercube_constant_classes", [&] {
      if (c.outcome != Outcome::kHypercube) return skip("not HYPERCUBE");
      const IncidentClassFamily fam(g_, *tp_);
      for (Vertex v = 1; v < g_.vertex_count(); ++v) {
        if (fam.classes(v) != fam.classes(0)) return fail("F differs at " + g_.name(v));
      }
      return pass();
    });
    check("classify.regular_almost_median_is_hypercube", [&] {
      const bool am = rec_ && is_almost_median(g_, d_, *tp_).holds;
      const bool lhs = regular_pc && am;
      const bool rhs = c.outcome == Outcome::kHypercube;
      if (lhs != rhs) return fail(std::string("regular almost-median ") + (lhs ? "1" : "0") + ", hypercube " + (rhs ? "1" : "0"));
      return pass();
    });
    check("classify.large_girth_is_even_cycle", [&] {
      auto gi = girth(g_);
      if (!regular_pc || (gi && *gi <= 6)) return skip("not a regular partial cube of girth > 6");
      if (c.outcome != Outcome::kEvenCycle) return fail(c.label());
      return pass(c.label());
    });
  }

  void io_properties() {
    check("io.round_trip", [&] {
      auto back6 = parse_graph6(to_graph6(g_));
      if (!verify_isomorphism(g_, back6)) return fail("graph6 round trip not isomorphic");
      auto back_edges = parse_edge_list(to_edge_list(g_));
      if (!verify_isomorphism(g_, back_edges)) return fail("edge-list round trip not isomorphic");
      if (g_.has_names() && back_edges.names() != g_.names()) return fail("edge-list round trip lost names");
      return pass();
    });
  }

  const CorpusEntry& e_;
  const Graph& g_;
  AuditOptions opt_;
  std::mt19937_64 rng_;
  GraphAudit out_;
  DistanceMatrix d_;
  Recognition rec_;
  const ThetaPartition* tp_ = nullptr;
  std::optional<ConvexCycleSet> ccs_;
  std::optional<Classification> cls_;
};

std::vector<PropertyResult> corpus_properties(const std::vector<CorpusEntry>& entries,
                                              const std::vector<GraphAudit>& audits) {
  std::vector<PropertyResult> out;
  out.push_back(run_property("corpus.regular_almost_median_set_is_hypercubes", [&] {
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;
    for (const auto& e : entries) {
      const auto d = all_pairs_distances(e.graph);
      auto rec = is_partial_cube(e.graph, d);
      if (rec && degree_profile(e.graph).regular && e.graph.vertex_count() > 2 &&
          is_almost_median(e.graph, d, *rec.partition).holds) {
        lhs.push_back(e.name);
      }
      if (e.graph.vertex_count() > 2 && is_hypercube_graph(e.graph)) rhs.push_back(e.name);
    }
    if (lhs != rhs) return fail("sets differ");
    return pass(std::to_string(lhs.size()) + " graphs");
  }));
  out.push_back(run_property("corpus.doubled_odd_2_is_six_cycle", [&] {
    if (!verify_isomorphism(doubled_odd(2), even_cycle(3))) return fail("not isomorphic");
    return pass();
  }));
  out.push_back(run_property("corpus.k23_transitivity_witness", [&] {
    auto rec = is_partial_cube(complete_bipartite(2, 3));
    if (rec || rec.failure != RecognitionFailure::kThetaNotTransitive) return fail("no transitivity witness");
    return pass();
  }));
  out.push_back(run_property("corpus.audited_graph_count", [&] {
    int pcs = static_cast<int>(std::count_if(audits.begin(), audits.end(), [](const GraphAudit& a) { return a.partial_cube; }));
    return pass(std::to_string(audits.size()) + " graphs, " + std::to_string(pcs) + " partial cubes");
  }));
  return out;
}

}  // namespace

GraphAudit audit_graph(const CorpusEntry& entry, const AuditOptions& options) {
  return Auditor(entry, options).run();
}

CorpusAudit audit_corpus(CorpusProfile profile, const AuditOptions& options) {
  CorpusAudit audit;
  audit.profile = profile;
  audit.seed = options.seed;
  const auto entries = corpus(profile);
  audit.graphs.resize(entries.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) audit.graphs[i] = audit_graph(entries[i], options);
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  audit.corpus_properties = corpus_properties(entries, audit.graphs);
  return audit;
}

namespace {

Json properties_json(const std::vector<PropertyResult>& props) {
  Json out = Json::array();
  for (const auto& p : props) {
    out.push_back({{"name", p.name}, {"status", std::string(to_string(p.status))}, {"detail", p.detail}});
  }
  return out;
}

}  // namespace

Json audit_json(const CorpusAudit& audit) {
  Json graphs = Json::array();
  for (const auto& g : audit.graphs) {
    graphs.push_back({{"name", g.name},
                      {"vertices", g.vertices},
                      {"edges", g.edges},
                      {"partial_cube", g.partial_cube},
                      {"classification", g.classification},
                      {"spectrum", spectrum_json(g.spectrum)},
                      {"passed", g.passed()},
                      {"properties", properties_json(g.properties)}});
  }
  Json out;
  out["profile"] = std::string(to_string(audit.profile));
  out["seed"] = audit.seed;
  out["graphs"] = std::move(graphs);
  out["corpus_properties"] = properties_json(audit.corpus_properties);
  out["summary"] = {{"passed", audit.count(Status::kPass)},
                    {"failed", audit.count(Status::kFail)},
                    {"skipped", audit.count(Status::kSkip)},
                    {"ok", audit.passed()}};
  return out;
}

std::string audit_text(const CorpusAudit& audit) {
  std::ostringstream out;
  out << "corpus " << to_string(audit.profile) << ", seed " << audit.seed << '\n';
  for (const auto& g : audit.graphs) {
    out << (g.passed() ? "PASS  " : "FAIL  ") << g.name << "  n=" << g.vertices << " m=" << g.edges << "  "
        << g.classification << '\n';
    for (const auto& p : g.properties) {
      if (p.status == Status::kFail) out << "      " << p.name << ": " << p.detail << '\n';
    }
  }
  for (const auto& p : audit.corpus_properties) {
    out << to_string(p.status) << "  " << p.name << (p.detail.empty() ? "" : ": " + p.detail) << '\n';
  }
  out << "passed " << audit.count(Status::kPass) << ", failed " << audit.count(Status::kFail) << ", skipped "
      << audit.count(Status::kSkip) << '\n';
  return out.str();
}

}  // namespace cubekit
