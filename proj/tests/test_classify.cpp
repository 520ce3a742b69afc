#include <doctest.h>

#include <numeric>
#include <random>

#include "cubekit/classify.hpp"
#include "cubekit/error.hpp"
#include "cubekit/families.hpp"
#include "support.hpp"

using namespace cubekit;
using cubekit::test::by_name;
using cubekit::test::from_pairs;

namespace {

Graph build(const char* spec) { return FamilySpec::parse(spec).build(); }

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& map) {
  if (static_cast<int>(map.size()) != g.vertex_count() || g.edge_count() != h.edge_count()) return false;
  std::vector<char> hit(h.vertex_count(), 0);
  for (Vertex v : map) {
    if (v < 0 || v >= h.vertex_count() || hit[v]) return false;
    hit[v] = 1;
  }
  for (const auto& e : g.edges()) {
    if (!h.adjacent(map[e.u], map[e.v])) return false;
  }
  return true;
}

Graph shuffled(const Graph& g, unsigned seed) {
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : g.edges()) pairs.emplace_back(perm[e.u], perm[e.v]);
  return Graph::from_edge_list(pairs, g.vertex_count());
}

// Every 3-path a-b-c-e closes through two further vertices x, y into a 6-cycle.
std::optional<std::array<Vertex, 4>> three_path_outside_six_cycles(const Graph& g) {
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    for (Vertex b : g.neighbors(a)) {
      for (Vertex c : g.neighbors(b)) {
        if (c == a) continue;
        for (Vertex e : g.neighbors(c)) {
          if (e == a || e == b) continue;
          bool closed = false;
          for (Vertex x : g.neighbors(e)) {
            if (x == a || x == b || x == c) continue;
            for (Vertex y : g.neighbors(x)) {
              if (y != a && y != b && y != c && y != e && g.adjacent(y, a)) closed = true;
            }
          }
          if (!closed) return std::array<Vertex, 4>{a, b, c, e};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("classification outcomes") {
  auto q4 = classify(hypercube(4));
  CHECK(q4.outcome == Outcome::kHypercube);
  CHECK(q4.parameter == 4);
  CHECK(q4.label() == "HYPERCUBE(4)");
  CHECK(q4.degree == 4);
  CHECK(q4.idim == 4);
  CHECK(q4.convex_cycle_length == 4);
  CHECK(q4.labeling.has_value());

  auto do3 = classify(doubled_odd(3));
  CHECK(do3.label() == "DOUBLED_ODD(3)");
  CHECK(do3.idim == 5);
  CHECK(do3.spectrum == std::map<int, int>{{6, 20}});

  auto c10 = classify(even_cycle(5));
  CHECK(c10.label() == "EVEN_CYCLE(5)");
  CHECK(c10.convex_cycle_length == 10);

  auto q3m = classify(q3_minus());
  CHECK(q3m.label() == "EXCLUDED(NOT_REGULAR)");
  CHECK(q3m.reason == ExclusionReason::kNotRegular);

  auto do2 = classify(doubled_odd(2));
  CHECK(do2.label() == "DOUBLED_ODD(2)");
  CHECK_FALSE(do2.note.empty());
  auto c6 = classify(cycle(6));
  CHECK(c6.label() == "DOUBLED_ODD(2)");
}

TEST_CASE("exclusions") {
  CHECK(classify(complete_bipartite(2, 3)).reason == ExclusionReason::kNotPartialCube);
  CHECK(classify(cycle(5)).reason == ExclusionReason::kNotPartialCube);
  CHECK(classify(from_pairs({{0, 1}, {2, 3}})).reason == ExclusionReason::kNotPartialCube);
  CHECK(classify(hypercube(0)).reason == ExclusionReason::kTrivialK1K2);
  CHECK(classify(path(2)).reason == ExclusionReason::kTrivialK1K2);
  CHECK(classify(path(4)).reason == ExclusionReason::kNotRegular);
  CHECK(classify(build("GRID:3x3")).label() == "EXCLUDED(NOT_REGULAR)");

  // Hexagonal prism: 3-regular with convex squares and hexagons.
  auto prism = classify(build("PROD(C:6,P:2)"));
  CHECK(prism.reason == ExclusionReason::kMixedCycleLengths);
  CHECK(prism.spectrum == std::map<int, int>{{4, 6}, {6, 2}});
  CHECK(prism.degree == 3);

  auto torus = classify(build("PROD(C:6,C:6)"));
  CHECK(torus.reason == ExclusionReason::kMixedCycleLengths);
  CHECK(torus.parameter == 0);
  CHECK(torus.outcome == Outcome::kExcluded);
}

TEST_CASE("generator soundness") {
  for (int k = 2; k <= 5; ++k) CHECK(classify(hypercube(k)).label() == "HYPERCUBE(" + std::to_string(k) + ")");
  for (int k = 2; k <= 4; ++k) {
    auto c = classify(doubled_odd(k), {.certify = true});
    CHECK(c.label() == "DOUBLED_ODD(" + std::to_string(k) + ")");
    REQUIRE(c.isomorphism.has_value());
    CHECK(is_isomorphism(doubled_odd(k), doubled_odd(k), *c.isomorphism));
    CHECK(static_cast<int>(c.generator_names.size()) == doubled_odd(k).vertex_count());
  }
  for (int n = 4; n <= 10; ++n) {
    auto c = classify(even_cycle(n), {.certify = true});
    CHECK(c.label() == "EVEN_CYCLE(" + std::to_string(n) + ")");
    CHECK(c.isomorphism.has_value());
  }
  // Relabelled copies land in the same class.
  CHECK(classify(shuffled(doubled_odd(3), 7), {.certify = true}).label() == "DOUBLED_ODD(3)");
  CHECK(classify(shuffled(hypercube(4), 11)).label() == "HYPERCUBE(4)");
}

TEST_CASE("hypercube certificate") {
  auto check = [](const Graph& g, int k) {
    auto rec = is_partial_cube(g);
    REQUIRE(rec.is_partial_cube());
    return verify_hypercube(g, *rec.partition, *rec.labeling, k);
  };
  CHECK(check(hypercube(5), 5));
  CHECK_FALSE(check(cycle(6), 3));
  CHECK_FALSE(check(q3_minus(), 3));
  CHECK_FALSE(check(hypercube(3), 4));
}

TEST_CASE("isomorphism search") {
  auto map = verify_isomorphism(doubled_odd(2), even_cycle(3));
  REQUIRE(map.has_value());
  CHECK(is_isomorphism(doubled_odd(2), even_cycle(3), *map));

  CHECK_FALSE(verify_isomorphism(hypercube(3), cycle(8)).has_value());
  CHECK_FALSE(verify_isomorphism(q3_minus(), path(7)).has_value());
  CHECK_FALSE(verify_isomorphism(build("PROD(C:6,P:2)"), doubled_odd(3)).has_value());
  // Same size and degree sequence: C_12 against two disjoint hexagons.
  std::vector<std::pair<int, int>> hexagons;
  for (int i = 0; i < 6; ++i) {
    hexagons.emplace_back(i, (i + 1) % 6);
    hexagons.emplace_back(6 + i, 6 + (i + 1) % 6);
  }
  CHECK_FALSE(verify_isomorphism(cycle(12), Graph::from_edge_list(hexagons)).has_value());

  for (auto spec : {"Q:4", "DO:3", "DO:4", "PROD(C:6,P:3)", "Q3MINUS"}) {
    CAPTURE(spec);
    auto g = build(spec);
    auto self = verify_isomorphism(g, g);
    REQUIRE(self.has_value());
    CHECK(is_isomorphism(g, g, *self));
    auto h = shuffled(g, 3);
    auto m = verify_isomorphism(g, h);
    REQUIRE(m.has_value());
    CHECK(is_isomorphism(g, h, *m));
  }

  try {
    verify_isomorphism(even_cycle(1001), even_cycle(1001));
    FAIL("expected SIZE_BOUND_EXCEEDED");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSizeBoundExceeded);
  }
}

TEST_CASE("type I paths") {
  // In C_8 the class of edge i-(i+1) is i mod 4, so F(v) = {v-1, v} mod 4.
  auto c8 = cycle(8);
  auto tp = *is_partial_cube(c8).partition;
  for (Vertex v = 0; v < 8; ++v) {
    Vertex w = (v + 1) % 8;
    std::vector<Vertex> p{v, w};
    CHECK(is_type_one_path(c8, tp, p));
  }
  // 0-1-2: F(0)\F(1) = {3}, F(2)\F(1) = {2}, class 1 of 1-2 misses F(0) = {3,0},
  // class 0 of 0-1 misses F(2) = {1,2}.
  std::vector<Vertex> two{0, 1, 2};
  CHECK(is_type_one_path(c8, tp, two));
  // Every arc of C_8 against the four conditions evaluated on F(v) = {v-1, v}.
  auto cls = [](Vertex a, Vertex b) { return ((b == (a + 1) % 8) ? a : b) % 4; };
  auto at = [](int c, Vertex v) { return c == (v + 7) % 4 || c == v % 4; };
  for (int len = 1; len <= 7; ++len) {
    for (Vertex start = 0; start < 8; ++start) {
      for (int dir : {1, 7}) {
        std::vector<Vertex> arc;
        for (int i = 0; i <= len; ++i) arc.push_back((start + i * dir) % 8);
        auto other = [&](Vertex v, Vertex w) {
          for (int c : {(v + 7) % 4, v % 4}) {
            if (!at(c, w)) return true;
          }
          return false;
        };
        bool expected = other(arc[0], arc[1]) && other(arc[len], arc[len - 1]);
        for (int i = 1; i < len; ++i) {
          expected = expected && !at(cls(arc[i], arc[i + 1]), arc[i - 1]) && !at(cls(arc[i - 1], arc[i]), arc[i + 1]);
        }
        CHECK(is_type_one_path(c8, tp, arc).holds == expected);
      }
    }
  }

  auto q3 = hypercube(3);
  auto tq = *is_partial_cube(q3).partition;
  for (const auto& e : q3.edges()) {
    std::vector<Vertex> p{e.u, e.v};
    CHECK_FALSE(is_type_one_path(q3, tq, p));
  }

  std::vector<Vertex> bad{0, 2};
  try {
    is_type_one_path(c8, tp, bad);
    FAIL("expected NOT_A_PATH");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotAPath);
  }
  std::vector<Vertex> repeat{0, 1, 0};
  CHECK_THROWS_AS(is_type_one_path(c8, tp, repeat), Error);
  std::vector<Vertex> single{0};
  CHECK_THROWS_AS(is_type_one_path(c8, tp, single), Error);
}

TEST_CASE("type II paths") {
  auto do3 = doubled_odd(3);
  auto tp = *is_partial_cube(do3).partition;
  // Any 3-path of the Desargues graph lies in a 6-cycle (brute-force oracle),
  // and that 6-cycle's antipodal edge carries class(e_1) to v_3.
  REQUIRE_FALSE(three_path_outside_six_cycles(do3).has_value());
  std::vector<Vertex> p{0};
  while (p.size() < 4) {
    for (Vertex w : do3.neighbors(p.back())) {
      if (std::find(p.begin(), p.end(), w) == p.end()) {
        p.push_back(w);
        break;
      }
    }
  }
  CHECK_FALSE(is_type_two_path(do3, tp, p));

  auto c12 = cycle(12);
  auto tc = *is_partial_cube(c12).partition;
  for (Vertex v = 0; v < 12; ++v) {
    std::vector<Vertex> q{v, (v + 1) % 12, (v + 2) % 12, (v + 3) % 12};
    CHECK(is_type_two_path(c12, tc, q));
  }

  auto q3 = hypercube(3);
  auto tq = *is_partial_cube(q3).partition;
  std::vector<Vertex> path3{by_name(q3, "000"), by_name(q3, "001"), by_name(q3, "011"), by_name(q3, "111")};
  CHECK_FALSE(is_type_two_path(q3, tq, path3));

  std::vector<Vertex> short_path{0, 1, 2};
  try {
    is_type_two_path(c12, tc, short_path);
    FAIL("expected PATH_TOO_SHORT");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPathTooShort);
  }
  std::vector<Vertex> broken{0, 1, 3, 4};
  try {
    is_type_two_path(c12, tc, broken);
    FAIL("expected NOT_A_PATH");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotAPath);
  }
}

TEST_CASE("path classification") {
  auto c12 = cycle(12);
  auto tp = *is_partial_cube(c12).partition;
  IncidentClassFamily fam(c12, tp);
  std::vector<Vertex> edge{0, 1};
  CHECK(classify_path(c12, tp, fam, edge).type == PathType::kTypeOne);
  auto q3 = hypercube(3);
  auto tq = *is_partial_cube(q3).partition;
  IncidentClassFamily fq(q3, tq);
  std::vector<Vertex> qp{0, 1, 3, 7};
  auto w = classify_path(q3, tq, fq, qp);
  CHECK(w.type == PathType::kNeither);
  CHECK(w.vertices == qp);
  CHECK(to_string(PathType::kTypeTwo) == "TYPE_II");
}

TEST_CASE("3-paths in 6-cycles") {
  for (auto spec : {"DO:3", "DO:4", "C:8", "Q:3", "C:6", "PROD(C:6,P:2)", "GRID:3x3"}) {
    CAPTURE(spec);
    auto g = build(spec);
    auto oracle = three_path_outside_six_cycles(g);
    auto r = every_3path_in_6cycle(g);
    CHECK(r.holds == !oracle.has_value());
    if (!r.holds) {
      REQUIRE(r.witness.has_value());
      auto [a, b, c, e] = *r.witness;
      CHECK(g.adjacent(a, b));
      CHECK(g.adjacent(b, c));
      CHECK(g.adjacent(c, e));
    }
  }
  CHECK(every_3path_in_6cycle(doubled_odd(3)));
  CHECK(every_3path_in_6cycle(doubled_odd(4)));
  CHECK_FALSE(every_3path_in_6cycle(cycle(8)));
}
