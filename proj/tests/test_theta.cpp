#include <doctest.h>

#include <set>

#include "cubekit/error.hpp"
#include "cubekit/families.hpp"
#include "cubekit/serial.hpp"
#include "cubekit/theta.hpp"
#include "support.hpp"

using namespace cubekit;
using cubekit::test::by_name;
using cubekit::test::from_pairs;

namespace {

// Θ straight from the four-distance definition, on Floyd-Warshall distances.
bool theta_oracle(const std::vector<std::vector<int>>& d, Edge a, Edge b) {
  return d[a.u][b.u] + d[a.v][b.v] != d[a.u][b.v] + d[a.v][b.u];
}

std::set<std::set<EdgeId>> class_sets(const ThetaPartition& tp) {
  std::set<std::set<EdgeId>> out;
  for (const auto& c : tp.classes) out.insert(std::set<EdgeId>(c.begin(), c.end()));
  return out;
}

}  // namespace

TEST_CASE("theta_related on small cases") {
  auto c6 = cycle(6);
  auto d6 = all_pairs_distances(c6);
  for (EdgeId e = 0; e < c6.edge_count(); ++e) CHECK(theta_related(c6, d6, e, e));
  CHECK(theta_related(c6, d6, std::pair{0, 1}, std::pair{3, 4}));
  CHECK_FALSE(theta_related(c6, d6, std::pair{0, 1}, std::pair{1, 2}));

  auto q3 = hypercube(3);
  auto d = all_pairs_distances(q3);
  auto v = [&](const char* n) { return by_name(q3, n); };
  CHECK_FALSE(theta_related(q3, d, std::pair{v("000"), v("001")}, std::pair{v("000"), v("010")}));
  CHECK(theta_related(q3, d, std::pair{v("000"), v("001")}, std::pair{v("110"), v("111")}));

  try {
    theta_related(c6, d6, std::pair{0, 2}, std::pair{0, 1});
    FAIL("expected NOT_AN_EDGE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotAnEdge);
  }
}

TEST_CASE("relation rows match the distance definition") {
  for (auto spec : {"Q:3", "DO:3", "C:7", "KB:2,3", "GRID:3x3", "Q3MINUS", "PROD(C:6,P:2)", "KB:3,3"}) {
    CAPTURE(spec);
    auto g = FamilySpec::parse(spec).build();
    auto d = all_pairs_distances(g);
    auto fw = cubekit::test::floyd_warshall(g);
    auto rows = theta_relation_rows(g, d);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      for (EdgeId f = 0; f < g.edge_count(); ++f) {
        REQUIRE(rows[e].test(f) == theta_oracle(fw, g.edge(e), g.edge(f)));
        REQUIRE(theta_related(g, d, e, f) == rows[e].test(f));
      }
    }
    CHECK(serial::theta_relation_rows(g, d) == rows);
  }
}

TEST_CASE("theta partitions of standard families") {
  for (int n = 1; n <= 5; ++n) {
    auto q = hypercube(n);
    auto tp = theta_partition(q, all_pairs_distances(q));
    CHECK(tp.class_count() == n);
    for (const auto& c : tp.classes) CHECK(c.size() == (std::size_t{1} << (n - 1)));
  }
  for (int n = 2; n <= 8; ++n) {
    auto c = even_cycle(n);
    auto tp = theta_partition(c, all_pairs_distances(c));
    CHECK(tp.class_count() == n);
    for (const auto& cls : tp.classes) {
      REQUIRE(cls.size() == 2);
      const auto a = c.edge(cls[0]);
      const auto b = c.edge(cls[1]);
      CHECK(all_pairs_distances(c)(a.u, b.u) + all_pairs_distances(c)(a.v, b.v) >= 2 * n - 2);
    }
  }
  auto tree = from_pairs({{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}});
  auto tp = theta_partition(tree, all_pairs_distances(tree));
  CHECK(tp.class_count() == tree.edge_count());
}

TEST_CASE("class ids follow the smallest edge id") {
  auto g = FamilySpec::parse("GRID:3x4").build();
  auto tp = theta_partition(g, all_pairs_distances(g));
  CHECK(tp.class_of[0] == 0);
  for (int c = 1; c < tp.class_count(); ++c) CHECK(tp.classes[c - 1].front() < tp.classes[c].front());
  for (int c = 0; c < tp.class_count(); ++c) {
    for (EdgeId e : tp.classes[c]) CHECK(tp.class_of[e] == c);
  }
}

TEST_CASE("strict partition rejects non-transitive relations") {
  auto k23 = complete_bipartite(2, 3);
  auto d = all_pairs_distances(k23);
  try {
    theta_partition(k23, d);
    FAIL("expected NOT_PARTIAL_CUBE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotPartialCube);
  }
  auto raw = theta_partition(k23, d, ThetaMode::kRaw);
  int covered = 0;
  for (const auto& c : raw.classes) covered += static_cast<int>(c.size());
  CHECK(covered == k23.edge_count());
}

TEST_CASE("recognition accepts hypercubes and certifies the labeling") {
  auto q4 = hypercube(4);
  auto d = all_pairs_distances(q4);
  auto rec = is_partial_cube(q4, d);
  REQUIRE(rec.is_partial_cube());
  CHECK(rec.failure == RecognitionFailure::kNone);
  CHECK(rec.partition->class_count() == 4);
  CHECK_FALSE(find_non_isometric_pair(*rec.labeling, d).has_value());
}

TEST_CASE("recognition rejects K_{2,3} with a verified transitivity witness") {
  auto k23 = complete_bipartite(2, 3);
  CHECK(k23.vertex_count() == 5);
  auto fw = cubekit::test::floyd_warshall(k23);

  // Exhaustive oracle: the first non-transitive triple in edge-id order.
  std::optional<std::array<EdgeId, 3>> oracle;
  const int m = k23.edge_count();
  for (EdgeId e = 0; e < m && !oracle; ++e) {
    for (EdgeId f = 0; f < m && !oracle; ++f) {
      for (EdgeId h = 0; h < m && !oracle; ++h) {
        if (theta_oracle(fw, k23.edge(e), k23.edge(f)) && theta_oracle(fw, k23.edge(f), k23.edge(h)) &&
            !theta_oracle(fw, k23.edge(e), k23.edge(h))) {
          oracle = std::array{e, f, h};
        }
      }
    }
  }
  REQUIRE(oracle.has_value());

  auto rec = is_partial_cube(k23);
  REQUIRE_FALSE(rec.is_partial_cube());
  CHECK(rec.failure == RecognitionFailure::kThetaNotTransitive);
  REQUIRE(rec.transitivity.has_value());
  const auto& w = *rec.transitivity;
  CHECK(theta_oracle(fw, k23.edge(w.e), k23.edge(w.f)));
  CHECK(theta_oracle(fw, k23.edge(w.f), k23.edge(w.h)));
  CHECK_FALSE(theta_oracle(fw, k23.edge(w.e), k23.edge(w.h)));

  auto direct = find_transitivity_violation(k23, all_pairs_distances(k23));
  REQUIRE(direct.has_value());
  CHECK(std::array{direct->e, direct->f, direct->h} == *oracle);
  // Frozen after the oracle above: edges 0-2, 1-3, 0-4.
  CHECK(k23.edge(w.e) == Edge{0, 2});
  CHECK(k23.edge(w.f) == Edge{1, 3});
  CHECK(k23.edge(w.h) == Edge{0, 4});
}

TEST_CASE("recognition failures carry the matching witness") {
  auto c5 = is_partial_cube(cycle(5));
  CHECK(c5.failure == RecognitionFailure::kNotBipartite);
  CHECK(c5.odd_cycle.size() == 5);

  auto split = is_partial_cube(from_pairs({{0, 1}, {2, 3}}));
  CHECK(split.failure == RecognitionFailure::kNotConnected);

  auto k33 = is_partial_cube(complete_bipartite(3, 3));
  CHECK(k33.failure == RecognitionFailure::kThetaNotTransitive);

  CHECK(is_partial_cube(from_pairs({}, 1)).is_partial_cube());
  CHECK(to_string(RecognitionFailure::kThetaNotTransitive) == "THETA_NOT_TRANSITIVE");
}

TEST_CASE("labeling: hypercube, C_6 and K_2") {
  auto q3 = hypercube(3);
  auto d3 = all_pairs_distances(q3);
  auto lab3 = labeling(q3, d3, theta_partition(q3, d3));
  std::set<std::string> labels;
  for (Vertex v = 0; v < 8; ++v) labels.insert(lab3.label_string(v));
  CHECK(labels.size() == 8);
  CHECK(lab3.label_string(0) == "000");

  auto c6 = cycle(6);
  auto d6 = all_pairs_distances(c6);
  auto lab6 = labeling(c6, d6, theta_partition(c6, d6));
  std::set<std::string> six;
  for (Vertex v = 0; v < 6; ++v) {
    six.insert(lab6.label_string(v));
    CHECK(lab6.label_string(v).size() == 3);
    CHECK((lab6.labels[v] ^ lab6.labels[(v + 1) % 6]).count() == 1);
  }
  CHECK(six.size() == 6);

  auto k2 = path(2);
  auto d2 = all_pairs_distances(k2);
  auto lab2 = labeling(k2, d2, theta_partition(k2, d2));
  CHECK(lab2.dimension() == 1);
  CHECK(lab2.label_string(0) == "0");
  CHECK(lab2.label_string(1) == "1");
}

TEST_CASE("labeling rejects a partition that is not an embedding") {
  auto k23 = complete_bipartite(2, 3);
  auto d = all_pairs_distances(k23);
  auto raw = theta_partition(k23, d, ThetaMode::kRaw);
  try {
    labeling(k23, d, raw);
    FAIL("expected LABELING_NOT_ISOMETRIC");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kLabelingNotIsometric);
  }
}

TEST_CASE("isometric dimension") {
  for (int n = 1; n <= 6; ++n) {
    auto q = hypercube(n);
    CHECK(isometric_dimension(theta_partition(q, all_pairs_distances(q))) == n);
  }
  for (int n = 2; n <= 10; ++n) {
    auto c = even_cycle(n);
    CHECK(isometric_dimension(theta_partition(c, all_pairs_distances(c))) == n);
  }
  for (int k = 2; k <= 4; ++k) {
    auto g = doubled_odd(k);
    CHECK(isometric_dimension(theta_partition(g, all_pairs_distances(g))) == 2 * k - 1);
  }
}

TEST_CASE("halfspaces") {
  auto k2 = path(2);
  auto h2 = halfspaces(k2, all_pairs_distances(k2), 0, 1);
  CHECK(h2.w_uv.members() == std::vector<Vertex>{0});
  CHECK(h2.u_uv.members() == std::vector<Vertex>{0});
  CHECK(h2.w_vu.members() == std::vector<Vertex>{1});

  auto c6 = cycle(6);
  auto d6 = all_pairs_distances(c6);
  for (const auto& e : c6.edges()) {
    auto h = halfspaces(c6, d6, e.u, e.v);
    CHECK(h.w_uv.count() == 3);
    CHECK(h.u_uv.count() == 2);
    CHECK(h.class_edges.size() == 2);
  }

  auto q3 = hypercube(3);
  auto d3 = all_pairs_distances(q3);
  for (const auto& e : q3.edges()) {
    auto h = halfspaces(q3, d3, e.u, e.v);
    CHECK(h.w_uv.count() == 4);
    CHECK(h.u_uv.count() == 4);
    auto sub = induced_subgraph(q3, h.u_uv).graph;
    CHECK(sub.edge_count() == 4);
    CHECK(degree_profile(sub).k == 2);
  }

  try {
    halfspaces(c6, d6, 0, 2);
    FAIL("expected NOT_AN_EDGE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotAnEdge);
  }
}

TEST_CASE("incident class families") {
  auto q3 = hypercube(3);
  auto tp3 = theta_partition(q3, all_pairs_distances(q3));
  for (Vertex v = 0; v < 8; ++v) CHECK(incident_classes(q3, tp3, v) == std::vector<int>{0, 1, 2});

  auto c8 = even_cycle(4);
  auto tp8 = theta_partition(c8, all_pairs_distances(c8));
  const IncidentClassFamily fam(c8, tp8);
  for (Vertex v = 0; v < 8; ++v) {
    CHECK(incident_classes(c8, tp8, v).size() == 2);
    CHECK(fam.classes(v) == incident_classes(c8, tp8, v));
    CHECK(fam.bits(v).count() == 2);
  }

  auto p3 = path(3);
  auto tpp = theta_partition(p3, all_pairs_distances(p3));
  CHECK(incident_classes(p3, tpp, 1) == std::vector<int>{0, 1});
  for (const auto& c : tpp.classes) CHECK(c.size() == 1);
}

TEST_CASE("class sets do not depend on thread scheduling") {
  auto g = FamilySpec::parse("PROD(DO:3,P:2)").build();
  auto d = all_pairs_distances(g);
  auto a = theta_partition(g, d);
  auto b = theta_partition(g, serial::all_pairs_distances(g));
  CHECK(a.class_of == b.class_of);
  CHECK(class_sets(a) == class_sets(b));
}
