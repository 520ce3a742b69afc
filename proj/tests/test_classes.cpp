#include <doctest.h>

#include <array>
#include <queue>

#include "cubekit/classes.hpp"
#include "cubekit/error.hpp"
#include "cubekit/families.hpp"
#include "cubekit/serial.hpp"
#include "support.hpp"

using namespace cubekit;
using cubekit::test::floyd_warshall;
using cubekit::test::from_pairs;

namespace {

using Matrix = std::vector<std::vector<int>>;

Graph build(const char* spec) { return FamilySpec::parse(spec).build(); }

// Triple check straight from distance sums.
std::optional<std::array<Vertex, 3>> median_failure(const Matrix& d) {
  const int n = static_cast<int>(d.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      for (int w = v + 1; w < n; ++w) {
        int medians = 0;
        for (int x = 0; x < n; ++x) {
          medians += d[u][x] + d[x][v] == d[u][v] && d[v][x] + d[x][w] == d[v][w] && d[u][x] + d[x][w] == d[u][w];
        }
        if (medians != 1) return std::array<Vertex, 3>{u, v, w};
      }
    }
  }
  return std::nullopt;
}

// Vertices closer to u than to v with a neighbour closer to v.
std::vector<Vertex> u_set(const Graph& g, const Matrix& d, Vertex u, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (d[x][u] >= d[x][v]) continue;
    for (Vertex y : g.neighbors(x)) {
      if (d[y][v] < d[y][u]) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

// Distances inside the subgraph induced by s, -1 when unreachable.
Matrix induced_distances(const Graph& g, const std::vector<Vertex>& s) {
  std::vector<int> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) index[s[i]] = static_cast<int>(i);
  Matrix out(s.size(), std::vector<int>(s.size(), -1));
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::queue<Vertex> q;
    q.push(s[i]);
    out[i][i] = 0;
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (Vertex y : g.neighbors(x)) {
        if (index[y] < 0 || out[i][index[y]] >= 0) continue;
        out[i][index[y]] = out[i][index[x]] + 1;
        q.push(y);
      }
    }
  }
  return out;
}

struct USetOracle {
  bool connected = true;
  bool isometric = true;
};

USetOracle u_set_oracle(const Graph& g, const Matrix& d) {
  USetOracle r;
  for (const auto& e : g.edges()) {
    for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      auto s = u_set(g, d, a, b);
      auto sd = induced_distances(g, s);
      for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
          if (sd[i][j] < 0) r.connected = false;
          if (sd[i][j] != d[s[i]][s[j]]) r.isometric = false;
        }
      }
    }
  }
  return r;
}

// GF(2) rank of all 4-cycle edge vectors, found by a plain quadruple loop.
std::pair<int, int> four_cycle_rank(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<char>> rows;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = a + 1; c < n; ++c) {
        for (int e = b + 1; e < n; ++e) {
          // cycle a-b-c-e with a the smallest vertex and b < e
          if (b <= a || e <= a || b == c || e == c) continue;
          if (!(g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, e) && g.adjacent(e, a))) continue;
          std::vector<char> row(g.edge_count(), 0);
          for (auto [x, y] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, e}, std::pair{e, a}}) {
            row[*g.edge_id(x, y)] ^= 1;
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  const int count = static_cast<int>(rows.size());
  int rank = 0;
  for (int col = 0; col < g.edge_count() && rank < count; ++col) {
    int pivot = rank;
    while (pivot < count && rows[pivot][col] == 0) ++pivot;
    if (pivot == count) continue;
    std::swap(rows[pivot], rows[rank]);
    for (int r = 0; r < count; ++r) {
      if (r != rank && rows[r][col] != 0) {
        for (int k = 0; k < g.edge_count(); ++k) rows[r][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return {count, rank};
}

const char* const kPartialCubes[] = {"Q:2",      "Q:3",           "Q:4",          "Q3MINUS",       "C:6",
                                     "C:8",      "C:10",          "DO:3",         "GRID:3x4",      "GRID:2x5",
                                     "P:5",      "PROD(C:6,P:2)", "PROD(C:6,C:4)", "PROD(DO:2,P:3)", "PROD(C:8,P:2)"};

}  // namespace

TEST_CASE("median predicate agrees with the triple-sum oracle") {
  for (auto spec : {"Q:2", "Q:3", "Q:4", "Q3MINUS", "C:6", "C:5", "C:8", "GRID:3x4", "P:6", "KB:2,3", "KB:3,3",
                    "DO:3", "PROD(C:6,P:2)", "PROD(P:3,P:3)"}) {
    CAPTURE(spec);
    auto g = build(spec);
    auto fw = floyd_warshall(g);
    auto expected = median_failure(fw);
    auto d = all_pairs_distances(g);
    auto r = is_median(g, d);
    CHECK(r.median == !expected.has_value());
    CHECK(r.witness == expected);
    CHECK(serial::is_median(g, d).median == r.median);
  }
}

TEST_CASE("median examples") {
  auto grid = build("GRID:3x4");
  CHECK(is_median(grid, all_pairs_distances(grid)));

  auto c6 = cycle(6);
  auto r = is_median(c6, all_pairs_distances(c6));
  REQUIRE_FALSE(r.median);
  // 0, 2, 4 pairwise at distance 2: the three intervals share nothing.
  CHECK(r.witness == std::array<Vertex, 3>{0, 2, 4});
  CHECK(r.witness_intersection == 0);

  auto q3m = q3_minus();
  CHECK_FALSE(is_median(q3m, all_pairs_distances(q3m)));

  auto split = from_pairs({{0, 1}, {2, 3}});
  CHECK_FALSE(is_median(split, all_pairs_distances(split)));
  CHECK_FALSE(r.sampled);
}

TEST_CASE("median check samples triples on large graphs") {
  auto q10 = hypercube(10);
  auto r = is_median(q10, all_pairs_distances(q10));
  CHECK(r.median);
  CHECK(r.sampled);

  auto c600 = cycle(600);
  auto c = is_median(c600, all_pairs_distances(c600));
  CHECK_FALSE(c.median);
  CHECK(c.sampled);
  REQUIRE(c.witness.has_value());
  auto fw = floyd_warshall(c600);
  auto [u, v, w] = *c.witness;
  int medians = 0;
  for (int x = 0; x < 600; ++x) {
    medians += fw[u][x] + fw[x][v] == fw[u][v] && fw[v][x] + fw[x][w] == fw[v][w] && fw[u][x] + fw[x][w] == fw[u][w];
  }
  CHECK(medians != 1);
}

TEST_CASE("semi-median and almost-median agree with direct U-set checks") {
  for (auto spec : kPartialCubes) {
    CAPTURE(spec);
    auto g = build(spec);
    auto d = all_pairs_distances(g);
    auto rec = is_partial_cube(g, d);
    REQUIRE(rec.is_partial_cube());
    auto oracle = u_set_oracle(g, floyd_warshall(g));
    auto semi = is_semi_median(g, d, *rec.partition);
    auto almost = is_almost_median(g, d, *rec.partition);
    CHECK(semi.holds == oracle.connected);
    CHECK(almost.holds == oracle.isometric);
    CHECK(semi.witness.has_value() == !semi.holds);
    CHECK(almost.witness.has_value() == !almost.holds);
  }
}

TEST_CASE("semi-median examples") {
  auto check = [](const Graph& g) {
    auto d = all_pairs_distances(g);
    return is_semi_median(g, d, *is_partial_cube(g, d).partition);
  };
  CHECK(check(q3_minus()));
  CHECK(check(hypercube(4)));

  // In C_8 the U-set of edge 0-1 is {0, 5}: the ends of the two class edges
  // on the 0 side, which are not adjacent.
  auto c8 = cycle(8);
  auto fw = floyd_warshall(c8);
  CHECK(u_set(c8, fw, 0, 1) == std::vector<Vertex>{0, 5});
  auto r = check(c8);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  CHECK(c8.adjacent(r.witness->first, r.witness->second));

  CHECK_FALSE(check(cycle(6)));

  auto k23 = complete_bipartite(2, 3);
  auto d = all_pairs_distances(k23);
  try {
    is_semi_median(k23, d, theta_partition(k23, d, ThetaMode::kRaw));
    FAIL("expected NOT_PARTIAL_CUBE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotPartialCube);
  }
}

TEST_CASE("almost-median examples and the convex-cycle route") {
  auto run = [](const Graph& g) {
    auto d = all_pairs_distances(g);
    auto rec = is_partial_cube(g, d);
    REQUIRE(rec.is_partial_cube());
    auto ccs = enumerate_convex_cycles(g, d, *rec.partition);
    return std::pair{is_almost_median(g, d, *rec.partition).holds, is_almost_median_via_cycles(ccs)};
  };
  CHECK(run(hypercube(5)) == std::pair{true, true});
  CHECK(run(hypercube(3)) == std::pair{true, true});
  // The direct U-set oracle finds every U-set of Q_3⁻ isometric; its convex
  // cycles are the three squares.
  CHECK(run(q3_minus()) == std::pair{true, true});
  CHECK(run(doubled_odd(3)) == std::pair{false, false});
  CHECK(run(doubled_odd(2)) == std::pair{false, false});
  CHECK(run(path(5)) == std::pair{true, true});

  auto q3m = q3_minus();
  auto oracle = u_set_oracle(q3m, floyd_warshall(q3m));
  CHECK(oracle.isometric);
  CHECK(oracle.connected);

  for (auto spec : kPartialCubes) {
    CAPTURE(spec);
    auto [direct, via_cycles] = run(build(spec));
    CHECK(direct == via_cycles);
  }
  CHECK(is_almost_median_via_cycles(ConvexCycleSet{}));
}

TEST_CASE("tiling agrees with a quadruple-loop GF(2) oracle") {
  for (auto spec : {"Q:2", "Q:3", "Q:4", "Q3MINUS", "C:6", "C:8", "DO:3", "GRID:3x4", "P:5", "KB:2,3", "KB:3,3",
                    "PROD(C:6,P:2)", "PROD(C:6,C:4)"}) {
    CAPTURE(spec);
    auto g = build(spec);
    auto [count, rank] = four_cycle_rank(g);
    auto t = is_tiled(g, all_pairs_distances(g));
    CHECK(t.four_cycles == count);
    CHECK(t.rank == rank);
    CHECK(t.cycle_space_dimension == g.edge_count() - g.vertex_count() + 1);
    CHECK(t.tiled == (rank == t.cycle_space_dimension));
  }
}

TEST_CASE("tiling examples") {
  auto q3m = q3_minus();
  auto t = is_tiled(q3m, all_pairs_distances(q3m));
  CHECK(t.tiled);
  CHECK(t.four_cycles == 3);
  CHECK(t.rank == 3);
  CHECK(t.cycle_space_dimension == 3);

  auto do3 = doubled_odd(3);
  auto t3 = is_tiled(do3, all_pairs_distances(do3));
  CHECK_FALSE(t3.tiled);
  CHECK(t3.four_cycles == 0);
  CHECK(t3.cycle_space_dimension == 11);

  auto q4 = hypercube(4);
  CHECK(is_tiled(q4, all_pairs_distances(q4)));
  auto tree = path(6);
  CHECK(is_tiled(tree, all_pairs_distances(tree)));
}

TEST_CASE("class reports") {
  auto q2 = class_report(hypercube(2));
  CHECK(q2.partial_cube);
  CHECK(q2.semi_median);
  CHECK(q2.tiled);
  CHECK(q2.almost_median);
  CHECK(q2.almost_median_via_cycles);
  CHECK(q2.median);
  CHECK(q2.hypercube);

  // C_6: U-sets are antipodal pairs, so nothing below partial cube holds.
  auto c6 = class_report(doubled_odd(2));
  CHECK(c6.partial_cube);
  CHECK_FALSE(c6.semi_median);
  CHECK_FALSE(c6.tiled);
  CHECK_FALSE(c6.almost_median);
  CHECK_FALSE(c6.median);
  CHECK_FALSE(c6.hypercube);
  REQUIRE(c6.non_square_convex_cycle.has_value());
  CHECK(c6.non_square_convex_cycle->length() == 6);

  auto q3m = class_report(q3_minus());
  CHECK(q3m.partial_cube);
  CHECK(q3m.semi_median);
  CHECK(q3m.tiled);
  CHECK(q3m.almost_median);
  CHECK_FALSE(q3m.median);
  CHECK_FALSE(q3m.hypercube);
  CHECK(q3m.median_check.witness.has_value());

  auto k23 = class_report(complete_bipartite(2, 3));
  CHECK_FALSE(k23.partial_cube);
  CHECK_FALSE(k23.semi_median);
  CHECK_FALSE(k23.tiled);
  CHECK_FALSE(k23.almost_median);
  CHECK_FALSE(k23.median);
  CHECK_FALSE(k23.hypercube);
  CHECK(k23.recognition.failure == RecognitionFailure::kThetaNotTransitive);

  auto grid = class_report(build("GRID:3x4"));
  CHECK(grid.median);
  CHECK_FALSE(grid.hypercube);
  CHECK(grid.almost_median);

  for (auto spec : kPartialCubes) {
    CAPTURE(spec);
    auto g = build(spec);
    auto r = class_membership(g, all_pairs_distances(g));
    CHECK(find_chain_violation(r) == std::nullopt);
  }
}

TEST_CASE("chain violations are detected") {
  auto g = hypercube(3);
  auto r = class_membership(g, all_pairs_distances(g));
  REQUIRE_FALSE(find_chain_violation(r).has_value());
  auto broken = r;
  broken.tiled = false;
  CHECK(find_chain_violation(broken).has_value());
  broken = r;
  broken.almost_median_via_cycles = false;
  CHECK(find_chain_violation(broken).has_value());
  broken = r;
  broken.partial_cube = false;
  CHECK(find_chain_violation(broken).has_value());
}
