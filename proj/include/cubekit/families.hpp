#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cubekit/graph.hpp"

namespace cubekit {

// Generators. All are deterministic: equal parameters give equal edge lists.
// Out-of-range parameters throw PARAM_RANGE.

// Q_n, 0 <= n <= 16. Vertex i is the bit string of i, most significant bit
// first, so in Q_3 vertex 3 is "011".
Graph hypercube(int n);

// Doubled Odd graph on the (k-1)- and k-subsets of {1..2k-1}, 1 <= k <= 8.
// (k-1)-subsets come first, each layer in colex order; vertex names are the
// subsets, e.g. "{1,3}".
Graph doubled_odd(int k);

// C_{2n}, 2 <= n <= 100000.
Graph even_cycle(int n);
// C_len for any len >= 3 (odd lengths serve as negative examples).
Graph cycle(int length);
Graph q3_minus();
// P_m □ P_n, m, n >= 1.
Graph grid(int m, int n);
Graph complete_bipartite(int a, int b);
// Path on n >= 1 vertices; path(2) is K_2.
Graph path(int n);

// Desk-scale vertex bound for composite generators.
inline constexpr int kDeskScaleVertices = 2000;

enum class Family {
  kHypercube,
  kDoubledOdd,
  kCycle,
  kPath,
  kGrid,
  kQ3Minus,
  kCompleteBipartite,
  kProduct,
};

// Textual family descriptors:
//   Q:4  DO:3  C:10  P:5  GRID:3x4  KB:2,3  Q3MINUS  PROD(Q:2,C:6)
// PROD nests and accepts two or more factors.
struct FamilySpec {
  Family family = Family::kHypercube;
  std::vector<int> params;
  std::vector<FamilySpec> factors;

  // Throws PARSE_ERROR (column = 1-based offset) or PARAM_RANGE.
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
  Graph build() const;
};

enum class CorpusProfile { kSmall, kFull };

struct CorpusEntry {
  std::string name;
  FamilySpec spec;
  Graph graph;
  bool designated_negative = false;  // expected to fail recognition
};

// SMALL: Q_0..Q_4, Õ_1..Õ_3, cycles up to C_12 (plus C_5), paths, grids up to
// 4x4, Q_3⁻, complete bipartite graphs including K_{2,3}, small products.
// FULL adds Q_5..Q_8, Õ_4 and cycles up to C_20.
std::vector<CorpusEntry> corpus(CorpusProfile profile);

std::string_view to_string(CorpusProfile p);
CorpusProfile parse_profile(std::string_view text);

}  // namespace cubekit
