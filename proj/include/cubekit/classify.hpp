#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubekit/graph.hpp"
#include "cubekit/theta.hpp"

namespace cubekit {

enum class Outcome { kHypercube, kDoubledOdd, kEvenCycle, kExcluded };

enum class ExclusionReason {
  kNotPartialCube,
  kNotRegular,
  kTrivialK1K2,
  kMixedCycleLengths,
  kNoCycles,
};

std::string_view to_string(Outcome o);
std::string_view to_string(ExclusionReason r);

// Result of the regular-partial-cube decision procedure. `parameter` is k for
// HYPERCUBE(k) and DOUBLED_ODD(k), n for EVEN_CYCLE(n) (a 2n-cycle), and 0
// for EXCLUDED.
struct Classification {
  Outcome outcome = Outcome::kExcluded;
  int parameter = 0;
  std::optional<ExclusionReason> reason;

  std::optional<int> convex_cycle_length;
  std::optional<int> degree;
  std::optional<int> idim;
  std::map<int, int> spectrum;
  std::optional<HypercubeLabeling> labeling;        // HYPERCUBE certificate
  std::optional<std::vector<Vertex>> isomorphism;   // with certify: input -> generator
  std::vector<std::string> generator_names;          // names of the generator's vertices
  std::string note;

  // e.g. "HYPERCUBE(4)", "EXCLUDED(NOT_REGULAR)".
  std::string label() const;
};

struct ClassifyOptions {
  // Check DOUBLED_ODD / EVEN_CYCLE outcomes against the generator by explicit
  // isomorphism; a failure throws INTERNAL_THEOREM_VIOLATION.
  bool certify = false;
};

// Never returns an "unknown" outcome. Internal contradictions with the
// characterization (e.g. uniform 4-cycles without a bijective labeling) throw
// INTERNAL_THEOREM_VIOLATION.
Classification classify(const Graph& g, ClassifyOptions options = {});

// n = 2^k and the labeling hits every k-bit string exactly once.
bool verify_hypercube(const Graph& g, const ThetaPartition& tp, const HypercubeLabeling& lab, int k);

inline constexpr int kIsomorphismVertexBound = 2000;

// Adjacency-preserving bijection g -> h, or nullopt. Backtracking over
// vertices in BFS order; candidates must match degree, distance profile and
// every distance to already-mapped vertices. Throws SIZE_BOUND_EXCEEDED.
std::optional<std::vector<Vertex>> verify_isomorphism(const Graph& g, const Graph& h);

enum class PathType { kTypeOne, kTypeTwo, kNeither };
std::string_view to_string(PathType t);

// holds, or the index i of the first failing condition (0-based into the
// vertex sequence) and its description.
struct PathCheck {
  bool holds = true;
  int failing_index = -1;
  std::string failing_condition;

  explicit operator bool() const { return holds; }
};

// F(v_0)∖F(v_1) and F(v_l)∖F(v_{l-1}) non-empty; for 1 <= i <= l-1 the class
// of e_{i+1} is not at v_{i-1} and the class of e_i is not at v_{i+1}.
// Throws NOT_A_PATH (length >= 1, distinct vertices, consecutive adjacent).
PathCheck is_type_one_path(const Graph& g, const ThetaPartition& tp, const IncidentClassFamily& fam,
                           std::span<const Vertex> path);
PathCheck is_type_one_path(const Graph& g, const ThetaPartition& tp, std::span<const Vertex> path);

// For 1 <= i <= l-2: class of e_i not at v_{i+2}, class of e_{i+2} not at
// v_{i-1}. Throws NOT_A_PATH, or PATH_TOO_SHORT below length 3.
PathCheck is_type_two_path(const Graph& g, const ThetaPartition& tp, const IncidentClassFamily& fam,
                           std::span<const Vertex> path);
PathCheck is_type_two_path(const Graph& g, const ThetaPartition& tp, std::span<const Vertex> path);

struct PathWitness {
  std::vector<Vertex> vertices;
  PathType type = PathType::kNeither;
  int failing_index = -1;  // from the type-I check when NEITHER
};

// TYPE_I takes precedence when both definitions hold.
PathWitness classify_path(const Graph& g, const ThetaPartition& tp, const IncidentClassFamily& fam,
                          std::span<const Vertex> path);

struct ThreePathCheck {
  bool holds = true;
  std::optional<std::array<Vertex, 4>> witness;  // a 3-path in no 6-cycle

  explicit operator bool() const { return holds; }
};

ThreePathCheck every_3path_in_6cycle(const Graph& g);

}  // namespace cubekit
