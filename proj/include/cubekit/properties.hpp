#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubekit/classify.hpp"
#include "cubekit/convexity.hpp"
#include "cubekit/families.hpp"
#include "cubekit/graph.hpp"
#include "cubekit/report.hpp"
#include "cubekit/theta.hpp"

namespace cubekit {

// ---- path and cycle helpers shared by the audit, tests and acceptance ----

// Length (edge count) equals the endpoint distance.
bool is_geodesic_path(const DistanceMatrix& d, std::span<const Vertex> path);

// Every simple path with 1..max_length edges; each undirected path is visited
// once per direction.
void for_each_simple_path(const Graph& g, int max_length,
                          const std::function<void(std::span<const Vertex>)>& visit);

// Every cycle of exactly `length` vertices, canonical and sorted.
std::vector<Cycle> cycles_of_length(const Graph& g, int length);

struct PathScan {
  long long paths = 0;     // paths examined
  long long matching = 0;  // of the requested type
  std::optional<std::vector<Vertex>> counterexample;  // typed but not a geodesic
};

// Exhaustive over simple paths of length min..max_length: every path of the
// requested type must be a geodesic. TYPE_II uses lengths >= 3.
PathScan scan_typed_paths(const Graph& g, const DistanceMatrix& d, const ThetaPartition& tp, PathType type,
                          int max_length);

struct GirthSixEquivalence {
  bool uniform_six = false;
  bool three_paths_closed = false;
  bool doubled_odd = false;

  bool agree() const { return uniform_six == three_paths_closed && three_paths_closed == doubled_odd; }
};

// For a regular partial cube of girth 6 and degree k.
GirthSixEquivalence girth_six_equivalence(const Graph& g, const ConvexCycleSet& ccs, int k);

// n = 2^k and an explicit isomorphism to hypercube(k) exists.
bool is_hypercube_graph(const Graph& g);

// ---- corpus audit ----

enum class Status { kPass, kFail, kSkip };
std::string_view to_string(Status s);

struct PropertyResult {
  std::string name;
  Status status = Status::kPass;
  std::string detail;
};

struct GraphAudit {
  std::string name;
  int vertices = 0;
  int edges = 0;
  bool partial_cube = false;
  std::string classification;
  std::map<int, int> spectrum;
  std::vector<PropertyResult> properties;

  bool passed() const;
};

struct AuditOptions {
  std::uint64_t seed = 0;
  int oracle_bound = kDefaultOracleBound;
  int jobs = 1;
  int path_samples = 400;  // random paths / geodesics per graph
  int max_path_length = 6;
};

struct CorpusAudit {
  CorpusProfile profile = CorpusProfile::kSmall;
  std::uint64_t seed = 0;
  std::vector<GraphAudit> graphs;
  std::vector<PropertyResult> corpus_properties;

  int count(Status s) const;
  bool passed() const { return count(Status::kFail) == 0; }
};

GraphAudit audit_graph(const CorpusEntry& entry, const AuditOptions& options);

// Graphs are audited on `jobs` worker threads; results keep corpus order.
CorpusAudit audit_corpus(CorpusProfile profile, const AuditOptions& options);

Json audit_json(const CorpusAudit& audit);
std::string audit_text(const CorpusAudit& audit);

}  // namespace cubekit
