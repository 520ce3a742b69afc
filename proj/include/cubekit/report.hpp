#pragma once

#include <string>

#include <json.hpp>

#include "cubekit/classes.hpp"
#include "cubekit/classify.hpp"
#include "cubekit/convexity.hpp"
#include "cubekit/graph.hpp"
#include "cubekit/theta.hpp"

namespace cubekit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

// Payload builders for the CLI reports. Every vertex appears under its
// original input name (index when the input had none).
Json recognition_json(const Graph& g, const Recognition& rec);
Json labeling_json(const Graph& g, const HypercubeLabeling& lab);
Json cycle_json(const Graph& g, const Cycle& c);
Json convex_cycles_json(const Graph& g, const ConvexCycleSet& ccs);
Json spectrum_json(const std::map<int, int>& spectrum);
Json classes_json(const Graph& g, const ClassMembershipReport& r);
Json classification_json(const Graph& g, const Classification& c);

// {"tool", "version", "command", "input": {"kind", "text"}, "payload"}.
Json envelope(const std::string& command, const std::string& input_kind, const std::string& input_text,
              Json payload);

// Human-readable renderings used without --json.
std::string recognition_text(const Graph& g, const Recognition& rec);
std::string labeling_text(const Graph& g, const HypercubeLabeling& lab);
std::string convex_cycles_text(const Graph& g, const ConvexCycleSet& ccs);
std::string classes_text(const ClassMembershipReport& r);
std::string classification_text(const Graph& g, const Classification& c);

}  // namespace cubekit
