#include "cubekit/report.hpp"

#include <sstream>

namespace cubekit {

namespace {

Json edge_json(const Graph& g, EdgeId e) {
  const auto [u, v] = g.edge(e);
  return Json::array({g.name(u), g.name(v)});
}

Json names_json(const Graph& g, const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(g.name(v));
  return out;
}

std::string spectrum_string(const std::map<int, int>& spectrum) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [length, count] : spectrum) {
    if (!first) out << ", ";
    out << length << ':' << count;
    first = false;
  }
  out << '}';
  return out.str();
}

std::string cycle_string(const Graph& g, const Cycle& c) {
  std::string s;
  for (Vertex v : c.vertices) {
    if (!s.empty()) s += ' ';
    s += g.name(v);
  }
  return s;
}

}  // namespace

Json recognition_json(const Graph& g, const Recognition& rec) {
  Json out;
  out["partial_cube"] = rec.is_partial_cube();
  out["vertices"] = g.vertex_count();
  out["edges"] = g.edge_count();
  out["failure"] = std::string(to_string(rec.failure));
  if (rec.is_partial_cube()) {
    const auto& tp = *rec.partition;
    out["idim"] = tp.class_count();
    Json classes = Json::array();
    for (int c = 0; c < tp.class_count(); ++c) {
      Json edges = Json::array();
      for (EdgeId e : tp.classes[c]) edges.push_back(edge_json(g, e));
      classes.push_back({{"class", c}, {"edges", std::move(edges)}});
    }
    out["theta_classes"] = std::move(classes);
    out["labeling"] = labeling_json(g, *rec.labeling);
    return out;
  }
  Json witness;
  switch (rec.failure) {
    case RecognitionFailure::kNotBipartite:
      witness["odd_cycle"] = names_json(g, rec.odd_cycle);
      break;
    case RecognitionFailure::kThetaNotTransitive:
      witness["theta_transitivity"] = {{"e", edge_json(g, rec.transitivity->e)},
                                       {"f", edge_json(g, rec.transitivity->f)},
                                       {"h", edge_json(g, rec.transitivity->h)}};
      break;
    case RecognitionFailure::kLabelingNotIsometric:
      witness["non_isometric_pair"] = Json::array(
          {g.name(rec.non_isometric_pair->first), g.name(rec.non_isometric_pair->second)});
      break;
    case RecognitionFailure::kNotConnected:
      witness["disconnected"] = true;
      break;
    case RecognitionFailure::kNone:
      break;
  }
  out["witness"] = std::move(witness);
  return out;
}

Json labeling_json(const Graph& g, const HypercubeLabeling& lab) {
  Json rows = Json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    rows.push_back({{"vertex", g.name(v)}, {"label", lab.label_string(v)}});
  }
  return {{"dimension", lab.dimension()}, {"rows", std::move(rows)}};
}

Json cycle_json(const Graph& g, const Cycle& c) { return names_json(g, c.vertices); }

Json spectrum_json(const std::map<int, int>& spectrum) {
  Json out = Json::object();
  for (const auto& [length, count] : spectrum) out[std::to_string(length)] = count;
  return out;
}

Json convex_cycles_json(const Graph& g, const ConvexCycleSet& ccs) {
  Json cycles = Json::array();
  for (const auto& c : ccs.cycles) cycles.push_back(cycle_json(g, c));
  Json out;
  out["count"] = ccs.cycles.size();
  out["spectrum"] = spectrum_json(ccs.spectrum);
  auto uniform = ccs.uniform_length();
  out["uniform_length"] = uniform ? Json(*uniform) : Json(nullptr);
  out["cycles"] = std::move(cycles);
  return out;
}

Json classes_json(const Graph& g, const ClassMembershipReport& r) {
  Json out;
  out["partial_cube"] = r.partial_cube;
  out["semi_median"] = r.semi_median;
  out["tiled"] = r.tiled;
  out["almost_median"] = r.almost_median;
  out["almost_median_via_cycles"] = r.almost_median_via_cycles;
  out["median"] = r.median;
  out["median_mode"] = r.median_check.sampled ? "sampled" : "exact";
  out["hypercube"] = r.hypercube;
  Json w = Json::object();
  if (r.semi_median_check.witness) {
    w["semi_median"] = Json::array({g.name(r.semi_median_check.witness->first),
                                    g.name(r.semi_median_check.witness->second)});
  }
  if (r.almost_median_check.witness) {
    w["almost_median"] = Json::array({g.name(r.almost_median_check.witness->first),
                                      g.name(r.almost_median_check.witness->second)});
  }
  if (r.median_check.witness) {
    const auto& t = *r.median_check.witness;
    w["median"] = {{"triple", Json::array({g.name(t[0]), g.name(t[1]), g.name(t[2])})},
                   {"intersection_size", r.median_check.witness_intersection}};
  }
  if (r.non_square_convex_cycle) w["non_square_convex_cycle"] = cycle_json(g, *r.non_square_convex_cycle);
  out["witnesses"] = std::move(w);
  if (r.partial_cube) {
    out["tiling"] = {{"four_cycles", r.tiling.four_cycles},
                     {"rank", r.tiling.rank},
                     {"cycle_space_dimension", r.tiling.cycle_space_dimension}};
    out["spectrum"] = spectrum_json(r.convex_cycles->spectrum);
  } else {
    out["recognition_failure"] = std::string(to_string(r.recognition.failure));
  }
  return out;
}

Json classification_json(const Graph& g, const Classification& c) {
  Json out;
  out["outcome"] = std::string(to_string(c.outcome));
  out["parameter"] = c.parameter;
  out["label"] = c.label();
  out["reason"] = c.reason ? Json(std::string(to_string(*c.reason))) : Json(nullptr);
  out["degree"] = c.degree ? Json(*c.degree) : Json(nullptr);
  out["idim"] = c.idim ? Json(*c.idim) : Json(nullptr);
  out["convex_cycle_length"] = c.convex_cycle_length ? Json(*c.convex_cycle_length) : Json(nullptr);
  out["spectrum"] = spectrum_json(c.spectrum);
  if (!c.note.empty()) out["note"] = c.note;
  if (c.labeling) out["labeling"] = labeling_json(g, *c.labeling);
  if (c.isomorphism) {
    Json map = Json::array();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      map.push_back({{"vertex", g.name(v)}, {"image", c.generator_names[(*c.isomorphism)[v]]}});
    }
    out["isomorphism"] = std::move(map);
  }
  return out;
}

Json envelope(const std::string& command, const std::string& input_kind, const std::string& input_text,
              Json payload) {
  Json out;
  out["tool"] = "cubekit";
  out["version"] = kToolVersion;
  out["command"] = command;
  out["input"] = {{"kind", input_kind}, {"text", input_text}};
  out["payload"] = std::move(payload);
  return out;
}

std::string recognition_text(const Graph& g, const Recognition& rec) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << ", edges " << g.edge_count() << '\n';
  if (rec.is_partial_cube()) {
    out << "partial cube: yes\nidim: " << rec.partition->class_count() << '\n';
    return out.str();
  }
  out << "partial cube: no (" << to_string(rec.failure) << ")\n";
  switch (rec.failure) {
    case RecognitionFailure::kNotBipartite: {
      out << "odd cycle:";
      for (Vertex v : rec.odd_cycle) out << ' ' << g.name(v);
      out << '\n';
      break;
    }
    case RecognitionFailure::kThetaNotTransitive: {
      auto edge = [&](EdgeId e) { return g.name(g.edge(e).u) + "-" + g.name(g.edge(e).v); };
      out << "theta witness: " << edge(rec.transitivity->e) << " ~ " << edge(rec.transitivity->f) << " ~ "
          << edge(rec.transitivity->h) << ", first and last unrelated\n";
      break;
    }
    case RecognitionFailure::kLabelingNotIsometric:
      out << "non-isometric pair: " << g.name(rec.non_isometric_pair->first) << ' '
          << g.name(rec.non_isometric_pair->second) << '\n';
      break;
    default:
      break;
  }
  return out.str();
}

std::string labeling_text(const Graph& g, const HypercubeLabeling& lab) {
  std::size_t width = 6;
  for (Vertex v = 0; v < g.vertex_count(); ++v) width = std::max(width, g.name(v).size());
  std::ostringstream out;
  out << "vertex" << std::string(width - 6 + 2, ' ') << "label\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto name = g.name(v);
    out << name << std::string(width - name.size() + 2, ' ') << lab.label_string(v) << '\n';
  }
  return out.str();
}

std::string convex_cycles_text(const Graph& g, const ConvexCycleSet& ccs) {
  std::ostringstream out;
  out << "convex cycles: " << ccs.cycles.size() << "\nspectrum: " << spectrum_string(ccs.spectrum) << '\n';
  for (const auto& c : ccs.cycles) out << "  " << c.length() << ": " << cycle_string(g, c) << '\n';
  return out.str();
}

std::string classes_text(const ClassMembershipReport& r) {
  std::ostringstream out;
  auto row = [&](const char* name, bool v) { out << name << (v ? "true" : "false") << '\n'; };
  row("partial cube   ", r.partial_cube);
  row("semi-median    ", r.semi_median);
  row("tiled          ", r.tiled);
  row("almost-median  ", r.almost_median);
  row("median         ", r.median);
  if (r.median_check.sampled) out << "               (median checked on sampled triples)\n";
  row("hypercube      ", r.hypercube);
  return out.str();
}

std::string classification_text(const Graph& g, const Classification& c) {
  std::ostringstream out;
  out << c.label() << '\n';
  out << "vertices: " << g.vertex_count() << ", edges: " << g.edge_count() << '\n';
  if (c.degree) out << "degree: " << *c.degree << '\n';
  if (c.idim) out << "idim: " << *c.idim << '\n';
  if (!c.spectrum.empty()) out << "spectrum: " << spectrum_string(c.spectrum) << '\n';
  if (!c.note.empty()) out << "note: " << c.note << '\n';
  if (c.isomorphism) out << "isomorphism: verified on " << c.isomorphism->size() << " vertices\n";
  return out.str();
}

}  // namespace cubekit
