// cubekit: partial-cube recognition, convex cycles, class membership and
// classification of regular partial cubes from the command line.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cubekit/classes.hpp"
#include "cubekit/classify.hpp"
#include "cubekit/convexity.hpp"
#include "cubekit/error.hpp"
#include "cubekit/families.hpp"
#include "cubekit/io.hpp"
#include "cubekit/properties.hpp"
#include "cubekit/report.hpp"

namespace {

using cubekit::Json;

enum Exit { kOk = 0, kNegative = 1, kUsage = 2 };

struct Common {
  std::string file;
  std::string family;
  bool json = false;
  bool timing = false;
  std::uint64_t seed = 0;
};

struct Input {
  cubekit::Graph graph;
  std::string kind;
  std::string text;
};

void add_common(CLI::App* cmd, Common& c, bool with_input = true) {
  if (with_input) {
    cmd->add_option("input", c.file, "graph file (.g6/.graph6 or edge list)");
    cmd->add_option("--family", c.family, "generator spec, e.g. Q:3, DO:3, C:12, GRID:3x3, PROD(C:6,P:2)");
  }
  cmd->add_flag("--json", c.json, "emit a JSON report");
  cmd->add_flag("--timing", c.timing, "include wall-clock milliseconds in the report");
  cmd->add_option("--seed", c.seed, "seed for sampled checks")->default_val(0);
}

Input load(const Common& c) {
  if (c.file.empty() == c.family.empty()) {
    throw CLI::ValidationError("input", "give exactly one of an input file or --family");
  }
  if (!c.family.empty()) return {cubekit::FamilySpec::parse(c.family).build(), "family", c.family};
  return {cubekit::read_graph_file(c.file), "file", c.file};
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int emit(const Common& c, const std::string& command, const Input& in, Json payload, const std::string& text,
         const Stopwatch& clock, int code) {
  if (c.json) {
    Json report = cubekit::envelope(command, in.kind, in.text, std::move(payload));
    if (c.timing) report["timing_ms"] = clock.ms();
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << text;
    if (c.timing) std::cout << "time: " << clock.ms() << " ms\n";
  }
  return code;
}

int run_recognize(const Common& c) {
  Stopwatch clock;
  auto in = load(c);
  auto rec = cubekit::is_partial_cube(in.graph);
  return emit(c, "recognize", in, cubekit::recognition_json(in.graph, rec), cubekit::recognition_text(in.graph, rec),
              clock, rec ? kOk : kNegative);
}

int run_convex_cycles(const Common& c, bool oracle) {
  Stopwatch clock;
  auto in = load(c);
  const auto& g = in.graph;
  const auto d = cubekit::all_pairs_distances(g);
  auto rec = cubekit::is_partial_cube(g, d);
  if (!rec) {
    throw cubekit::Error(cubekit::ErrorCode::kNotPartialCube,
                         "input is not a partial cube (" + std::string(cubekit::to_string(rec.failure)) + ")");
  }
  auto ccs = cubekit::enumerate_convex_cycles(g, d, *rec.partition);
  Json payload = cubekit::convex_cycles_json(g, ccs);
  std::string text = cubekit::convex_cycles_text(g, ccs);
  int code = kOk;
  if (oracle) {
    const int bound = cubekit::oracle_bound_from_env();
    auto brute = cubekit::enumerate_convex_cycles_bruteforce(g, d, bound);
    const bool match = brute == ccs;
    payload["oracle"] = {{"result", match ? "MATCH" : "MISMATCH"},
                         {"bound", bound},
                         {"count", brute.cycles.size()},
                         {"spectrum", cubekit::spectrum_json(brute.spectrum)}};
    text += std::string("oracle: ") + (match ? "MATCH" : "MISMATCH") + '\n';
    if (!match) code = kNegative;
  }
  return emit(c, "convex-cycles", in, std::move(payload), text, clock, code);
}

int run_classify(const Common& c, bool certify) {
  Stopwatch clock;
  auto in = load(c);
  auto cls = cubekit::classify(in.graph, {.certify = certify});
  return emit(c, "classify", in, cubekit::classification_json(in.graph, cls),
              cubekit::classification_text(in.graph, cls), clock, kOk);
}

int run_classes(const Common& c) {
  Stopwatch clock;
  auto in = load(c);
  auto r = cubekit::class_report(in.graph);
  return emit(c, "classes", in, cubekit::classes_json(in.graph, r), cubekit::classes_text(r), clock, kOk);
}

int run_embed(const Common& c) {
  Stopwatch clock;
  auto in = load(c);
  auto rec = cubekit::is_partial_cube(in.graph);
  if (!rec) {
    throw cubekit::Error(cubekit::ErrorCode::kNotPartialCube,
                         "no isometric embedding (" + std::string(cubekit::to_string(rec.failure)) + ")");
  }
  return emit(c, "embed", in, cubekit::labeling_json(in.graph, *rec.labeling),
              cubekit::labeling_text(in.graph, *rec.labeling), clock, kOk);
}

int run_generate(const std::string& spec, const std::string& format, const std::string& out) {
  auto g = cubekit::FamilySpec::parse(spec).build();
  const auto fmt = cubekit::parse_format(format);
  if (out.empty() || out == "-") {
    std::cout << (fmt == cubekit::GraphFormat::kGraph6 ? cubekit::to_graph6(g) + "\n" : cubekit::to_edge_list(g));
  } else {
    cubekit::write_graph_file(out, g, fmt);
  }
  return kOk;
}

int run_corpus(const Common& c, const std::string& profile, int jobs) {
  Stopwatch clock;
  cubekit::AuditOptions opt;
  opt.seed = c.seed;
  opt.jobs = jobs;
  opt.oracle_bound = cubekit::oracle_bound_from_env();
  auto audit = cubekit::audit_corpus(cubekit::parse_profile(profile), opt);
  if (c.json) {
    Json report = cubekit::envelope("corpus", "profile", std::string(cubekit::to_string(audit.profile)),
                                    cubekit::audit_json(audit));
    if (c.timing) report["timing_ms"] = clock.ms();
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << cubekit::audit_text(audit);
    if (c.timing) std::cout << "time: " << clock.ms() << " ms\n";
  }
  return audit.passed() ? kOk : kNegative;
}

void print_error(const Common& c, const std::string& code, const std::string& message,
                 std::optional<std::pair<int, int>> position = std::nullopt) {
  std::cerr << "cubekit: " << message << '\n';
  if (!c.json) return;
  Json err = {{"code", code}, {"message", message}};
  if (position) {
    err["line"] = position->first;
    err["column"] = position->second;
  }
  Json out;
  out["tool"] = "cubekit";
  out["version"] = cubekit::kToolVersion;
  out["error"] = std::move(err);
  std::cout << out.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cubekit: partial cubes, convex cycles and regular partial cube classification"};
  app.set_version_flag("--version", cubekit::kToolVersion);
  app.require_subcommand(1);

  Common recognize_opts, cycles_opts, classify_opts, classes_opts, embed_opts, corpus_opts;
  Common* active = &recognize_opts;
  bool oracle = false;
  bool certify = false;
  std::string gen_spec, gen_format = "g6", gen_out, profile = "SMALL";
  int jobs = 1;

  auto* recognize = app.add_subcommand("recognize", "partial-cube verdict with certificate or witness");
  add_common(recognize, recognize_opts);
  auto* cycles = app.add_subcommand("convex-cycles", "convex cycles and their length spectrum");
  add_common(cycles, cycles_opts);
  cycles->add_flag("--oracle", oracle, "compare with brute-force enumeration");
  auto* classify = app.add_subcommand("classify", "classify a regular partial cube by its convex cycles");
  add_common(classify, classify_opts);
  classify->add_flag("--certify", certify, "verify DOUBLED_ODD / EVEN_CYCLE by explicit isomorphism");
  auto* classes = app.add_subcommand("classes", "membership in the hypercube..partial-cube chain");
  add_common(classes, classes_opts);
  auto* embed = app.add_subcommand("embed", "vertex to bit-string table of the hypercube embedding");
  add_common(embed, embed_opts);
  auto* generate = app.add_subcommand("generate", "write a generated graph");
  generate->add_option("spec", gen_spec, "generator spec")->required();
  generate->add_option("--format", gen_format, "g6 or edges")->default_val("g6");
  generate->add_option("-o,--output", gen_out, "output file (stdout when omitted)");
  auto* corpus = app.add_subcommand("corpus", "run every property over the generator corpus");
  add_common(corpus, corpus_opts, false);
  corpus->add_option("--profile", profile, "SMALL or FULL")->default_val("SMALL");
  corpus->add_option("--jobs", jobs, "worker threads")->default_val(1)->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*recognize) return run_recognize(*(active = &recognize_opts));
    if (*cycles) return run_convex_cycles(*(active = &cycles_opts), oracle);
    if (*classify) return run_classify(*(active = &classify_opts), certify);
    if (*classes) return run_classes(*(active = &classes_opts));
    if (*embed) return run_embed(*(active = &embed_opts));
    if (*generate) return run_generate(gen_spec, gen_format, gen_out);
    if (*corpus) return run_corpus(*(active = &corpus_opts), profile, jobs);
  } catch (const CLI::ValidationError& e) {
    print_error(*active, "USAGE", e.what());
    return kUsage;
  } catch (const cubekit::ParseError& e) {
    print_error(*active, "PARSE_ERROR", e.what(), std::pair{e.line(), e.column()});
    return kUsage;
  } catch (const cubekit::Error& e) {
    const auto code = e.code();
    print_error(*active, std::string(cubekit::to_string(code)), e.what());
    const bool usage = code == cubekit::ErrorCode::kParseError || code == cubekit::ErrorCode::kParamRange ||
                       code == cubekit::ErrorCode::kRejectLoop || code == cubekit::ErrorCode::kRejectRange ||
                       code == cubekit::ErrorCode::kOracleBoundExceeded ||
                       code == cubekit::ErrorCode::kSizeBoundExceeded;
    return usage ? kUsage : kNegative;
  }
  return kUsage;
}
