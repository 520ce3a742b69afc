#include "cubekit/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "cubekit/error.hpp"

namespace cubekit {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
// Keeps the upper triangle below ~600 MB of bits; graphs this size are far
// beyond what the analyses handle anyway.
constexpr std::int64_t kMaxGraph6Vertices = 100000;

class Graph6Reader {
 public:
  Graph6Reader(std::string_view text, int column_offset) : text_(text), offset_(column_offset) {}

  Graph read() {
    const std::int64_t n = read_size();
    if (n > kMaxGraph6Vertices) fail(0, "graph6 vertex count " + std::to_string(n) + " exceeds 100000");
    const std::int64_t bits = n * (n - 1) / 2;
    const std::int64_t bytes = (bits + 5) / 6;
    if (static_cast<std::int64_t>(text_.size() - pos_) != bytes) {
      fail(text_.size() < pos_ + bytes ? text_.size() : pos_ + bytes,
           "expected " + std::to_string(bytes) + " adjacency bytes, found " + std::to_string(text_.size() - pos_));
    }
    std::vector<std::pair<int, int>> pairs;
    std::int64_t k = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++k) {
        if (bit(k)) pairs.push_back({i, j});
      }
    }
    for (; k < bytes * 6; ++k) {
      if (bit(k)) fail(pos_ + k / 6, "non-zero padding bit");
    }
    return Graph::from_edge_list(pairs, static_cast<int>(n));
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
    throw ParseError(1, offset_ + static_cast<int>(at) + 1, msg);
  }

  int value(std::size_t at) const {
    if (at >= text_.size()) fail(at, "truncated graph6 size field");
    const int c = static_cast<unsigned char>(text_[at]);
    if (c < 63 || c > 126) fail(at, "byte outside the graph6 range 63..126");
    return c - 63;
  }

  std::int64_t read_size() {
    if (text_.empty()) fail(0, "empty graph6 string");
    if (value(0) < 63) {
      pos_ = 1;
      return value(0);
    }
    std::int64_t n = 0;
    if (text_.size() > 1 && value(1) == 63) {
      for (std::size_t i = 2; i < 8; ++i) n = n << 6 | value(i);
      pos_ = 8;
    } else {
      for (std::size_t i = 1; i < 4; ++i) n = n << 6 | value(i);
      pos_ = 4;
    }
    return n;
  }

  bool bit(std::int64_t k) const {
    const int byte = value(pos_ + static_cast<std::size_t>(k / 6));
    return (byte >> (5 - k % 6) & 1) != 0;
  }

  std::string_view text_;
  int offset_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  int offset = 0;
  if (text.starts_with(kGraph6Header)) {
    text.remove_prefix(kGraph6Header.size());
    offset = static_cast<int>(kGraph6Header.size());
  }
  std::string_view body = trim(text);
  if (body.find('\n') != std::string_view::npos) {
    throw ParseError(2, 1, "graph6 input holds more than one graph");
  }
  return Graph6Reader(body, offset).read();
}

std::string to_graph6(const Graph& g) {
  const std::int64_t n = g.vertex_count();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n < 258048) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + (n >> shift & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + (n >> shift & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = acc << 1 | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

bool parse_int(std::string_view s, long long& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<int> count;
  std::vector<std::string> names;
  std::unordered_map<std::string, int> ids;
  std::vector<std::pair<int, int>> pairs;
  bool seen_content = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (!seen_content && tokens.size() == 1 && tokens[0].text.starts_with("n=")) {
      long long n = 0;
      if (!parse_int(tokens[0].text.substr(2), n) || n < 0 || n > 10000000) {
        throw ParseError(line_no, tokens[0].column + 2, "n= header needs a non-negative integer");
      }
      count = static_cast<int>(n);
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (tokens.size() > 2) throw ParseError(line_no, tokens[2].column, "expected at most two tokens per line");

    std::vector<int> ends;
    for (const auto& t : tokens) {
      if (count) {
        long long v = 0;
        if (!parse_int(t.text, v)) throw ParseError(line_no, t.column, "expected an integer vertex index");
        if (v < 0 || v >= *count) {
          throw ParseError(line_no, t.column,
                           "vertex " + std::string(t.text) + " outside 0.." + std::to_string(*count - 1));
        }
        ends.push_back(static_cast<int>(v));
      } else {
        std::string name(t.text);
        auto [it, inserted] = ids.try_emplace(name, static_cast<int>(names.size()));
        if (inserted) names.push_back(name);
        ends.push_back(it->second);
      }
    }
    if (ends.size() == 2) {
      if (ends[0] == ends[1]) throw ParseError(line_no, tokens[1].column, "self-loop");
      pairs.push_back({ends[0], ends[1]});
    }
  }

  if (count) return Graph::from_edge_list(pairs, *count);
  Graph g = Graph::from_edge_list(pairs, static_cast<int>(names.size()));
  if (names.empty()) return g;
  return g.with_names(std::move(names));
}

namespace {

bool writable_names(const Graph& g) {
  if (!g.has_names()) return false;
  std::unordered_map<std::string, int> seen;
  for (const auto& name : g.names()) {
    if (name.empty() || name.starts_with("n=")) return false;
    for (char c : name) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '#') return false;
    }
    if (!seen.emplace(name, 0).second) return false;
  }
  return true;
}

}  // namespace

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  if (writable_names(g)) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << g.name(v) << '\n';
    for (const auto& e : g.edges()) out << g.name(e.u) << ' ' << g.name(e.v) << '\n';
  } else {
    out << "n=" << g.vertex_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  }
  return out.str();
}

std::string_view to_string(GraphFormat f) { return f == GraphFormat::kGraph6 ? "g6" : "edges"; }

GraphFormat parse_format(std::string_view text) {
  if (text == "g6" || text == "graph6") return GraphFormat::kGraph6;
  if (text == "edges" || text == "edgelist") return GraphFormat::kEdgeList;
  throw Error(ErrorCode::kParamRange, "format must be g6 or edges");
}

GraphFormat detect_format(const std::filesystem::path& path, std::string_view content) {
  const auto ext = path.extension().string();
  if (ext == ".g6" || ext == ".graph6") return GraphFormat::kGraph6;
  if (content.starts_with(kGraph6Header)) return GraphFormat::kGraph6;
  return GraphFormat::kEdgeList;
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string content = buf.str();
  return detect_format(path, content) == GraphFormat::kGraph6 ? parse_graph6(content) : parse_edge_list(content);
}

void write_graph_file(const std::filesystem::path& path, const Graph& g, GraphFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParamRange, "cannot write " + path.string());
  if (format == GraphFormat::kGraph6) {
    out << to_graph6(g) << '\n';
  } else {
    out << to_edge_list(g);
  }
}

}  // namespace cubekit
