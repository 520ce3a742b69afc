#include "cubekit/families.hpp"

#include <bit>
#include <cctype>
#include <charconv>

#include "cubekit/error.hpp"

namespace cubekit {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kParamRange, what);
}

std::string bit_string(unsigned value, int width) {
  std::string s(width, '0');
  for (int i = 0; i < width; ++i) {
    if (value >> (width - 1 - i) & 1U) s[i] = '1';
  }
  return s;
}

std::string subset_name(unsigned mask) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; mask >> i; ++i) {
    if (mask >> i & 1U) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  }
  return s + "}";
}

}  // namespace

Graph hypercube(int n) {
  require(n >= 0 && n <= 16, "hypercube dimension must lie in [0, 16]");
  const int count = 1 << n;
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < count; ++x) {
    for (int b = 0; b < n; ++b) {
      int y = x ^ (1 << b);
      if (x < y) pairs.push_back({x, y});
    }
  }
  Graph g = Graph::from_edge_list(pairs, count);
  if (n == 0) return g;
  std::vector<std::string> names;
  names.reserve(count);
  for (int x = 0; x < count; ++x) names.push_back(bit_string(x, n));
  return g.with_names(std::move(names));
}

Graph doubled_odd(int k) {
  require(k >= 1 && k <= 8, "Doubled Odd parameter must lie in [1, 8]");
  const int ground = 2 * k - 1;
  std::vector<unsigned> lower;
  std::vector<unsigned> upper;
  // Ascending masks of fixed popcount enumerate subsets in colex order.
  for (unsigned mask = 0; mask < (1U << ground); ++mask) {
    const int pc = std::popcount(mask);
    if (pc == k - 1) lower.push_back(mask);
    if (pc == k) upper.push_back(mask);
  }
  const int offset = static_cast<int>(lower.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < offset; ++i) {
    for (int j = 0; j < static_cast<int>(upper.size()); ++j) {
      if ((lower[i] & upper[j]) == lower[i]) pairs.push_back({i, offset + j});
    }
  }
  std::vector<std::string> names;
  for (unsigned m : lower) names.push_back(subset_name(m));
  for (unsigned m : upper) names.push_back(subset_name(m));
  return Graph::from_edge_list(pairs, offset + static_cast<int>(upper.size()))
      .with_names(std::move(names));
}

Graph cycle(int length) {
  require(length >= 3 && length <= 200000, "cycle length must lie in [3, 200000]");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < length; ++i) pairs.push_back({i, (i + 1) % length});
  return Graph::from_edge_list(pairs, length);
}

Graph even_cycle(int n) {
  require(n >= 2 && n <= 100000, "even cycle parameter must lie in [2, 100000]");
  return cycle(2 * n);
}

Graph q3_minus() {
  auto sub = induced_subgraph(hypercube(3), [] {
    VertexSet s = VertexSet::full(8);
    s.erase(7);
    return s;
  }());
  return sub.graph;
}

Graph path(int n) {
  require(n >= 1 && n <= kDeskScaleVertices, "path length must lie in [1, 2000]");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.push_back({i, i + 1});
  return Graph::from_edge_list(pairs, n);
}

Graph grid(int m, int n) {
  require(m >= 1 && n >= 1 && m * n <= kDeskScaleVertices, "grid sides must be positive and m*n <= 2000");
  return cartesian_product(path(m), path(n));
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1 && a + b <= kDeskScaleVertices,
          "complete bipartite sides must be positive and a+b <= 2000");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) pairs.push_back({i, a + j});
  }
  return Graph::from_edge_list(pairs, a + b);
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  FamilySpec parse_all() {
    FamilySpec s = parse_one();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(1, static_cast<int>(pos_) + 1, msg + " in family spec '" + std::string(text_) + "'");
  }

  std::string word() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0)) ++pos_;
    std::string w(text_.substr(start, pos_ - start));
    for (auto& ch : w) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    return w;
  }

  int number() {
    int value = 0;
    auto* first = text_.data() + pos_;
    auto* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  FamilySpec parse_one() {
    const std::size_t tag_pos = pos_;
    std::string tag = word();
    FamilySpec s;
    if (tag == "PROD") {
      s.family = Family::kProduct;
      expect('(');
      s.factors.push_back(parse_one());
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        s.factors.push_back(parse_one());
      }
      if (s.factors.size() < 2 && pos_ < text_.size() && text_[pos_] == ')') fail("PROD needs at least two factors");
      expect(')');
      return s;
    }
    if (tag == "Q3MINUS") {
      s.family = Family::kQ3Minus;
      return s;
    }
    if (tag == "GRID") {
      s.family = Family::kGrid;
      expect(':');
      s.params.push_back(number());
      if (pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'X')) {
        ++pos_;
      } else {
        fail("expected 'x'");
      }
      s.params.push_back(number());
      return s;
    }
    if (tag == "KB") {
      s.family = Family::kCompleteBipartite;
      expect(':');
      s.params.push_back(number());
      expect(',');
      s.params.push_back(number());
      return s;
    }
    if (tag == "Q") {
      s.family = Family::kHypercube;
    } else if (tag == "DO") {
      s.family = Family::kDoubledOdd;
    } else if (tag == "C") {
      s.family = Family::kCycle;
    } else if (tag == "P") {
      s.family = Family::kPath;
    } else {
      pos_ = tag_pos;
      fail("unknown family '" + tag + "'");
    }
    expect(':');
    s.params.push_back(number());
    return s;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) { return SpecParser(text).parse_all(); }

std::string FamilySpec::to_string() const {
  auto p = [&](std::size_t i) { return std::to_string(params.at(i)); };
  switch (family) {
    case Family::kHypercube: return "Q:" + p(0);
    case Family::kDoubledOdd: return "DO:" + p(0);
    case Family::kCycle: return "C:" + p(0);
    case Family::kPath: return "P:" + p(0);
    case Family::kGrid: return "GRID:" + p(0) + "x" + p(1);
    case Family::kQ3Minus: return "Q3MINUS";
    case Family::kCompleteBipartite: return "KB:" + p(0) + "," + p(1);
    case Family::kProduct: {
      std::string s = "PROD(";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) s += ",";
        s += factors[i].to_string();
      }
      return s + ")";
    }
  }
  return "?";
}

Graph FamilySpec::build() const {
  switch (family) {
    case Family::kHypercube: return hypercube(params.at(0));
    case Family::kDoubledOdd: return doubled_odd(params.at(0));
    case Family::kCycle: return cycle(params.at(0));
    case Family::kPath: return path(params.at(0));
    case Family::kGrid: return grid(params.at(0), params.at(1));
    case Family::kQ3Minus: return q3_minus();
    case Family::kCompleteBipartite: return complete_bipartite(params.at(0), params.at(1));
    case Family::kProduct: {
      Graph g = factors.front().build();
      for (std::size_t i = 1; i < factors.size(); ++i) {
        Graph h = factors[i].build();
        require(static_cast<long>(g.vertex_count()) * h.vertex_count() <= kDeskScaleVertices,
                "product exceeds 2000 vertices");
        g = cartesian_product(g, h);
      }
      return g;
    }
  }
  throw Error(ErrorCode::kParamRange, "unknown family");
}

std::vector<CorpusEntry> corpus(CorpusProfile profile) {
  std::vector<std::string> specs = {
      "Q:0", "Q:1", "Q:2", "Q:3", "Q:4",
      "DO:1", "DO:2", "DO:3",
      "C:4", "C:6", "C:8", "C:10", "C:12",
      "P:2", "P:3", "P:5",
      "GRID:2x3", "GRID:3x3", "GRID:2x4", "GRID:3x4", "GRID:4x4",
      "Q3MINUS",
      "KB:1,3", "KB:2,2",
      "PROD(P:3,C:4)", "PROD(C:6,P:2)", "PROD(C:8,P:2)", "PROD(Q:2,C:6)",
      "PROD(DO:2,P:3)",
  };
  const std::vector<std::string> negatives = {"KB:2,3", "C:5", "KB:3,3"};
  if (profile == CorpusProfile::kFull) {
    for (const char* s : {"Q:5", "Q:6", "Q:7", "Q:8", "DO:4", "C:14", "C:16", "C:18", "C:20",
                          "PROD(DO:3,P:2)", "PROD(Q:3,C:6)"}) {
      specs.emplace_back(s);
    }
  }
  std::vector<CorpusEntry> out;
  for (const auto& s : specs) {
    auto spec = FamilySpec::parse(s);
    out.push_back({spec.to_string(), spec, spec.build(), false});
  }
  for (const auto& s : negatives) {
    auto spec = FamilySpec::parse(s);
    out.push_back({spec.to_string(), spec, spec.build(), true});
  }
  return out;
}

std::string_view to_string(CorpusProfile p) {
  return p == CorpusProfile::kSmall ? "SMALL" : "FULL";
}

CorpusProfile parse_profile(std::string_view text) {
  if (text == "SMALL" || text == "small") return CorpusProfile::kSmall;
  if (text == "FULL" || text == "full") return CorpusProfile::kFull;
  throw Error(ErrorCode::kParamRange, "profile must be SMALL or FULL");
}

}  // namespace cubekit
