#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cubekit/graph.hpp"

namespace cubekit {

// graph6: N(n) then the upper triangle column by column (x(0,1), x(0,2),
// x(1,2), ...), six bits per byte, big-endian, each byte offset by 63. An
// optional ">>graph6<<" header is accepted and a trailing newline ignored.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Edge list: one "u v" pair per line, '#' starts a comment, a line with a
// single token declares a vertex. With an "n=<count>" header as the first
// content line the tokens are integer indices below count; without it every
// token is a vertex name and ids follow first appearance.
Graph parse_edge_list(std::string_view text);
// Named graphs are written as name declarations followed by name pairs,
// unnamed ones with an n= header.
std::string to_edge_list(const Graph& g);

enum class GraphFormat { kGraph6, kEdgeList };

std::string_view to_string(GraphFormat f);
GraphFormat parse_format(std::string_view text);

// ".g6"/".graph6" extensions or a ">>graph6<<" header select graph6.
GraphFormat detect_format(const std::filesystem::path& path, std::string_view content);

// Throws ParseError for unreadable files and malformed content.
Graph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const Graph& g, GraphFormat format);

}  // namespace cubekit
