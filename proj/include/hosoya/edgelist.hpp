#pragma once

#include "hosoya/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hosoya {

// Plain-text graph format:
//   line 1:       "n m"  (decimal, space separated)
//   next m lines: "u v"  with 0 <= u,v < n
// Lines whose first non-blank character is '#' are comments; blank lines are
// ignored; LF and CRLF both accepted. Multi-graph streams separate records
// with a line containing exactly "%".

Graph parse_edge_list(std::string_view text); // throws Errc::parse_error or graph errors

// Canonical emission: sorted edges, LF line endings, no comments.
std::string format_edge_list(const Graph& g);

std::vector<Graph> parse_graph_stream(std::string_view text);
std::string format_graph_stream(const std::vector<Graph>& graphs);

Graph read_edge_list_file(const std::string& path);

} // namespace hosoya
