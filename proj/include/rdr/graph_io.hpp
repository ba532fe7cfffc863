#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rdr/graph.hpp"

namespace rdr {

struct ParsedGraph {
  Graph graph;
  /// Original vertex ids; labels[v] is the input id compacted to v.
  std::vector<long long> labels;
  /// Set when repeated edges were collapsed into one.
  bool duplicates_collapsed = false;
};

/// Whitespace-separated "u v" pairs, one per line; '#' starts a comment line.
/// Vertex ids are compacted to 0..n-1 in increasing order.
/// Throws ParseError on malformed tokens, self-loops or empty input.
ParsedGraph parse_edge_list(std::string_view text);

/// "u v;u v;..." shorthand used on the command line.
ParsedGraph parse_inline_edges(std::string_view text);

/// One graph6 record (no trailing newline). Throws ParseError.
Graph parse_graph6(std::string_view record);

/// All records of a graph6 stream; blank lines and a leading ">>graph6<<"
/// header are skipped.
std::vector<Graph> parse_graph6_stream(std::string_view text);

std::string to_graph6(const Graph& g);

}  // namespace rdr
