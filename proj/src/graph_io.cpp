#include "rdr/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "rdr/errors.hpp"

namespace rdr {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

long long parse_vertex_id(std::string_view token, int line) {
  long long value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 0 || token.front() == '+') {
    throw ParseError("line " + std::to_string(line) + ": malformed vertex id '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

ParsedGraph build_from_pairs(const std::vector<std::pair<long long, long long>>& pairs) {
  if (pairs.empty()) throw ParseError("empty input: no edges");
  ParsedGraph out;
  for (const auto& [u, v] : pairs) {
    out.labels.push_back(u);
    out.labels.push_back(v);
  }
  std::sort(out.labels.begin(), out.labels.end());
  out.labels.erase(std::unique(out.labels.begin(), out.labels.end()), out.labels.end());
  const auto index = [&](long long id) {
    return static_cast<Vertex>(std::lower_bound(out.labels.begin(), out.labels.end(), id) - out.labels.begin());
  };
  std::set<Edge> edges;
  for (const auto& [u, v] : pairs) {
    const Vertex a = index(u);
    const Vertex b = index(v);
    if (!edges.emplace(std::min(a, b), std::max(a, b)).second) out.duplicates_collapsed = true;
  }
  const std::vector<Edge> list(edges.begin(), edges.end());
  out.graph = Graph(static_cast<int>(out.labels.size()), list);
  return out;
}

int graph6_byte(char c) {
  const int b = static_cast<unsigned char>(c);
  if (b < 63 || b > 126) throw ParseError("graph6 byte out of range 63..126");
  return b - 63;
}

}  // namespace

ParsedGraph parse_edge_list(std::string_view text) {
  std::vector<std::pair<long long, long long>> pairs;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two vertex ids");
    }
    const long long u = parse_vertex_id(tokens[0], line_no);
    const long long v = parse_vertex_id(tokens[1], line_no);
    if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop at " + std::to_string(u));
    pairs.emplace_back(u, v);
  }
  return build_from_pairs(pairs);
}

ParsedGraph parse_inline_edges(std::string_view text) {
  std::string lines(text);
  std::replace(lines.begin(), lines.end(), ';', '\n');
  return parse_edge_list(lines);
}

Graph parse_graph6(std::string_view record) {
  if (record.starts_with(kGraph6Header)) record.remove_prefix(kGraph6Header.size());
  while (!record.empty() && (record.back() == '\r' || record.back() == '\n')) record.remove_suffix(1);
  if (record.empty()) throw ParseError("empty graph6 record");

  std::size_t pos = 0;
  long long n = 0;
  if (record[0] != '~') {
    n = graph6_byte(record[0]);
    pos = 1;
  } else if (record.size() >= 2 && record[1] != '~') {
    if (record.size() < 4) throw ParseError("truncated graph6 header");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | graph6_byte(record[i]);
    pos = 4;
  } else {
    if (record.size() < 8) throw ParseError("truncated graph6 header");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | graph6_byte(record[i]);
    pos = 8;
  }
  if (n > 100000) throw ParseError("graph6 order too large");

  const long long bit_count = n * (n - 1) / 2;
  const long long expected = (bit_count + 5) / 6;
  if (static_cast<long long>(record.size() - pos) != expected) {
    throw ParseError("graph6 bit field has " + std::to_string(record.size() - pos) + " bytes, expected " +
                     std::to_string(expected));
  }
  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = graph6_byte(record[pos + static_cast<std::size_t>(k / 6)]);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::vector<Graph> parse_graph6_stream(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  if (out.empty()) throw ParseError("empty graph6 input");
  return out;
}

std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
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

}  // namespace rdr
