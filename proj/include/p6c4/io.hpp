#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"

// Text formats.  Edge-list is the human-facing format: a "n m" header line,
// then m lines "u v" with 0-based endpoints; blank lines and #-comments are
// skipped and parse errors carry the 1-based line number.  graph6 is the
// compact interchange format: one graph per line, 6 bits per character,
// offset 63, upper triangle in column order.

namespace p6c4 {

namespace detail {

// Pull the next line with content onto `line`; false on clean EOF.
inline bool next_data_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    size_t at = line.find_first_not_of(" \t\r");
    if (at == std::string::npos || line[at] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace detail

inline Graph parse_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!detail::next_data_line(in, line, lineno))
    throw graph_error("edge list: empty input, expected a \"n m\" header");
  int n = 0, m = 0;
  {
    std::istringstream hdr(line);
    char extra;
    if (!(hdr >> n >> m) || (hdr >> extra))
      throw graph_error("edge list line " + std::to_string(lineno) +
                        ": header must be \"n m\"");
  }
  if (n < 0 || m < 0)
    throw graph_error("edge list line " + std::to_string(lineno) + ": negative count");
  std::vector<Edge> es;
  es.reserve(m);
  for (int k = 0; k < m; ++k) {
    if (!detail::next_data_line(in, line, lineno))
      throw graph_error("edge list: input ended after " + std::to_string(k) + " of " +
                        std::to_string(m) + " edges");
    std::istringstream row(line);
    int u = 0, v = 0;
    char extra;
    if (!(row >> u >> v) || (row >> extra))
      throw graph_error("edge list line " + std::to_string(lineno) +
                        ": edge must be \"u v\"");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw graph_error("edge list line " + std::to_string(lineno) +
                        ": endpoint out of range 0.." + std::to_string(n - 1));
    if (u == v)
      throw graph_error("edge list line " + std::to_string(lineno) + ": self-loop");
    es.emplace_back(u, v);
  }
  return Graph::build(n, es);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
}

// ---- graph6 ----

inline std::string encode_graph6(const Graph& g) {
  const int n = g.n();
  std::string s;
  if (n <= 62) {
    s += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    s += '~';
    s += static_cast<char>(((n >> 12) & 63) + 63);
    s += static_cast<char>(((n >> 6) & 63) + 63);
    s += static_cast<char>((n & 63) + 63);
  } else {
    throw graph_error("graph6: too many vertices to encode");
  }
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        s += static_cast<char>(acc + 63);
        acc = 0, bits = 0;
      }
    }
  if (bits) s += static_cast<char>((acc << (6 - bits)) + 63);
  return s;
}

inline Graph decode_graph6(std::string line) {
  // tolerate the optional ">>graph6<<" prelude and trailing whitespace
  const std::string prelude = ">>graph6<<";
  if (line.rfind(prelude, 0) == 0) line.erase(0, prelude.size());
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' '))
    line.pop_back();
  if (line.empty()) throw graph_error("graph6: empty line");
  size_t at = 0;
  auto sextet = [&]() -> int {
    if (at >= line.size()) throw graph_error("graph6: truncated");
    unsigned char c = static_cast<unsigned char>(line[at++]);
    if (c < 63 || c > 126)
      throw graph_error("graph6: byte " + std::to_string(at) + " out of range");
    return c - 63;
  };
  long long n = sextet();
  if (n == 63) {  // '~': 18-bit (or 36-bit, '~~') vertex count follows
    n = sextet();
    if (n == 63) throw graph_error("graph6: vertex count beyond supported range");
    n = n << 6 | sextet();
    n = n << 6 | sextet();
  }
  std::vector<Edge> es;
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (bits == 0) {
        acc = sextet();
        bits = 6;
      }
      if (acc & (1 << --bits)) es.emplace_back(i, j);
    }
  return Graph::build(static_cast<int>(n), es);
}

// ---- format selection ----

enum class GraphFormat { AUTO, EDGE_LIST, GRAPH6 };

inline GraphFormat format_from_extension(const std::string& path) {
  size_t dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  return ext == ".g6" ? GraphFormat::GRAPH6 : GraphFormat::EDGE_LIST;
}

// Edge lists open with a digit; graph6 bytes all sit at or above '?' (63).
inline GraphFormat sniff_format(const std::string& first_data_line) {
  for (char c : first_data_line) {
    if (c == ' ' || c == '\t') continue;
    return (c >= '0' && c <= '9') ? GraphFormat::EDGE_LIST : GraphFormat::GRAPH6;
  }
  return GraphFormat::EDGE_LIST;
}

inline Graph read_graph(std::istream& in, GraphFormat fmt) {
  if (fmt == GraphFormat::AUTO) {
    std::ostringstream all;
    all << in.rdbuf();
    std::string text = all.str();
    std::istringstream probe(text);
    std::string line;
    int lineno = 0;
    if (!detail::next_data_line(probe, line, lineno))
      throw graph_error("graph input is empty");
    std::istringstream replay(text);
    return read_graph(replay, sniff_format(line));
  }
  if (fmt == GraphFormat::EDGE_LIST) return parse_edge_list(in);
  std::string line;
  int lineno = 0;
  if (!detail::next_data_line(in, line, lineno)) throw graph_error("graph6: empty input");
  return decode_graph6(line);
}

}  // namespace p6c4
