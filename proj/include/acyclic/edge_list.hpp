#pragma once

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "acyclic/errors.hpp"
#include "acyclic/graph.hpp"

namespace acyclic {

// Edge-list text format: a header line `n m`, then m lines `u v` with 0-based
// vertex ids. Blank lines are skipped.

namespace detail {

inline bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) return true;
  }
  return false;
}

inline void expect_end(std::istringstream& ls, std::size_t lineno) {
  std::string extra;
  if (ls >> extra) throw ParseError(lineno, "unexpected trailing token '" + extra + "'");
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!detail::next_content_line(in, line, lineno)) throw ParseError(1, "missing header 'n m'");
  long long n = -1, m = -1;
  {
    std::istringstream ls(line);
    if (!(ls >> n >> m) || n < 0 || m < 0) throw ParseError(lineno, "header must be 'n m' with n, m >= 0");
    detail::expect_end(ls, lineno);
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::set<Edge> seen;
  for (long long i = 0; i < m; ++i) {
    if (!detail::next_content_line(in, line, lineno)) {
      throw ParseError(lineno + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    std::istringstream ls(line);
    long long u = -1, v = -1;
    if (!(ls >> u >> v)) throw ParseError(lineno, "expected 'u v'");
    detail::expect_end(ls, lineno);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError(lineno, "vertex id out of range [0," + std::to_string(n) + ")");
    }
    if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
    Edge e = Edge::canonical(static_cast<VertexId>(u), static_cast<VertexId>(v));
    if (!seen.insert(e).second) {
      throw ParseError(lineno, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    edges.push_back(e);
  }
  if (detail::next_content_line(in, line, lineno)) throw ParseError(lineno, "more edges than declared in header");
  return Graph(static_cast<int>(n), edges);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace acyclic
