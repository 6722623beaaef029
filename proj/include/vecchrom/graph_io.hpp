#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "vecchrom/error.hpp"
#include "vecchrom/graph.hpp"

namespace vecchrom {

// Edge-list text format:
//
//   n m
//   u v      (m lines, 0-based)
//
// Fields are whitespace separated; '#' starts a comment running to end of
// line; blank lines are ignored. Duplicate edges collapse.
inline Graph parse_graph(std::string_view text, std::string label = {}) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0, seen = 0;
  std::vector<Edge> edges;

  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream fields(raw);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b) || (fields >> extra)) {
      throw ParseError("expected exactly two fields", line_no);
    }
    auto to_index = [&](const std::string& s) -> std::size_t {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("'" + s + "' is not a nonnegative integer", line_no);
      }
      try {
        return std::stoull(s);
      } catch (const std::exception&) {
        throw ParseError("'" + s + "' is out of range", line_no);
      }
    };
    const std::size_t x = to_index(a), y = to_index(b);
    if (!have_header) {
      n = x;
      m = y;
      have_header = true;
      continue;
    }
    if (seen == m) throw ParseError("more edge lines than the declared " + std::to_string(m), line_no);
    if (x >= n || y >= n) {
      throw RangeError("endpoint >= n = " + std::to_string(n), line_no);
    }
    if (x == y) throw ValidationError("self-loop at vertex " + std::to_string(x), line_no);
    edges.emplace_back(x, y);
    ++seen;
  }
  if (!have_header) throw ParseError("missing 'n m' header line");
  if (seen != m) {
    throw ParseError("declared " + std::to_string(m) + " edges but found " + std::to_string(seen));
  }
  return Graph(n, edges, std::move(label));
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_graph(buf.str(), path);
}

// Writes edges sorted lexicographically, one "u v" per line.
inline std::string format_graph(const Graph& g) {
  const auto edges = g.edges();
  std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (auto [u, v] : edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write graph file '" + path + "'");
  f << format_graph(g);
}

}  // namespace vecchrom
