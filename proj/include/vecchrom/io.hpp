#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vecchrom/coloring.hpp"
#include "vecchrom/error.hpp"
#include "vecchrom/graph.hpp"
#include "vecchrom/graph_io.hpp"
#include "vecchrom/quantum.hpp"

namespace vecchrom {

using Json = nlohmann::json;

namespace detail {

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void spill(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

// Field access that turns type and presence errors into ValidationError.
template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ValidationError(std::string("field \"") + key + "\" has the wrong type");
  }
}

}  // namespace detail

// {"k", "strict", "dim", "vectors"}; vertex order is graph index order.
inline Json coloring_to_json(const VectorColoring& c) {
  return Json{{"k", c.k()}, {"strict", c.strict()}, {"dim", c.dim()}, {"vectors", c.vectors()}};
}

inline VectorColoring coloring_from_json(const Json& j) {
  const auto k = detail::field<double>(j, "k");
  const auto strict = detail::field<bool>(j, "strict");
  const auto dim = detail::field<std::size_t>(j, "dim");
  auto vectors = detail::field<std::vector<Vector>>(j, "vectors");
  for (const auto& v : vectors)
    if (v.size() != dim) throw ValidationError("coloring vector length differs from \"dim\"");
  try {
    return VectorColoring(std::move(vectors), k, strict);
  } catch (const DomainError& e) {
    throw ValidationError(e.what());
  }
}

inline void write_coloring_file(const VectorColoring& c, const std::filesystem::path& path) {
  detail::spill(path, coloring_to_json(c).dump(1) + "\n");
}

inline VectorColoring read_coloring_file(const std::filesystem::path& path) {
  return coloring_from_json(detail::parse_json(detail::slurp(path)));
}

inline Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.order()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const Json& j, std::string label = {}) {
  const auto n = detail::field<std::size_t>(j, "n");
  const auto pairs = detail::field<std::vector<std::vector<std::size_t>>>(j, "edges");
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& p : pairs) {
    if (p.size() != 2) throw ValidationError("edge entries must be pairs");
    edges.emplace_back(p[0], p[1]);
  }
  return Graph(n, std::move(edges), std::move(label));
}

// {"d", "n_colors", "graph", "assignment"}: assignment[u][c] is the d x d
// projector of color c at vertex u, rows of [re, im] pairs. The target is
// K_{n_colors}.
inline Json certificate_to_json(const QuantumHomomorphism& q) {
  const std::size_t n_colors = color_count(q);
  q.validate_shape();
  Json assignment = Json::array();
  for (const auto& t : q.assignment) {
    Json tuple = Json::array();
    for (const auto& e : t.parts) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < e.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < e.cols(); ++j) row.push_back({e(i, j).real(), e(i, j).imag()});
        rows.push_back(std::move(row));
      }
      tuple.push_back(std::move(rows));
    }
    assignment.push_back(std::move(tuple));
  }
  return Json{{"d", q.d},
              {"n_colors", n_colors},
              {"graph", graph_to_json(q.source)},
              {"assignment", std::move(assignment)}};
}

// A string "graph" field names an edge-list file, relative to base_dir.
inline QuantumHomomorphism certificate_from_json(const Json& j,
                                                 const std::filesystem::path& base_dir = {}) {
  const auto d = detail::field<std::size_t>(j, "d");
  const auto n_colors = detail::field<std::size_t>(j, "n_colors");
  if (d == 0) throw ValidationError("certificate dimension d must be positive");
  if (!j.contains("graph")) throw ValidationError("missing field \"graph\"");
  const Json& gj = j.at("graph");
  Graph source = gj.is_string() ? read_graph_file((base_dir / gj.get<std::string>()).string())
                                : graph_from_json(gj);

  const Json& aj = j.contains("assignment") ? j.at("assignment") : Json();
  if (!aj.is_array()) throw ValidationError("missing or non-array field \"assignment\"");
  if (aj.size() != source.order()) {
    throw ValidationError("assignment has " + std::to_string(aj.size()) + " tuples for " +
                          std::to_string(source.order()) + " vertices");
  }
  QuantumHomomorphism q{std::move(source), generate(Family::complete, n_colors), d, {}};
  q.assignment.reserve(aj.size());
  for (std::size_t u = 0; u < aj.size(); ++u) {
    const Json& tj = aj[u];
    const std::string where = "vertex " + std::to_string(u);
    if (!tj.is_array() || tj.size() != n_colors) {
      throw ValidationError(where + ": expected " + std::to_string(n_colors) + " matrices");
    }
    MeasurementTuple t;
    t.parts.reserve(n_colors);
    for (const Json& mj : tj) {
      if (!mj.is_array() || mj.size() != d) throw ValidationError(where + ": matrix is not " + std::to_string(d) + "x" + std::to_string(d));
      ComplexMatrix e(d, d);
      for (std::size_t r = 0; r < d; ++r) {
        const Json& row = mj[r];
        if (!row.is_array() || row.size() != d) throw ValidationError(where + ": matrix row has the wrong length");
        for (std::size_t c = 0; c < d; ++c) {
          const Json& z = row[c];
          if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
            throw ValidationError(where + ": matrix entries must be [re, im] pairs");
          }
          e(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
        }
      }
      t.parts.push_back(std::move(e));
    }
    q.assignment.push_back(std::move(t));
  }
  return q;
}

inline void write_certificate_file(const QuantumHomomorphism& q, const std::filesystem::path& path) {
  detail::spill(path, certificate_to_json(q).dump() + "\n");
}

inline QuantumHomomorphism read_certificate_file(const std::filesystem::path& path) {
  return certificate_from_json(detail::parse_json(detail::slurp(path)), path.parent_path());
}

}  // namespace vecchrom
