#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vecchrom/error.hpp"
#include "vecchrom/graph.hpp"
#include "vecchrom/linalg.hpp"

namespace vecchrom {

// Projective measurement indexed by the vertices of a target graph: one d x d
// orthogonal projector per target vertex, summing to the identity. Zero
// matrices are allowed parts.
struct MeasurementTuple {
  std::vector<ComplexMatrix> parts;

  std::size_t dim() const noexcept { return parts.empty() ? 0 : parts.front().rows(); }
};

// Assignment of a measurement over `target` to every vertex of `source`.
struct QuantumHomomorphism {
  Graph source;
  Graph target;
  std::size_t d = 0;
  std::vector<MeasurementTuple> assignment;

  // Shape check only: sizes and orders agree.
  void validate_shape() const {
    if (assignment.size() != source.order()) {
      throw DimensionError("assignment covers " + std::to_string(assignment.size()) +
                           " vertices, source has " + std::to_string(source.order()));
    }
    for (std::size_t u = 0; u < assignment.size(); ++u) {
      const auto& t = assignment[u];
      if (t.parts.size() != target.order()) {
        throw DimensionError("tuple of vertex " + std::to_string(u) + " has " +
                             std::to_string(t.parts.size()) + " parts, target has " +
                             std::to_string(target.order()) + " vertices");
      }
      for (const auto& p : t.parts) {
        if (p.rows() != d || p.cols() != d) {
          throw DimensionError("tuple of vertex " + std::to_string(u) + " has a part that is not " +
                               std::to_string(d) + "x" + std::to_string(d));
        }
      }
    }
  }
};

// A vertex map that fails to be a homomorphism.
class HomomorphismError : public DomainError {
 public:
  HomomorphismError(const std::string& what, Edge edge) : DomainError(what), edge_(edge) {}
  Edge edge() const noexcept { return edge_; }

 private:
  Edge edge_;
};

enum class Condition { hermitian, idempotent, sum_to_identity, orthogonality, adjacency };

inline std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::hermitian: return "hermitian";
    case Condition::idempotent: return "idempotent";
    case Condition::sum_to_identity: return "sum_to_identity";
    case Condition::orthogonality: return "orthogonality";
    case Condition::adjacency: return "adjacency";
  }
  return "?";
}

struct MeasurementReport {
  bool pass = true;
  double hermitian = 0.0;
  double idempotent = 0.0;
  double sum_to_identity = 0.0;
  double orthogonality = 0.0;  // max ||E_v E_v'|| over distinct parts
  // First condition above tol, with the offending part (and second part for
  // orthogonality).
  std::optional<Condition> failed;
  std::size_t part = 0, other_part = 0;
};

namespace detail {

inline double product_max_abs(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (max_abs(a) == 0.0 || max_abs(b) == 0.0) return 0.0;
  return max_abs(matmul(a, b));
}

}  // namespace detail

inline MeasurementReport verify_measurement(const MeasurementTuple& t, double tol = 1e-8) {
  MeasurementReport r;
  const std::size_t d = t.dim();
  auto fail = [&](Condition c, std::size_t p, std::size_t q) {
    if (r.pass) {
      r.pass = false;
      r.failed = c;
      r.part = p;
      r.other_part = q;
    }
  };
  ComplexMatrix sum(d, d);
  for (std::size_t v = 0; v < t.parts.size(); ++v) {
    const auto& e = t.parts[v];
    if (e.rows() != d || e.cols() != d) throw DimensionError("measurement parts differ in order");
    const double h = max_abs_diff(e, adjoint(e));
    const double i = max_abs_diff(matmul(e, e), e);
    r.hermitian = std::max(r.hermitian, h);
    r.idempotent = std::max(r.idempotent, i);
    if (h > tol) fail(Condition::hermitian, v, v);
    if (i > tol) fail(Condition::idempotent, v, v);
    sum += e;
  }
  r.sum_to_identity = max_abs_diff(sum, ComplexMatrix::identity(d));
  if (r.sum_to_identity > tol) fail(Condition::sum_to_identity, 0, 0);
  for (std::size_t v = 0; v < t.parts.size(); ++v)
    for (std::size_t w = 0; w < t.parts.size(); ++w) {
      if (v == w) continue;
      const double o = detail::product_max_abs(t.parts[v], t.parts[w]);
      r.orthogonality = std::max(r.orthogonality, o);
      if (o > 10.0 * tol) fail(Condition::orthogonality, v, w);
    }
  return r;
}

struct AdjacencyReport {
  bool adjacent = true;
  double worst_residual = 0.0;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // (v, v') non-adjacent in H
};

// Adjacency in the measurement graph of h: E_v E'_v' = 0 (and E'_v' E_v = 0)
// whenever v and v' are not adjacent, including v = v'.
inline AdjacencyReport measurement_adjacent(const MeasurementTuple& t1, const MeasurementTuple& t2,
                                            const Graph& h, double tol = 1e-7) {
  if (t1.parts.size() != h.order() || t2.parts.size() != h.order()) {
    throw DimensionError("tuples are not indexed by the target graph");
  }
  if (t1.dim() != t2.dim()) throw DimensionError("tuples have different dimensions");
  AdjacencyReport r;
  for (std::size_t v = 0; v < h.order(); ++v) {
    for (std::size_t w = 0; w < h.order(); ++w) {
      if (h.adjacent(v, w)) continue;
      const double res = std::max(detail::product_max_abs(t1.parts[v], t2.parts[w]),
                                  detail::product_max_abs(t2.parts[w], t1.parts[v]));
      r.worst_residual = std::max(r.worst_residual, res);
      if (res > tol && r.adjacent) {
        r.adjacent = false;
        r.witness = {v, w};
      }
    }
  }
  return r;
}

struct QuantumHomReport {
  bool pass = true;
  double hermitian = 0.0;
  double idempotent = 0.0;
  double sum_to_identity = 0.0;
  double orthogonality = 0.0;
  double adjacency = 0.0;
  // First failure: the source vertex (and neighbor for adjacency) plus the
  // target parts involved.
  std::optional<Condition> failed;
  std::size_t vertex = 0, other_vertex = 0;
  std::size_t part = 0, other_part = 0;
};

// Structural checks at tol, orthogonality and adjacency at 10 tol (a product
// of two tol-accurate projectors carries about twice the error).
inline QuantumHomReport verify_quantum_hom(const QuantumHomomorphism& q, double tol = 1e-8) {
  q.validate_shape();
  QuantumHomReport r;
  for (std::size_t u = 0; u < q.assignment.size(); ++u) {
    const auto m = verify_measurement(q.assignment[u], tol);
    r.hermitian = std::max(r.hermitian, m.hermitian);
    r.idempotent = std::max(r.idempotent, m.idempotent);
    r.sum_to_identity = std::max(r.sum_to_identity, m.sum_to_identity);
    r.orthogonality = std::max(r.orthogonality, m.orthogonality);
    if (!m.pass && r.pass) {
      r.pass = false;
      r.failed = m.failed;
      r.vertex = r.other_vertex = u;
      r.part = m.part;
      r.other_part = m.other_part;
    }
  }
  for (auto [u, w] : q.source.edges()) {
    const auto a = measurement_adjacent(q.assignment[u], q.assignment[w], q.target, 10.0 * tol);
    r.adjacency = std::max(r.adjacency, a.worst_residual);
    if (!a.adjacent && r.pass) {
      r.pass = false;
      r.failed = Condition::adjacency;
      r.vertex = u;
      r.other_vertex = w;
      r.part = a.witness->first;
      r.other_part = a.witness->second;
    }
  }
  return r;
}

inline void require_homomorphism(const Graph& g, const Graph& h, const std::vector<std::size_t>& f) {
  if (f.size() != g.order()) throw DimensionError("vertex map does not cover the source graph");
  for (auto x : f)
    if (x >= h.order()) throw RangeError("vertex map sends a vertex outside the target");
  for (auto [u, v] : g.edges()) {
    if (!h.adjacent(f[u], f[v])) {
      throw HomomorphismError("not a homomorphism: edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") maps to non-adjacent (" +
                                  std::to_string(f[u]) + "," + std::to_string(f[v]) + ")",
                              {u, v});
    }
  }
}

// d = 1 certificate of a classical homomorphism f: g -> h.
inline QuantumHomomorphism classical_embedding(const Graph& g, const Graph& h,
                                               const std::vector<std::size_t>& f) {
  require_homomorphism(g, h, f);
  QuantumHomomorphism q{g, h, 1, {}};
  q.assignment.reserve(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) {
    MeasurementTuple t;
    t.parts.assign(h.order(), ComplexMatrix(1, 1));
    t.parts[f[u]](0, 0) = 1.0;
    q.assignment.push_back(std::move(t));
  }
  return q;
}

// phi_{(w,z)}(u, v) = phi1_w(u) (x) phi2_z(v) under row-major orderings of
// both the source and target products.
inline QuantumHomomorphism product_qhom(ProductKind kind, const QuantumHomomorphism& q1,
                                        const QuantumHomomorphism& q2) {
  q1.validate_shape();
  q2.validate_shape();
  QuantumHomomorphism q{product(kind, q1.source, q2.source), product(kind, q1.target, q2.target),
                        q1.d * q2.d, {}};
  q.assignment.reserve(q.source.order());
  for (const auto& a : q1.assignment) {
    for (const auto& b : q2.assignment) {
      MeasurementTuple t;
      t.parts.reserve(a.parts.size() * b.parts.size());
      for (const auto& pa : a.parts)
        for (const auto& pb : b.parts) t.parts.push_back(kron(pa, pb));
      q.assignment.push_back(std::move(t));
    }
  }
  return q;
}

// Post-composes with a classical homomorphism f: target -> k by summing the
// parts in each fiber: E'_c = sum over f(h) = c of E_h.
inline QuantumHomomorphism compose_classical(const QuantumHomomorphism& q, const Graph& k,
                                             const std::vector<std::size_t>& f) {
  q.validate_shape();
  require_homomorphism(q.target, k, f);
  QuantumHomomorphism out{q.source, k, q.d, {}};
  out.assignment.reserve(q.assignment.size());
  for (const auto& t : q.assignment) {
    MeasurementTuple s;
    s.parts.assign(k.order(), ComplexMatrix(q.d, q.d));
    for (std::size_t h = 0; h < t.parts.size(); ++h) s.parts[f[h]] += t.parts[h];
    out.assignment.push_back(std::move(s));
  }
  return out;
}

inline bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return g.edge_count() == n * (n - (n > 0)) / 2;
}

// Number of colors of a quantum coloring (target must be complete).
inline std::size_t color_count(const QuantumHomomorphism& q) {
  if (!is_complete(q.target)) throw DomainError("target graph is not complete");
  return q.target.order();
}

// A quantum n-coloring as a quantum n'-coloring, n' >= n, via zero parts.
inline QuantumHomomorphism pad_colors(const QuantumHomomorphism& q, std::size_t n_colors) {
  const std::size_t n = color_count(q);
  if (n_colors < n) throw DomainError("cannot pad to fewer colors");
  QuantumHomomorphism out{q.source, generate(Family::complete, n_colors), q.d, q.assignment};
  for (auto& t : out.assignment) t.parts.resize(n_colors, ComplexMatrix(q.d, q.d));
  return out;
}

// Quantum n-colorings of g and h give one of the Cartesian product: the
// tensor construction into K_n [] K_n followed by (a, b) -> a + b mod n.
inline QuantumHomomorphism quantum_sabidussi(const QuantumHomomorphism& q1,
                                             const QuantumHomomorphism& q2) {
  const std::size_t n = color_count(q1);
  if (color_count(q2) != n) {
    throw DomainError("quantum colorings use " + std::to_string(n) + " and " +
                      std::to_string(color_count(q2)) + " colors; pad the smaller one");
  }
  const auto tensor = product_qhom(ProductKind::cartesian, q1, q2);
  std::vector<std::size_t> modular(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) modular[a * n + b] = (a + b) % n;
  return compose_classical(tensor, generate(Family::complete, n), modular);
}

}  // namespace vecchrom
