#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vecchrom/error.hpp"
#include "vecchrom/graph.hpp"
#include "vecchrom/linalg.hpp"

namespace vecchrom {

// Unit vectors on the vertices of a graph with a target value k > 1. A strict
// coloring asks for inner product exactly -1/(k-1) on every edge; a plain
// one for at most -1/(k-1).
class VectorColoring {
 public:
  VectorColoring(std::vector<Vector> vectors, double k, bool strict)
      : vectors_(std::move(vectors)), k_(k), strict_(strict) {
    if (!(k_ > 1.0) || !std::isfinite(k_)) throw DomainError("coloring value k must exceed 1");
    dim_ = vectors_.empty() ? 0 : vectors_.front().size();
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
      if (vectors_[i].size() != dim_) throw DimensionError("coloring vectors differ in dimension");
      const double norm = std::sqrt(dot(vectors_[i], vectors_[i]));
      if (std::abs(norm - 1.0) > 1e-8) {
        throw DomainError("coloring vector " + std::to_string(i) + " is not a unit vector");
      }
    }
  }

  const std::vector<Vector>& vectors() const noexcept { return vectors_; }
  const Vector& operator[](std::size_t v) const { return vectors_[v]; }
  std::size_t size() const noexcept { return vectors_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  double k() const noexcept { return k_; }
  bool strict() const noexcept { return strict_; }

  // Edge inner product -1/(k-1).
  double target() const noexcept { return -1.0 / (k_ - 1.0); }

 private:
  std::vector<Vector> vectors_;
  double k_;
  bool strict_;
  std::size_t dim_ = 0;
};

struct ClassicalColoring {
  std::vector<std::size_t> colors;
  std::size_t m = 0;

  ClassicalColoring(std::vector<std::size_t> c, std::size_t m_) : colors(std::move(c)), m(m_) {
    for (auto x : colors)
      if (x >= m) throw DomainError("color " + std::to_string(x) + " outside 0.." + std::to_string(m - 1));
  }
};

inline bool is_proper(const Graph& g, const ClassicalColoring& c) {
  if (c.colors.size() != g.order()) throw DimensionError("coloring does not cover the graph");
  for (auto [u, v] : g.edges())
    if (c.colors[u] == c.colors[v]) return false;
  return true;
}

// Vertices of the regular simplex: e_i - (1/n) 1, normalized and written in
// the Helmert basis of the hyperplane orthogonal to 1, so dimension n - 1.
inline VectorColoring simplex_coloring(std::size_t n) {
  if (n < 2) throw DomainError("simplex coloring needs n >= 2");
  const double nd = static_cast<double>(n);
  const double scale = std::sqrt(nd / (nd - 1.0));
  std::vector<Vector> vs(n, Vector(n - 1, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    // Helmert vector h_k = (1, ..., 1, -k, 0, ...) / sqrt(k (k + 1)), k = 1..n-1,
    // with k leading ones. <e_i - 1/n, h_k> = <e_i, h_k> since h_k is orthogonal to 1.
    for (std::size_t k = 1; k < n; ++k) {
      const double kd = static_cast<double>(k);
      double entry = 0.0;
      if (i < k) entry = 1.0;
      else if (i == k) entry = -kd;
      vs[i][k - 1] = scale * entry / std::sqrt(kd * (kd + 1.0));
    }
  }
  return VectorColoring(std::move(vs), nd, true);
}

// Any unit vectors color an edgeless graph at every k > 1.
inline VectorColoring constant_coloring(std::size_t n, double k, bool strict) {
  return VectorColoring(std::vector<Vector>(n, Vector{1.0}), k, strict);
}

// Turns a primal Gram matrix M with M_ii = lambda - 1 into unit vectors. The
// Gram rank is truncated at tol * lambda_max.
inline VectorColoring extract_coloring(const SymMatrix& m, double lambda, double tol, bool strict) {
  if (!(lambda > 1.0 + tol)) throw DomainError("degenerate primal value lambda <= 1");
  const double diag = lambda - 1.0;
  for (std::size_t i = 0; i < m.order(); ++i) {
    if (std::abs(m(i, i) - diag) > tol * std::max(1.0, diag)) {
      throw ValidationError("diagonal constraint M_ii = lambda - 1 violated at vertex " +
                            std::to_string(i));
    }
  }
  std::vector<Vector> vs;
  try {
    vs = gram_factor(m, tol * std::max(1.0, diag), tol);
  } catch (const NotPsdError& e) {
    throw ValidationError("PSD constraint violated: minimum eigenvalue " +
                          std::to_string(e.min_eigenvalue()));
  }
  for (auto& v : vs) {
    const double norm = std::sqrt(dot(v, v));
    for (auto& x : v) x /= norm;
  }
  return VectorColoring(std::move(vs), lambda, strict);
}

struct ColoringReport {
  bool pass = true;
  double worst_residual = 0.0;
  std::optional<Edge> worst_edge;
  std::size_t violations = 0;
};

// Strict: |<u, v> - t| <= tol on every edge; plain: <u, v> <= t + tol, with
// t = -1/(k-1).
inline ColoringReport verify_coloring(const Graph& g, const VectorColoring& c, double tol) {
  if (c.size() != g.order()) throw DimensionError("coloring does not cover the graph");
  ColoringReport r;
  const double t = c.target();
  for (auto e : g.edges()) {
    const double ip = dot(c[e.first], c[e.second]);
    const double res = c.strict() ? std::abs(ip - t) : std::max(0.0, ip - t);
    if (!r.worst_edge || res > r.worst_residual) {
      r.worst_residual = res;
      r.worst_edge = e;
    }
    if (res > tol) {
      ++r.violations;
      r.pass = false;
    }
  }
  return r;
}

// Raises a strict coloring to a larger value: phi' = (alpha phi, sqrt(1 - alpha^2))
// with alpha^2 t + (1 - alpha^2) = t'.
inline VectorColoring lift_coloring(const VectorColoring& c, double k_target) {
  if (!c.strict()) throw DomainError("lifting applies to strict colorings");
  if (k_target < c.k()) throw DomainError("lift target is below the coloring value");
  const double t = c.target(), t2 = -1.0 / (k_target - 1.0);
  const double alpha = std::sqrt((t2 - 1.0) / (t - 1.0));
  const double tail = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
  std::vector<Vector> vs;
  vs.reserve(c.size());
  for (const auto& v : c.vectors()) {
    Vector w;
    w.reserve(v.size() + 1);
    for (double x : v) w.push_back(alpha * x);
    w.push_back(tail);
    vs.push_back(std::move(w));
  }
  return VectorColoring(std::move(vs), k_target, true);
}

// (u, v) -> g(u) (x) h(v) under the row-major product ordering; colors the
// Cartesian product. Strict inputs must share k (lift the smaller first);
// plain inputs may differ and give a plain coloring at the larger k.
inline VectorColoring cartesian_tensor_coloring(const VectorColoring& cg, const VectorColoring& ch) {
  const bool strict = cg.strict() && ch.strict();
  if (cg.strict() != ch.strict()) throw DomainError("cannot mix strict and plain colorings");
  if (strict && std::abs(cg.k() - ch.k()) > 1e-9 * std::max(cg.k(), ch.k())) {
    throw DomainError("strict colorings have different k (" + std::to_string(cg.k()) + " vs " +
                      std::to_string(ch.k()) + "); lift the smaller one first");
  }
  std::vector<Vector> vs;
  vs.reserve(cg.size() * ch.size());
  for (const auto& a : cg.vectors())
    for (const auto& b : ch.vectors()) vs.push_back(kron(a, b));
  return VectorColoring(std::move(vs), std::max(cg.k(), ch.k()), strict);
}

// (u, v) -> (g(u) + h(v)) mod m; proper on the Cartesian product when both
// inputs are proper.
inline ClassicalColoring modular_coloring(const ClassicalColoring& gc, const ClassicalColoring& hc) {
  if (gc.m != hc.m) throw DomainError("modular coloring needs the same number of colors");
  std::vector<std::size_t> out;
  out.reserve(gc.colors.size() * hc.colors.size());
  for (auto a : gc.colors)
    for (auto b : hc.colors) out.push_back((a + b) % gc.m);
  return ClassicalColoring(std::move(out), gc.m);
}

}  // namespace vecchrom
