#pragma once

#include "vecchrom/graph.hpp"
#include "vecchrom/sdp.hpp"

namespace vecchrom {

enum class Form { primal, dual };

namespace detail {

// Dual form: max <J, P>  s.t.  P_ij = 0 on non-edges, tr P = 1, P PSD, and
// P_ij >= 0 on edges when `nonnegative`.
inline SdpProblem dual_program(const Graph& g, bool nonnegative) {
  const std::size_t n = g.order();
  SdpProblem p;
  p.order = n;
  p.sense = Sense::maximize;
  p.objective = SymMatrix::ones(n);
  p.equalities.push_back({SymMatrix::identity(n), 1.0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j)) p.bounds.push_back(EntryBound::fixed(i, j, 0.0));
      else if (nonnegative) p.bounds.push_back(EntryBound::at_least(i, j, 0.0));
    }
  return p;
}

// Primal form over the bordered variable X = [[M, 0], [0, s]] of order n + 1
// with s = lambda - 1:  min s + 1  s.t.  M_ii = s, M_ij = -1 (or <= -1) on
// edges, X PSD.
inline SdpProblem primal_program(const Graph& g, bool relaxed) {
  const std::size_t n = g.order();
  SdpProblem p;
  p.order = n + 1;
  p.sense = Sense::minimize;
  p.objective = SymMatrix(n + 1);
  p.objective.set(n, n, 1.0);
  p.offset = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    SymMatrix a(n + 1);
    a.set(i, i, 1.0);
    a.set(n, n, -1.0);
    p.equalities.push_back({std::move(a), 0.0});
    p.bounds.push_back(EntryBound::fixed(i, n, 0.0));
  }
  for (auto [u, v] : g.edges()) {
    p.bounds.push_back(relaxed ? EntryBound::at_most(u, v, -1.0) : EntryBound::fixed(u, v, -1.0));
  }
  return p;
}

inline void require_vertices(const Graph& g) {
  if (g.order() == 0) throw DomainError("the program needs at least one vertex");
}

}  // namespace detail

// Strict vector chromatic number program.
inline SdpProblem build_theta_bar(const Graph& g, Form form) {
  detail::require_vertices(g);
  return form == Form::dual ? detail::dual_program(g, false) : detail::primal_program(g, false);
}

// Vector chromatic number program.
inline SdpProblem build_chi_vec(const Graph& g, Form form) {
  detail::require_vertices(g);
  return form == Form::dual ? detail::dual_program(g, true) : detail::primal_program(g, true);
}

// The M block (order n) of a primal-form solution of order n + 1.
inline SymMatrix primal_gram_block(const SymMatrix& x) {
  const std::size_t n = x.order() - 1;
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = x(i, j);
  return SymMatrix(std::move(m));
}

}  // namespace vecchrom
