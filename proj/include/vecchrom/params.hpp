#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vecchrom/error.hpp"
#include "vecchrom/graph.hpp"
#include "vecchrom/linalg.hpp"
#include "vecchrom/onehom.hpp"
#include "vecchrom/programs.hpp"
#include "vecchrom/sdp.hpp"

namespace vecchrom {

enum class Method { sdp, spectral, convention };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::sdp: return "sdp";
    case Method::spectral: return "spectral";
    case Method::convention: return "convention";
  }
  return "?";
}

// One SDP run behind a parameter value.
struct SolveRecord {
  Form form;
  double objective;
  double dual_objective;
  double gap;
  std::size_t iterations;
  SolveStatus status;
};

struct ParamResult {
  double value = 0.0;
  std::optional<SymMatrix> primal_certificate;  // Gram matrix M (order n)
  std::optional<SymMatrix> dual_certificate;    // P
  double gap = 0.0;
  Method method = Method::convention;
  std::vector<SolveRecord> solves;
};

// An SDP run ended without an optimality certificate. Carries what was
// computed so far.
class SolverFailure : public Error {
 public:
  SolverFailure(const std::string& what, ParamResult partial)
      : Error(what), partial_(std::move(partial)) {}
  const ParamResult& partial() const noexcept { return partial_; }

 private:
  ParamResult partial_;
};

enum class Certificates { dual_only, primal_and_dual };

namespace detail {

inline ParamResult sdp_parameter(const Graph& g, const SolverConfig& cfg, Certificates certs,
                                 bool relaxed, std::string_view name) {
  ParamResult r;
  if (!g.has_edges()) {
    r.value = 1.0;
    r.method = Method::convention;
    return r;
  }
  r.method = Method::sdp;
  auto build = [&](Form f) { return relaxed ? build_chi_vec(g, f) : build_theta_bar(g, f); };
  auto record = [&](Form f, const SdpSolution& s) {
    r.solves.push_back({f, s.objective, s.dual_objective, s.gap, s.iterations, s.status});
    if (s.status != SolveStatus::optimal) {
      throw SolverFailure(std::string(name) + " " + (f == Form::dual ? "dual" : "primal") +
                              " solve ended with status " + std::string(to_string(s.status)),
                          r);
    }
  };

  const auto dual = solve(build(Form::dual), cfg);
  r.value = dual.objective;
  r.gap = dual.gap;
  r.dual_certificate = dual.x;
  record(Form::dual, dual);

  if (certs == Certificates::primal_and_dual) {
    const auto primal = solve(build(Form::primal), cfg);
    r.primal_certificate = primal_gram_block(primal.x);
    record(Form::primal, primal);
    r.gap = std::max({dual.gap, primal.gap, std::abs(primal.objective - dual.objective)});
  }
  return r;
}

}  // namespace detail

// Strict vector chromatic number. Edgeless graphs get the value 1 without a
// solve.
inline ParamResult theta_bar(const Graph& g, const SolverConfig& cfg = {},
                             Certificates certs = Certificates::dual_only) {
  return detail::sdp_parameter(g, cfg, certs, false, "theta_bar");
}

// Vector chromatic number. Edgeless graphs get the value 1 without a solve.
inline ParamResult chi_vec(const Graph& g, const SolverConfig& cfg = {},
                           Certificates certs = Certificates::dual_only) {
  return detail::sdp_parameter(g, cfg, certs, true, "chi_vec");
}

inline SymMatrix adjacency_matrix(const Graph& g) {
  const std::size_t n = g.order();
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = g.adjacent(i, j) ? 1.0 : 0.0;
  return SymMatrix(std::move(a));
}

// 1 - (2e/n) / tau, tau the least adjacency eigenvalue. A lower bound on the
// vector chromatic number.
inline double spectral_lower_bound(const Graph& g) {
  if (!g.has_edges()) throw DomainError("spectral lower bound needs at least one edge");
  const double tau = eigenvalues(adjacency_matrix(g)).back();
  const double n = static_cast<double>(g.order());
  const double avg_degree = 2.0 * static_cast<double>(g.edge_count()) / n;
  return 1.0 - avg_degree / tau;
}

// Closed form 1 - k / tau for 1-homogeneous graphs of degree k (after
// dropping isolated vertices). A non-1-homogeneous bipartite graph with an
// edge gets the value 2 with method = convention.
inline ParamResult spectral_vector_chromatic(const Graph& g) {
  if (!g.has_edges()) throw DomainError("spectral formula needs at least one edge");
  const Graph core = remove_isolated(g).graph;
  const auto report = one_homogeneous_check(core);
  ParamResult r;
  if (!report.is_one_homogeneous) {
    if (is_bipartite(core).bipartite) {
      r.value = 2.0;
      r.method = Method::convention;
      return r;
    }
    const auto& w = *report.failing_witness;
    throw DomainError(std::string("graph is not 1-homogeneous: ") +
                      (w.kind == HomogeneityWitness::Kind::closed_walks ? "closed" : "edge") +
                      " walk counts differ at k = " + std::to_string(w.k) + ", vertices (" +
                      std::to_string(w.u) + "," + std::to_string(w.v) + ")");
  }
  const double degree = static_cast<double>(core.degree(0));
  const double tau = eig_sym(adjacency_matrix(core)).least();
  r.value = 1.0 - degree / tau;
  r.method = Method::spectral;
  return r;
}

}  // namespace vecchrom
