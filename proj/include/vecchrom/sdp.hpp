#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vecchrom/error.hpp"
#include "vecchrom/linalg.hpp"

namespace vecchrom {

enum class Sense { minimize, maximize };

// <a, X> = b
struct LinearConstraint {
  SymMatrix a;
  double b;
};

// lower <= X(i, j) <= upper on the symmetric pair {i, j}; lower == upper
// fixes the entry.
struct EntryBound {
  std::size_t i, j;
  double lower, upper;

  static EntryBound fixed(std::size_t i, std::size_t j, double v) { return {i, j, v, v}; }
  static EntryBound at_most(std::size_t i, std::size_t j, double v) {
    return {i, j, -std::numeric_limits<double>::infinity(), v};
  }
  static EntryBound at_least(std::size_t i, std::size_t j, double v) {
    return {i, j, v, std::numeric_limits<double>::infinity()};
  }
};

// optimize <C, X> + offset  s.t.  equalities, entry bounds, X PSD.
//
// Entries touched by an equality constraint may not also carry a bound.
struct SdpProblem {
  std::size_t order = 0;
  Sense sense = Sense::minimize;
  SymMatrix objective;
  double offset = 0.0;
  std::vector<LinearConstraint> equalities;
  std::vector<EntryBound> bounds;

  void validate() const {
    if (objective.order() != order) throw DimensionError("objective order mismatch");
    std::vector<std::uint8_t> used(order * order, 0);
    for (const auto& c : equalities) {
      if (c.a.order() != order) throw DimensionError("constraint order mismatch");
      for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = i; j < order; ++j)
          if (c.a(i, j) != 0.0) used[i * order + j] = 1;
    }
    for (const auto& b : bounds) {
      if (b.i >= order || b.j >= order) throw RangeError("entry bound outside the matrix");
      if (!(b.lower <= b.upper)) throw ValidationError("entry bound with lower > upper");
      const auto [i, j] = std::minmax(b.i, b.j);
      auto& u = used[i * order + j];
      if (u == 1) throw ValidationError("entry bound overlaps an equality constraint");
      if (u == 2) throw ValidationError("duplicate entry bound");
      u = 2;
    }
  }
};

struct SolverConfig {
  double tol = 1e-7;
  double gap_tol = 1e-5;
  std::size_t max_iter = 50000;
  double over_relaxation = 1.6;
  double penalty = 1.0;
  std::size_t check_every = 10;

  void validate() const {
    if (!(tol > 0) || !(gap_tol > 0) || max_iter == 0 || !(penalty > 0) || check_every == 0) {
      throw DomainError("solver settings must be positive");
    }
    if (!(over_relaxation > 0 && over_relaxation < 2)) {
      throw DomainError("over_relaxation must lie in (0, 2)");
    }
  }
};

enum class SolveStatus { optimal, max_iter, infeasible_suspected };

inline std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::max_iter: return "max_iter";
    case SolveStatus::infeasible_suspected: return "infeasible_suspected";
  }
  return "?";
}

struct Residuals {
  double affine = 0.0;     // equality and fixed-entry violation
  double cone = 0.0;       // max(0, -lambda_min)
  double entrywise = 0.0;  // inequality-bound violation
};

struct SdpSolution {
  SymMatrix x;
  double objective = 0.0;
  double dual_objective = 0.0;
  double gap = 0.0;
  Residuals residuals;
  double dual_cone_residual = 0.0;  // PSD violation of the reconstructed dual slack
  double splitting_residual = 0.0;  // max |X_psd - X_affine| at exit
  std::size_t iterations = 0;
  SolveStatus status = SolveStatus::max_iter;
};

// Constraint scan written independently of the solver's projections.
inline Residuals check_feasibility(const SdpProblem& p, const SymMatrix& x) {
  Residuals r;
  for (const auto& c : p.equalities) r.affine = std::max(r.affine, std::abs(inner(c.a, x) - c.b));
  for (const auto& b : p.bounds) {
    const double v = x(b.i, b.j);
    if (b.lower == b.upper) {
      r.affine = std::max(r.affine, std::abs(v - b.lower));
    } else {
      r.entrywise = std::max({r.entrywise, b.lower - v, v - b.upper});
    }
  }
  if (x.order() > 0) r.cone = std::max(0.0, -eigenvalues(x).back());
  return r;
}

namespace detail {

// Upper-triangle bookkeeping and the closed-form projection onto the affine
// set intersected with the entry boxes.
class ConstraintSet {
 public:
  explicit ConstraintSet(const SdpProblem& p) : n_(p.order) {
    const double inf = std::numeric_limits<double>::infinity();
    kind_.assign(n_ * n_, Kind::free);
    lower_.assign(n_ * n_, -inf);
    upper_.assign(n_ * n_, inf);
    for (const auto& b : p.bounds) {
      const auto [i, j] = std::minmax(b.i, b.j);
      const std::size_t e = i * n_ + j;
      kind_[e] = b.lower == b.upper ? Kind::fixed : Kind::box;
      lower_[e] = b.lower;
      upper_[e] = b.upper;
    }

    // Entries in the support of any equality constraint, with Frobenius
    // weights (off-diagonal pairs count twice).
    std::map<std::size_t, std::size_t> slot;
    for (const auto& c : p.equalities)
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j)
          if (c.a(i, j) != 0.0 && !slot.count(i * n_ + j)) {
            const std::size_t s = general_.size();
            slot[i * n_ + j] = s;
            general_.push_back(i * n_ + j);
            weight_.push_back(i == j ? 1.0 : 2.0);
            kind_[i * n_ + j] = Kind::general;
          }
    rhs_.reserve(p.equalities.size());
    for (const auto& c : p.equalities) {
      std::vector<std::pair<std::size_t, double>> row;
      for (std::size_t s = 0; s < general_.size(); ++s) {
        const std::size_t e = general_[s];
        const double coef = c.a(e / n_, e % n_);
        if (coef != 0.0) row.emplace_back(s, coef * weight_[s]);
      }
      rows_.push_back(std::move(row));
      rhs_.push_back(c.b);
    }
    const std::size_t m = rows_.size();
    if (m > 0) {
      // K = G W^-1 G^T for the weighted projection, H = G G^T for the dual.
      Matrix k(m, m), h(m, m);
      std::vector<double> dense(general_.size());
      for (std::size_t r = 0; r < m; ++r) {
        std::fill(dense.begin(), dense.end(), 0.0);
        for (auto [s, g] : rows_[r]) dense[s] = g;
        for (std::size_t q = 0; q <= r; ++q) {
          double kv = 0.0, hv = 0.0;
          for (auto [s, g] : rows_[q]) {
            kv += dense[s] * g / weight_[s];
            hv += dense[s] * g;
          }
          k(r, q) = k(q, r) = kv;
          h(r, q) = h(q, r) = hv;
        }
      }
      try {
        k_factor_ = cholesky(k);
        h_factor_ = cholesky(h);
      } catch (const DomainError&) {
        throw ValidationError("equality constraints are linearly dependent");
      }
      find_identity_direction();
    }
  }

  // In-place projection of a full symmetric matrix.
  void project(Matrix& y) const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) {
        const std::size_t e = i * n_ + j;
        switch (kind_[e]) {
          case Kind::fixed: y(i, j) = lower_[e]; break;
          case Kind::box: y(i, j) = std::clamp(y(i, j), lower_[e], upper_[e]); break;
          default: break;
        }
        y(j, i) = y(i, j);
      }
    }
    if (rows_.empty()) return;
    Vector mu(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      double g_a = 0.0;
      for (auto [s, g] : rows_[r]) g_a += g * at(y, general_[s]);
      mu[r] = rhs_[r] - g_a;
    }
    cholesky_solve(k_factor_, mu);
    Vector delta(general_.size(), 0.0);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (auto [s, g] : rows_[r]) delta[s] += g * mu[r];
    for (std::size_t s = 0; s < general_.size(); ++s) {
      const std::size_t e = general_[s];
      const double v = at(y, e) + delta[s] / weight_[s];
      y(e / n_, e % n_) = v;
      y(e % n_, e / n_) = v;
    }
  }

  // Projects a multiplier matrix onto the set where the support function of
  // the constraint set is finite, and returns that support function value.
  double support(Matrix& y) const {
    double value = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) {
        const std::size_t e = i * n_ + j;
        const double w = i == j ? 1.0 : 2.0;
        double v = y(i, j);
        switch (kind_[e]) {
          case Kind::free: v = 0.0; break;
          case Kind::fixed: value += w * v * lower_[e]; break;
          case Kind::box:
            if (v > 0.0) {
              if (std::isfinite(upper_[e])) value += w * v * upper_[e];
              else v = 0.0;
            } else if (v < 0.0) {
              if (std::isfinite(lower_[e])) value += w * v * lower_[e];
              else v = 0.0;
            }
            break;
          case Kind::general: break;
        }
        y(i, j) = y(j, i) = v;
      }
    }
    if (!rows_.empty()) {
      // Least-squares fit of the weighted multiplier onto range(G^T).
      Vector mu(rows_.size(), 0.0);
      for (std::size_t r = 0; r < rows_.size(); ++r)
        for (auto [s, g] : rows_[r]) mu[r] += g * weight_[s] * at(y, general_[s]);
      cholesky_solve(h_factor_, mu);
      Vector q(general_.size(), 0.0);
      for (std::size_t r = 0; r < rows_.size(); ++r)
        for (auto [s, g] : rows_[r]) q[s] += g * mu[r];
      for (std::size_t s = 0; s < general_.size(); ++s) {
        const std::size_t e = general_[s];
        const double v = q[s] / weight_[s];
        y(e / n_, e % n_) = v;
        y(e % n_, e / n_) = v;
      }
      for (std::size_t r = 0; r < rows_.size(); ++r) value += mu[r] * rhs_[r];
    }
    return value;
  }

  // When the identity lies in the span of the equality constraints, shifting
  // the multiplier by t*I changes the support value by t * identity_rhs().
  bool has_identity_direction() const noexcept { return identity_direction_; }
  double identity_rhs() const noexcept { return identity_rhs_; }

 private:
  enum class Kind : std::uint8_t { free, fixed, box, general };

  double at(const Matrix& y, std::size_t e) const { return y(e / n_, e % n_); }

  void find_identity_direction() {
    for (std::size_t i = 0; i < n_; ++i)
      if (kind_[i * n_ + i] != Kind::general) return;
    // Solve G G^T c = G w(I) and check the fit is exact.
    Vector target(general_.size(), 0.0);
    for (std::size_t s = 0; s < general_.size(); ++s)
      if (general_[s] / n_ == general_[s] % n_) target[s] = 1.0;
    Vector c(rows_.size(), 0.0);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (auto [s, g] : rows_[r]) c[r] += g * target[s];
    cholesky_solve(h_factor_, c);
    Vector fit(general_.size(), 0.0);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (auto [s, g] : rows_[r]) fit[s] += g * c[r];
    for (std::size_t s = 0; s < general_.size(); ++s)
      if (std::abs(fit[s] - target[s]) > 1e-10) return;
    identity_direction_ = true;
    identity_rhs_ = 0.0;
    for (std::size_t r = 0; r < rows_.size(); ++r) identity_rhs_ += c[r] * rhs_[r];
  }

  std::size_t n_;
  std::vector<Kind> kind_;
  Vector lower_, upper_;
  std::vector<std::size_t> general_;
  Vector weight_;
  std::vector<std::vector<std::pair<std::size_t, double>>> rows_;
  Vector rhs_;
  Matrix k_factor_, h_factor_;
  bool identity_direction_ = false;
  double identity_rhs_ = 0.0;
};

// PSD projection reusing the caller's buffers. Rebuilds from whichever side
// of the spectrum has fewer eigenpairs.
inline void project_psd_inplace(Matrix& a, Matrix& work, Vector& values, Matrix& vt) {
  const std::size_t n = a.rows();
  work = a;
  jacobi_rows(work, values, vt, {});
  std::size_t positive = 0;
  for (double v : values) positive += v > 0.0;
  const bool from_positive = positive <= n - positive;
  if (from_positive) std::fill(a.data().begin(), a.data().end(), 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double lam = values[k];
    if (from_positive ? lam <= 0.0 : lam >= 0.0) continue;
    const double sign = from_positive ? 1.0 : -1.0;
    auto v = vt.row(k);
    for (std::size_t i = 0; i < n; ++i) {
      const double w = sign * lam * v[i];
      if (w == 0.0) continue;
      auto ai = a.row(i);
      for (std::size_t j = 0; j < n; ++j) ai[j] += w * v[j];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (a(i, j) + a(j, i));
}

inline double max_abs_diff_raw(const Matrix& a, const Matrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

}  // namespace detail

// Operator-splitting (ADMM) solver: alternate the PSD-cone projection with
// the closed-form projection onto the affine/box constraint set, with an
// over-relaxed scaled dual update and residual-balancing penalty updates.
// The dual objective is reconstructed from the splitting multiplier.
inline SdpSolution solve(const SdpProblem& p, const SolverConfig& cfg = {}) {
  p.validate();
  cfg.validate();
  const std::size_t n = p.order;
  const double sign = p.sense == Sense::minimize ? 1.0 : -1.0;
  detail::ConstraintSet set(p);

  Matrix c = p.objective.matrix();
  c *= sign;

  Matrix z(n, n), u(n, n), x(n, n), z_old(n, n), work, vt, y(n, n);
  Vector values;
  set.project(z);

  double rho = cfg.penalty;
  const double alpha = cfg.over_relaxation;
  SdpSolution sol;
  double best_primal = std::numeric_limits<double>::infinity();
  std::size_t best_at = 0;

  auto finish = [&](SolveStatus status, std::size_t iters, double split) {
    sol.x = SymMatrix(z);
    const double primal = dot(c.data(), z.data());
    // Dual slack C + Y must be PSD; repair along the identity when possible.
    Matrix mult = u;
    mult *= rho;
    double support = set.support(mult);
    Matrix slack = c + mult;
    double lo = eigenvalues(SymMatrix(slack)).back();
    if (lo < 0.0 && set.has_identity_direction()) {
      support += -lo * set.identity_rhs();
      lo = 0.0;
    }
    sol.dual_cone_residual = std::max(0.0, -lo);
    const double dual = -support;
    sol.objective = sign * primal + p.offset;
    sol.dual_objective = sign * dual + p.offset;
    sol.gap = std::abs(primal - dual);
    sol.residuals = check_feasibility(p, sol.x);
    sol.splitting_residual = split;
    sol.iterations = iters;
    sol.status = status;
  };

  for (std::size_t it = 1; it <= cfg.max_iter; ++it) {
    // X = Pi_psd(Z - U - C / rho)
    for (std::size_t k = 0; k < n * n; ++k) x.data()[k] = z.data()[k] - u.data()[k] - c.data()[k] / rho;
    detail::project_psd_inplace(x, work, values, vt);

    z_old = z;
    for (std::size_t k = 0; k < n * n; ++k) {
      const double xh = alpha * x.data()[k] + (1.0 - alpha) * z_old.data()[k];
      y.data()[k] = xh + u.data()[k];
    }
    set.project(y);
    z = y;
    for (std::size_t k = 0; k < n * n; ++k) {
      const double xh = alpha * x.data()[k] + (1.0 - alpha) * z_old.data()[k];
      u.data()[k] += xh - z.data()[k];
    }

    if (it % cfg.check_every != 0 && it != cfg.max_iter) continue;

    const double r_primal = detail::max_abs_diff_raw(x, z);
    const double r_dual = rho * detail::max_abs_diff_raw(z, z_old);

    if (r_primal <= cfg.tol && r_dual <= cfg.tol) {
      finish(SolveStatus::optimal, it, r_primal);
      if (sol.gap <= cfg.gap_tol && sol.dual_cone_residual <= cfg.tol &&
          sol.residuals.cone <= 10 * cfg.tol) {
        return sol;
      }
    }

    // Stagnating splitting residual far above tolerance: the affine set and
    // the cone (numerically) do not meet.
    if (r_primal < 0.99 * best_primal) {
      best_primal = r_primal;
      best_at = it;
    } else if (it > 5000 && it - best_at > 4000 && r_primal > 1e3 * cfg.tol) {
      finish(SolveStatus::infeasible_suspected, it, r_primal);
      return sol;
    }

    if (it % (5 * cfg.check_every) == 0) {
      if (r_primal > 10.0 * r_dual) {
        rho *= 2.0;
        u *= 0.5;
      } else if (r_dual > 10.0 * r_primal) {
        rho *= 0.5;
        u *= 2.0;
      }
    }
    if (it == cfg.max_iter) {
      finish(SolveStatus::max_iter, it, r_primal);
      return sol;
    }
  }
  return sol;
}

}  // namespace vecchrom
