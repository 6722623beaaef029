#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "vecchrom/error.hpp"

namespace vecchrom {

// Dense row-major matrix over double or std::complex<double>.
template <typename T>
class DenseMatrix {
 public:
  using value_type = T;

  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DimensionError("matrix data size mismatch");
  }
  DenseMatrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }

  std::vector<T>& data() noexcept { return data_; }
  const std::vector<T>& data() const noexcept { return data_; }

  DenseMatrix& operator+=(const DenseMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  DenseMatrix& operator-=(const DenseMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  DenseMatrix& operator*=(T s) noexcept {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(DenseMatrix a, T s) { return a *= s; }
  friend DenseMatrix operator*(T s, DenseMatrix a) { return a *= s; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  void check_same(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shapes differ");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using Matrix = DenseMatrix<double>;
using Complex = std::complex<double>;
using ComplexMatrix = DenseMatrix<Complex>;
using Vector = std::vector<double>;

namespace detail {
template <typename T>
double magnitude(const T& x) {
  return std::abs(x);
}
template <typename T>
T conjugate(const T& x) {
  if constexpr (std::is_same_v<T, Complex>) {
    return std::conj(x);
  } else {
    return x;
  }
}
}  // namespace detail

template <typename T>
DenseMatrix<T> matmul(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionError("matmul: inner dimensions differ");
  DenseMatrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ci = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      if (aik == T{}) continue;
      auto bk = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) ci[j] += aik * bk[j];
    }
  }
  return c;
}

template <typename T>
DenseMatrix<T> transpose(const DenseMatrix<T>& a) {
  DenseMatrix<T> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

// Conjugate transpose.
template <typename T>
DenseMatrix<T> adjoint(const DenseMatrix<T>& a) {
  DenseMatrix<T> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = detail::conjugate(a(i, j));
  return t;
}

// Kronecker product with the standard block layout: block (i, j) is a(i, j) * b.
template <typename T>
DenseMatrix<T> kron(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  DenseMatrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T aij = a(i, j);
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return k;
}

inline Vector kron(std::span<const double> a, std::span<const double> b) {
  Vector k;
  k.reserve(a.size() * b.size());
  for (double x : a)
    for (double y : b) k.push_back(x * y);
  return k;
}

// Entrywise (Schur) product.
template <typename T>
DenseMatrix<T> schur(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("schur: shapes differ");
  DenseMatrix<T> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) c.data()[i] = a.data()[i] * b.data()[i];
  return c;
}

// Sum of all entries.
template <typename T>
T msum(const DenseMatrix<T>& a) {
  return std::accumulate(a.data().begin(), a.data().end(), T{});
}

template <typename T>
T trace(const DenseMatrix<T>& a) {
  T t{};
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

template <typename T>
double max_abs(const DenseMatrix<T>& a) {
  double m = 0.0;
  for (const auto& x : a.data()) m = std::max(m, detail::magnitude(x));
  return m;
}

template <typename T>
double max_abs_diff(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("shapes differ");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, detail::magnitude(a.data()[i] - b.data()[i]));
  return m;
}

inline double frobenius(const Matrix& a) {
  double s = 0.0;
  for (double x : a.data()) s += x * x;
  return std::sqrt(s);
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Real symmetric matrix. Construction rejects matrices whose asymmetry
// exceeds 1e-12 (relative to 1 + max|entry|) and symmetrizes the rest.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : m_(n, n) {}
  explicit SymMatrix(Matrix m) : m_(std::move(m)) {
    if (!m_.square()) throw DimensionError("symmetric matrix must be square");
    const double scale = 1.0 + max_abs(m_);
    const std::size_t n = m_.rows();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double a = m_(i, j), b = m_(j, i);
        if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("non-finite matrix entry");
        if (std::abs(a - b) > 1e-12 * scale) {
          throw DomainError("matrix is not symmetric at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
        }
        m_(i, j) = m_(j, i) = 0.5 * (a + b);
      }
      if (!std::isfinite(m_(i, i))) throw DomainError("non-finite matrix entry");
    }
  }
  SymMatrix(std::initializer_list<std::initializer_list<double>> rows) : SymMatrix(Matrix(rows)) {}

  static SymMatrix identity(std::size_t n) { return SymMatrix(Matrix::identity(n)); }
  static SymMatrix ones(std::size_t n) { return SymMatrix(Matrix(n, n, 1.0)); }

  std::size_t order() const noexcept { return m_.rows(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }

  // Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double v) noexcept {
    m_(i, j) = v;
    m_(j, i) = v;
  }

  const Matrix& matrix() const noexcept { return m_; }

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  Matrix m_;
};

inline double inner(const SymMatrix& a, const SymMatrix& b) {
  return dot(a.matrix().data(), b.matrix().data());
}

struct EigenProjector {
  double eigenvalue;
  std::size_t multiplicity;
  SymMatrix projector;
};

// Eigenvalues sorted descending; column i of `eigenvectors` belongs to
// eigenvalue i.
struct Spectrum {
  Vector eigenvalues;
  Matrix eigenvectors;
  std::vector<EigenProjector> eigenprojectors;

  double greatest() const { return eigenvalues.front(); }
  double least() const { return eigenvalues.back(); }
};

struct JacobiOptions {
  std::size_t max_sweeps = 100;
  double offdiag_tol = 1e-12;  // relative to the Frobenius norm
};

namespace detail {

// Cyclic Jacobi on a full symmetric row-major copy. Returns eigenvalues in
// `values` (unsorted) and eigenvectors as the ROWS of `vt`.
inline void jacobi_rows(Matrix& a, Vector& values, Matrix& vt, const JacobiOptions& opts) {
  const std::size_t n = a.rows();
  vt = Matrix::identity(n);
  values.assign(n, 0.0);
  double norm2 = 0.0;
  for (double x : a.data()) norm2 += x * x;
  const double target = opts.offdiag_tol * std::sqrt(norm2);

  auto offdiag = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
  };

  double off = offdiag();
  std::size_t sweep = 0;
  while (off > target) {
    if (sweep++ == opts.max_sweeps) {
      throw NumericError("Jacobi eigensolver did not converge in " +
                             std::to_string(opts.max_sweeps) + " sweeps",
                         off);
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p), aqq = a(q, q);
        // Entry below the rounding level of both diagonal entries: drop it.
        const double g = 100.0 * std::abs(apq);
        if (sweep > 4 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        auto rp = a.row(p);
        auto rq = a.row(q);
        for (std::size_t k = 0; k < n; ++k) {
          const double x = rp[k], y = rq[k];
          rp[k] = c * x - s * y;
          rq[k] = s * x + c * y;
        }
        for (std::size_t k = 0; k < n; ++k) {
          a(k, p) = rp[k];
          a(k, q) = rq[k];
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;

        auto vp = vt.row(p);
        auto vq = vt.row(q);
        for (std::size_t k = 0; k < n; ++k) {
          const double x = vp[k], y = vq[k];
          vp[k] = c * x - s * y;
          vq[k] = s * x + c * y;
        }
      }
    }
    off = offdiag();
  }
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i);
}

}  // namespace detail

// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
// Eigenvalues closer than tol * (1 + spectral range) are grouped into one
// eigenprojector.
inline Spectrum eig_sym(const SymMatrix& m, double tol = 1e-6, const JacobiOptions& opts = {}) {
  const std::size_t n = m.order();
  Spectrum s;
  if (n == 0) return s;
  Matrix a = m.matrix();
  Vector values;
  Matrix vt;
  detail::jacobi_rows(a, values, vt, opts);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return values[i] > values[j]; });
  s.eigenvalues.resize(n);
  s.eigenvectors = Matrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    s.eigenvalues[c] = values[order[c]];
    auto v = vt.row(order[c]);
    for (std::size_t r = 0; r < n; ++r) s.eigenvectors(r, c) = v[r];
  }

  const double threshold = tol * (1.0 + (s.eigenvalues.front() - s.eigenvalues.back()));
  for (std::size_t start = 0; start < n;) {
    std::size_t end = start + 1;
    while (end < n && s.eigenvalues[end - 1] - s.eigenvalues[end] <= threshold) ++end;
    Matrix p(n, n);
    double mean = 0.0;
    for (std::size_t c = start; c < end; ++c) {
      mean += s.eigenvalues[c];
      for (std::size_t i = 0; i < n; ++i) {
        const double vi = s.eigenvectors(i, c);
        if (vi == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) p(i, j) += vi * s.eigenvectors(j, c);
      }
    }
    mean /= static_cast<double>(end - start);
    s.eigenprojectors.push_back({mean, end - start, SymMatrix(std::move(p))});
    start = end;
  }
  return s;
}

// Eigenvalues only, descending.
inline Vector eigenvalues(const SymMatrix& m, const JacobiOptions& opts = {}) {
  if (m.order() == 0) return {};
  Matrix a = m.matrix();
  Vector values;
  Matrix vt;
  detail::jacobi_rows(a, values, vt, opts);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

// Nearest positive semidefinite matrix in Frobenius norm.
inline SymMatrix project_psd(const SymMatrix& m) {
  const std::size_t n = m.order();
  Matrix a = m.matrix();
  Vector values;
  Matrix vt;
  detail::jacobi_rows(a, values, vt, {});
  Matrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (values[k] <= 0.0) continue;
    auto v = vt.row(k);
    for (std::size_t i = 0; i < n; ++i) {
      const double w = values[k] * v[i];
      if (w == 0.0) continue;
      auto oi = out.row(i);
      for (std::size_t j = 0; j < n; ++j) oi[j] += w * v[j];
    }
  }
  return SymMatrix(std::move(out));
}

// Vectors whose Gram matrix is m. Eigenvalues in [-tol, tol] are treated as
// zero; the vector dimension is the number of eigenvalues above tol (at least
// one, so that a zero matrix yields zero vectors of dimension 1). A positive
// `rank_tol` additionally drops eigenvalues below rank_tol * lambda_max.
inline std::vector<Vector> gram_factor(const SymMatrix& m, double tol = 1e-9, double rank_tol = 0.0) {
  const std::size_t n = m.order();
  if (n == 0) return {};
  Matrix a = m.matrix();
  Vector values;
  Matrix vt;
  detail::jacobi_rows(a, values, vt, {});
  const double lo = *std::min_element(values.begin(), values.end());
  if (lo < -tol) {
    throw NotPsdError("matrix is not positive semidefinite: eigenvalue " + std::to_string(lo), lo);
  }
  const double hi = *std::max_element(values.begin(), values.end());
  const double cut = std::max(tol, rank_tol * hi);
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < n; ++k)
    if (values[k] > cut) keep.push_back(k);
  std::sort(keep.begin(), keep.end(), [&](auto i, auto j) { return values[i] > values[j]; });
  const std::size_t d = std::max<std::size_t>(keep.size(), 1);
  std::vector<Vector> out(n, Vector(d, 0.0));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    const double root = std::sqrt(values[keep[c]]);
    auto v = vt.row(keep[c]);
    for (std::size_t i = 0; i < n; ++i) out[i][c] = root * v[i];
  }
  return out;
}

// Cholesky factor L (lower triangular, row-major) of a symmetric positive
// definite matrix. Throws DomainError when a pivot is not positive.
inline Matrix cholesky(const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 1e-14 * (1.0 + std::abs(a(j, j))))) {
      throw DomainError("matrix is not positive definite at pivot " + std::to_string(j));
    }
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

// Solves (L L^T) x = b in place.
inline void cholesky_solve(const Matrix& l, Vector& b) {
  const std::size_t n = l.rows();
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * b[k];
    b[i] = s / l(i, i);
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= l(k, i) * b[k];
    b[i] = s / l(i, i);
  }
}

inline SymMatrix gram_matrix(const std::vector<Vector>& vectors) {
  const std::size_t n = vectors.size();
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = dot(vectors[i], vectors[j]);
  return SymMatrix(std::move(g));
}

}  // namespace vecchrom
