#pragma once

// Test-only helpers: brute-force oracles and random instances.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "vecchrom/vecchrom.hpp"

namespace support {

using namespace vecchrom;

// Tries every vertex permutation; fine up to ~9 vertices.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::size_t> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges()) {
      if (!b.adjacent(p[u], p[v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e, "K_1," + std::to_string(leaves));
}

// Gram-Schmidt on a Gaussian matrix.
inline ComplexMatrix random_unitary(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> z;
  ComplexMatrix u(d, d);
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<Complex> col(d);
    for (auto& x : col) x = Complex(z(rng), z(rng));
    for (std::size_t p = 0; p < c; ++p) {
      Complex ip = 0;
      for (std::size_t i = 0; i < d; ++i) ip += std::conj(u(i, p)) * col[i];
      for (std::size_t i = 0; i < d; ++i) col[i] -= ip * u(i, p);
    }
    double norm = 0;
    for (auto& x : col) norm += std::norm(x);
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < d; ++i) u(i, c) = col[i] / norm;
  }
  return u;
}

inline Matrix random_orthogonal(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> z;
  Matrix q(d, d);
  for (std::size_t c = 0; c < d; ++c) {
    Vector col(d);
    for (auto& x : col) x = z(rng);
    for (std::size_t p = 0; p < c; ++p) {
      double ip = 0;
      for (std::size_t i = 0; i < d; ++i) ip += q(i, p) * col[i];
      for (std::size_t i = 0; i < d; ++i) col[i] -= ip * q(i, p);
    }
    const double norm = std::sqrt(dot(col, col));
    for (std::size_t i = 0; i < d; ++i) q(i, c) = col[i] / norm;
  }
  return q;
}

// E -> U E U^dagger on every part of every tuple.
inline QuantumHomomorphism conjugate(const QuantumHomomorphism& q, const ComplexMatrix& u) {
  QuantumHomomorphism out = q;
  const auto ud = adjoint(u);
  for (auto& t : out.assignment)
    for (auto& e : t.parts) e = matmul(matmul(u, e), ud);
  return out;
}

// Each part tensored with the identity of order k.
inline QuantumHomomorphism inflate(const QuantumHomomorphism& q, std::size_t k) {
  QuantumHomomorphism out = q;
  out.d = q.d * k;
  const auto id = ComplexMatrix::identity(k);
  for (auto& t : out.assignment)
    for (auto& e : t.parts) e = kron(e, id);
  return out;
}

inline Matrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
  return m;
}

}  // namespace support
