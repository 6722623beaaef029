#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vecchrom/graph.hpp"

namespace vecchrom {

using BigInt = boost::multiprecision::cpp_int;

// Walk-count constants for one power k: (A^k)_uu = b for every vertex u and
// (A^k)_uv = c for every edge uv.
struct WalkConstants {
  std::size_t k;
  BigInt b;
  BigInt c;
};

struct HomogeneityWitness {
  enum class Kind { closed_walks, edge_walks };
  std::size_t k;
  Kind kind;
  // closed_walks: (u, u) disagrees with vertex 0; edge_walks: edge (u, v)
  // disagrees with the first edge.
  std::size_t u, v;
};

struct OneHomReport {
  bool is_one_homogeneous = false;
  // Constants for k = 0..m, m the degree of the minimal polynomial of A.
  std::vector<WalkConstants> constants;
  std::optional<HomogeneityWitness> failing_witness;
  std::size_t minimal_polynomial_degree = 0;  // 0 when the check stopped early
};

namespace detail {

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }

inline std::int64_t int_abs(std::int64_t a) {
  if (a == INT64_MIN) throw Overflow{};
  return a < 0 ? -a : a;
}
inline BigInt int_abs(const BigInt& a) { return abs(a); }

template <typename Int>
Int int_gcd(Int a, Int b) {
  a = int_abs(a);
  b = int_abs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Incremental exact rank of a set of integer vectors (row echelon form with
// fraction-free elimination and content removal).
template <typename Int>
class IntegerSpan {
 public:
  // Returns true when v was independent of the current span (and adds it).
  bool add(std::vector<Int> v) {
    for (const auto& [pivot, b] : basis_) {
      if (v[pivot] == 0) continue;
      const Int bp = b[pivot], vp = v[pivot];
      for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = checked_add(checked_mul(bp, v[i]), checked_mul(Int(-vp), b[i]));
      }
      normalize(v);
    }
    std::size_t lead = 0;
    while (lead < v.size() && v[lead] == 0) ++lead;
    if (lead == v.size()) return false;
    auto it = basis_.begin();
    while (it != basis_.end() && it->first < lead) ++it;
    basis_.insert(it, {lead, std::move(v)});
    return true;
  }

 private:
  static void normalize(std::vector<Int>& v) {
    Int g = 0;
    for (const auto& x : v) {
      if (x != 0) g = int_gcd(g, x);
      if (g == 1) return;
    }
    if (g > 1)
      for (auto& x : v) x /= g;
  }

  std::vector<std::pair<std::size_t, std::vector<Int>>> basis_;
};

template <typename Int>
OneHomReport one_homogeneous_check_impl(const Graph& g) {
  const std::size_t n = g.order();
  OneHomReport report;
  const auto edges = g.edges();

  std::vector<Int> power(n * n, Int(0));
  for (std::size_t i = 0; i < n; ++i) power[i * n + i] = 1;
  IntegerSpan<Int> span;

  for (std::size_t k = 0;; ++k) {
    if (k > 0) {
      std::vector<Int> next(n * n, Int(0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
          if (!g.adjacent(l, i)) continue;
          // (P A)_{r i} = sum_l P_{r l} A_{l i}
          for (std::size_t r = 0; r < n; ++r) {
            if (power[r * n + l] != 0) next[r * n + i] = checked_add(next[r * n + i], power[r * n + l]);
          }
        }
      power = std::move(next);
    }

    WalkConstants wc{k, 0, 0};
    if (n > 0) {
      const Int b0 = power[0];
      for (std::size_t u = 1; u < n; ++u) {
        if (power[u * n + u] != b0) {
          report.failing_witness =
              HomogeneityWitness{k, HomogeneityWitness::Kind::closed_walks, u, u};
          return report;
        }
      }
      wc.b = BigInt(b0);
    }
    if (!edges.empty()) {
      const Int c0 = power[edges[0].first * n + edges[0].second];
      for (auto [u, v] : edges) {
        if (power[u * n + v] != c0) {
          report.failing_witness =
              HomogeneityWitness{k, HomogeneityWitness::Kind::edge_walks, u, v};
          return report;
        }
      }
      wc.c = BigInt(c0);
    }
    report.constants.push_back(std::move(wc));

    // Upper triangle suffices: every power of A is symmetric.
    std::vector<Int> flat;
    flat.reserve(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) flat.push_back(power[i * n + j]);
    if (!span.add(std::move(flat))) {
      report.minimal_polynomial_degree = k;
      report.is_one_homogeneous = true;
      return report;
    }
  }
}

}  // namespace detail

// Exact integer test of: A^k o I = b_k I and A^k o A = c_k A for k = 0..m,
// where m is the degree of the minimal polynomial of A. Higher powers are
// combinations of these, so passing for k <= m implies every k.
// Uses 64-bit arithmetic and restarts with arbitrary precision on overflow.
inline OneHomReport one_homogeneous_check(const Graph& g) {
  try {
    return detail::one_homogeneous_check_impl<std::int64_t>(g);
  } catch (const detail::Overflow&) {
    return detail::one_homogeneous_check_impl<BigInt>(g);
  }
}

}  // namespace vecchrom
