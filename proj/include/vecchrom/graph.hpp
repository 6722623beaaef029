#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vecchrom/error.hpp"

namespace vecchrom {

using Edge = std::pair<std::size_t, std::size_t>;

// Finite simple undirected graph on vertices 0..n-1 with a dense symmetric
// adjacency matrix. Values are immutable once built.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n, std::string label = {})
      : n_(n), adj_(n * n, 0), label_(std::move(label)) {}

  // Throws RangeError on an endpoint >= n and ValidationError on a self-loop.
  // Duplicate edges collapse.
  Graph(std::size_t n, const std::vector<Edge>& edges, std::string label = {})
      : Graph(n, std::move(label)) {
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) {
        throw RangeError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") has an endpoint >= " + std::to_string(n));
      }
      if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
      set(u, v);
    }
  }

  // Builds from a row-major n*n matrix; nonzero entries are edges. The matrix
  // must be symmetric with zero diagonal.
  static Graph from_adjacency(std::size_t n, std::vector<std::uint8_t> adj,
                              std::string label = {}) {
    if (adj.size() != n * n) throw DimensionError("adjacency size does not match n*n");
    for (std::size_t i = 0; i < n; ++i) {
      if (adj[i * n + i]) throw ValidationError("self-loop at vertex " + std::to_string(i));
      for (std::size_t j = i + 1; j < n; ++j) {
        if (bool(adj[i * n + j]) != bool(adj[j * n + i])) {
          throw ValidationError("adjacency matrix is not symmetric");
        }
      }
    }
    for (auto& a : adj) a = a ? 1 : 0;
    Graph g;
    g.n_ = n;
    g.adj_ = std::move(adj);
    g.label_ = std::move(label);
    return g;
  }

  std::size_t order() const noexcept { return n_; }
  const std::string& label() const noexcept { return label_; }

  bool adjacent(std::size_t u, std::size_t v) const noexcept { return adj_[u * n_ + v] != 0; }

  const std::vector<std::uint8_t>& adjacency() const noexcept { return adj_; }

  std::size_t degree(std::size_t u) const noexcept {
    std::size_t d = 0;
    for (std::size_t v = 0; v < n_; ++v) d += adj_[u * n_ + v];
    return d;
  }

  std::size_t edge_count() const noexcept {
    std::size_t m = 0;
    for (auto a : adj_) m += a;
    return m / 2;
  }

  bool has_edges() const noexcept {
    return std::any_of(adj_.begin(), adj_.end(), [](auto a) { return a != 0; });
  }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  std::vector<std::size_t> neighbors(std::size_t u) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n_; ++v)
      if (adjacent(u, v)) out.push_back(v);
    return out;
  }

  Graph relabeled(std::string label) const {
    Graph g = *this;
    g.label_ = std::move(label);
    return g;
  }

  // Equality compares structure only, not labels.
  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void set(std::size_t u, std::size_t v) noexcept {
    adj_[u * n_ + v] = 1;
    adj_[v * n_ + u] = 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint8_t> adj_;
  std::string label_;
};

enum class Family { complete, cycle, path, empty, petersen, omega };

enum class ProductKind { categorical, cartesian, strong, disjunctive, lexicographic };

inline constexpr ProductKind kAllProductKinds[] = {
    ProductKind::categorical, ProductKind::cartesian, ProductKind::strong,
    ProductKind::disjunctive, ProductKind::lexicographic};

inline std::string_view to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::categorical: return "categorical";
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::strong: return "strong";
    case ProductKind::disjunctive: return "disjunctive";
    case ProductKind::lexicographic: return "lexicographic";
  }
  return "?";
}

inline std::optional<ProductKind> parse_product_kind(std::string_view s) {
  for (auto k : kAllProductKinds)
    if (to_string(k) == s) return k;
  return std::nullopt;
}

inline std::optional<Family> parse_family(std::string_view s) {
  if (s == "complete") return Family::complete;
  if (s == "cycle") return Family::cycle;
  if (s == "path") return Family::path;
  if (s == "empty") return Family::empty;
  if (s == "petersen") return Family::petersen;
  if (s == "omega") return Family::omega;
  return std::nullopt;
}

struct GenerateOptions {
  std::size_t omega_cap = 10;  // largest n accepted for the omega family
};

// Named graph families. Omega vertex i is the sign vector whose coordinate b
// is -1 exactly when bit b of i is set; two vertices are adjacent iff the
// vectors are orthogonal. `size` is ignored for petersen.
inline Graph generate(Family family, std::size_t size, const GenerateOptions& opts = {}) {
  std::vector<Edge> e;
  switch (family) {
    case Family::complete:
      for (std::size_t u = 0; u < size; ++u)
        for (std::size_t v = u + 1; v < size; ++v) e.emplace_back(u, v);
      return Graph(size, e, "K_" + std::to_string(size));
    case Family::cycle:
      if (size < 3) throw DomainError("a cycle needs at least 3 vertices");
      for (std::size_t u = 0; u < size; ++u) e.emplace_back(u, (u + 1) % size);
      return Graph(size, e, "C_" + std::to_string(size));
    case Family::path:
      for (std::size_t u = 0; u + 1 < size; ++u) e.emplace_back(u, u + 1);
      return Graph(size, e, "P_" + std::to_string(size));
    case Family::empty:
      return Graph(size, "empty_" + std::to_string(size));
    case Family::petersen:
      for (std::size_t i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
      }
      return Graph(10, e, "Petersen");
    case Family::omega: {
      if (size > opts.omega_cap) {
        throw CapacityError("omega(" + std::to_string(size) + ") exceeds the cap n <= " +
                            std::to_string(opts.omega_cap));
      }
      const std::size_t n = std::size_t{1} << size;
      if (size % 2 == 0) {
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t v = u + 1; v < n; ++v)
            if (2 * static_cast<std::size_t>(std::popcount(u ^ v)) == size) e.emplace_back(u, v);
      }
      return Graph(n, e, "Omega_" + std::to_string(size));
    }
  }
  throw DomainError("unknown family");
}

inline Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> adj(n * n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) adj[u * n + v] = (u != v && !g.adjacent(u, v));
  return Graph::from_adjacency(n, std::move(adj),
                               g.label().empty() ? std::string{} : "co(" + g.label() + ")");
}

// Product vertex (u, v) is index u * |V(h)| + v.
inline Graph product(ProductKind kind, const Graph& g, const Graph& h) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<std::uint8_t> adj(n * n, 0);
  for (std::size_t u1 = 0; u1 < ng; ++u1) {
    for (std::size_t v1 = 0; v1 < nh; ++v1) {
      for (std::size_t u2 = 0; u2 < ng; ++u2) {
        for (std::size_t v2 = 0; v2 < nh; ++v2) {
          const bool gu = g.adjacent(u1, u2), hv = h.adjacent(v1, v2);
          const bool eu = u1 == u2, ev = v1 == v2;
          bool a = false;
          switch (kind) {
            case ProductKind::categorical: a = gu && hv; break;
            case ProductKind::cartesian: a = (gu && ev) || (eu && hv); break;
            case ProductKind::strong: a = (gu && hv) || (gu && ev) || (eu && hv); break;
            case ProductKind::disjunctive: a = gu || hv; break;
            case ProductKind::lexicographic: a = gu || (eu && hv); break;
          }
          adj[(u1 * nh + v1) * n + (u2 * nh + v2)] = a;
        }
      }
    }
  }
  std::string label;
  if (!g.label().empty() && !h.label().empty()) {
    label = g.label() + " " + std::string(to_string(kind)) + " " + h.label();
  }
  return Graph::from_adjacency(n, std::move(adj), std::move(label));
}

// Edge union of two graphs on the same vertex set.
inline Graph graph_union(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) {
    throw DimensionError("union needs equal vertex counts, got " + std::to_string(g.order()) +
                         " and " + std::to_string(h.order()));
  }
  auto adj = g.adjacency();
  const auto& b = h.adjacency();
  for (std::size_t i = 0; i < adj.size(); ++i) adj[i] = adj[i] | b[i];
  return Graph::from_adjacency(g.order(), std::move(adj));
}

struct BipartiteResult {
  bool bipartite = false;
  std::optional<std::vector<int>> partition;  // side 0/1 per vertex
};

inline BipartiteResult is_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> side(n, -1);
  std::vector<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (std::size_t v = 0; v < n; ++v) {
        if (!g.adjacent(u, v)) continue;
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          return {false, std::nullopt};
        }
      }
    }
  }
  return {true, std::move(side)};
}

struct IsolatedRemoval {
  Graph graph;
  // old index -> new index, nullopt for removed vertices
  std::vector<std::optional<std::size_t>> index_map;
};

inline IsolatedRemoval remove_isolated(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::optional<std::size_t>> map(n);
  std::vector<std::size_t> kept;
  for (std::size_t u = 0; u < n; ++u) {
    if (g.degree(u) > 0) {
      map[u] = kept.size();
      kept.push_back(u);
    }
  }
  const std::size_t m = kept.size();
  std::vector<std::uint8_t> adj(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) adj[i * m + j] = g.adjacent(kept[i], kept[j]);
  return {Graph::from_adjacency(m, std::move(adj), g.label()), std::move(map)};
}

// Erdos-Renyi G(n, p). Uses only raw engine output so the sequence is
// identical across standard libraries.
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) e.emplace_back(u, v);
    }
  }
  return Graph(n, e);
}

}  // namespace vecchrom
