#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "vecchrom/error.hpp"
#include "vecchrom/graph.hpp"

namespace vecchrom {

struct ChromaticResult {
  // Exact chromatic number, or limit + 1 when above_limit is set.
  std::size_t value = 0;
  bool above_limit = false;
  // A proper coloring with `value` colors (empty when above_limit).
  std::vector<std::size_t> coloring;
};

struct ChromaticOptions {
  std::size_t vertex_cap = 30;
};

namespace detail {

class ColoringSearch {
 public:
  explicit ColoringSearch(const Graph& g) : g_(g), n_(g.order()) {
    for (std::size_t u = 0; u < n_; ++u) nbrs_.push_back(g.neighbors(u));
  }

  // Greedy DSATUR coloring; returns the number of colors used.
  std::size_t dsatur_upper_bound() {
    reset(n_);
    std::size_t used = 0;
    for (std::size_t step = 0; step < n_; ++step) {
      const std::size_t v = pick();
      std::size_t c = 0;
      while (count_[v * n_ + c] > 0) ++c;
      assign(v, c);
      used = std::max(used, c + 1);
    }
    return used;
  }

  // Size of a greedily grown clique, maximized over start vertices.
  std::size_t clique_lower_bound() const {
    std::size_t best = n_ ? 1 : 0;
    for (std::size_t s = 0; s < n_; ++s) {
      std::vector<std::size_t> clique{s};
      auto cand = nbrs_[s];
      std::sort(cand.begin(), cand.end(),
                [&](auto a, auto b) { return nbrs_[a].size() > nbrs_[b].size(); });
      for (auto v : cand) {
        if (std::all_of(clique.begin(), clique.end(), [&](auto w) { return g_.adjacent(v, w); }))
          clique.push_back(v);
      }
      best = std::max(best, clique.size());
    }
    return best;
  }

  bool colorable(std::size_t k) {
    reset(k);
    return extend(0, 0, k);
  }

  // Colors from the last successful search.
  const std::vector<std::size_t>& colors() const noexcept { return color_; }

 private:
  void reset(std::size_t k) {
    color_.assign(n_, npos);
    count_.assign(n_ * std::max(k, n_), 0);  // colors never exceed n
    satur_.assign(n_, 0);
  }

  std::size_t pick() const {
    std::size_t best = npos;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color_[v] != npos) continue;
      if (best == npos || satur_[v] > satur_[best] ||
          (satur_[v] == satur_[best] && nbrs_[v].size() > nbrs_[best].size()))
        best = v;
    }
    return best;
  }

  void assign(std::size_t v, std::size_t c) {
    color_[v] = c;
    for (auto w : nbrs_[v])
      if (count_[w * n_ + c]++ == 0) ++satur_[w];
  }

  void unassign(std::size_t v) {
    const std::size_t c = color_[v];
    color_[v] = npos;
    for (auto w : nbrs_[v])
      if (--count_[w * n_ + c] == 0) --satur_[w];
  }

  bool extend(std::size_t colored, std::size_t used, std::size_t k) {
    if (colored == n_) return true;
    const std::size_t v = pick();
    if (satur_[v] >= k) return false;
    // New colors are interchangeable: only try the first unused one.
    const std::size_t top = std::min(k, used + 1);
    for (std::size_t c = 0; c < top; ++c) {
      if (count_[v * n_ + c] > 0) continue;
      assign(v, c);
      if (extend(colored + 1, std::max(used, c + 1), k)) return true;
      unassign(v);
    }
    return false;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  const Graph& g_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> nbrs_;
  std::vector<std::size_t> color_;
  std::vector<std::size_t> count_;  // count_[v * n + c]: neighbors of v colored c
  std::vector<std::size_t> satur_;
};

}  // namespace detail

// Exact chromatic number by DSATUR backtracking between a greedy-clique lower
// bound and a DSATUR upper bound. Colors beyond `limit` are not explored.
inline ChromaticResult chromatic_number(const Graph& g, std::size_t limit,
                                        const ChromaticOptions& opts = {}) {
  const std::size_t n = g.order();
  if (n > opts.vertex_cap) {
    throw CapacityError("chromatic number: " + std::to_string(n) + " vertices exceeds the cap of " +
                        std::to_string(opts.vertex_cap));
  }
  if (n == 0) return {0, false, {}};
  if (!g.has_edges()) {
    if (limit == 0) return {1, true, {}};
    return {1, false, std::vector<std::size_t>(n, 0)};
  }

  detail::ColoringSearch search(g);
  const std::size_t lower = search.clique_lower_bound();
  const std::size_t upper = search.dsatur_upper_bound();
  const auto greedy = search.colors();
  if (lower > limit) return {limit + 1, true, {}};
  for (std::size_t k = lower; k < upper && k <= limit; ++k)
    if (search.colorable(k)) return {k, false, search.colors()};
  if (upper <= limit) return {upper, false, greedy};
  return {limit + 1, true, {}};
}

}  // namespace vecchrom
