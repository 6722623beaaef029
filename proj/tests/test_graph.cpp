#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"

using namespace vecchrom;

namespace {

// Product edges straight from the definitions, enumerating vertex pairs.
std::set<Edge> definition_edges(ProductKind kind, const Graph& g, const Graph& h) {
  std::set<Edge> out;
  const std::size_t nh = h.order();
  for (std::size_t a = 0; a < g.order() * nh; ++a) {
    for (std::size_t b = a + 1; b < g.order() * nh; ++b) {
      const std::size_t u1 = a / nh, v1 = a % nh, u2 = b / nh, v2 = b % nh;
      const bool gu = g.adjacent(u1, u2), hv = h.adjacent(v1, v2);
      bool edge = false;
      if (kind == ProductKind::categorical) edge = gu && hv;
      if (kind == ProductKind::cartesian) edge = (u1 == u2 && hv) || (v1 == v2 && gu);
      if (kind == ProductKind::disjunctive) edge = gu || hv;
      if (kind == ProductKind::lexicographic) edge = gu || (u1 == u2 && hv);
      if (kind == ProductKind::strong) edge = (gu || u1 == u2) && (hv || v1 == v2);
      if (edge) out.insert({a, b});
    }
  }
  return out;
}

std::set<Edge> edge_set(const Graph& g) {
  const auto e = g.edges();
  return {e.begin(), e.end()};
}

}  // namespace

TEST(Graph, RejectsSelfLoopAndBadEndpoint) {
  EXPECT_THROW(Graph(3, std::vector<Edge>{{1, 1}}), ValidationError);
  EXPECT_THROW(Graph(3, std::vector<Edge>{{0, 3}}), RangeError);
}

TEST(Graph, DuplicateEdgesCollapse) {
  const Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(Graph, FromAdjacencyValidates) {
  EXPECT_THROW(Graph::from_adjacency(2, {0, 1, 0, 0}), ValidationError);
  EXPECT_THROW(Graph::from_adjacency(2, {1, 0, 0, 0}), ValidationError);
  EXPECT_THROW(Graph::from_adjacency(2, {0, 1, 1}), DimensionError);
}

TEST(Generate, CompleteAndDegenerate) {
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto k = generate(Family::complete, n);
    EXPECT_EQ(k.edge_count(), n * (n - (n > 0)) / 2);
  }
  const auto k1 = generate(Family::complete, 1);
  EXPECT_EQ(k1.order(), 1u);
  EXPECT_FALSE(k1.has_edges());
  EXPECT_THROW(generate(Family::cycle, 2), DomainError);
}

TEST(Generate, Petersen) {
  const auto p = generate(Family::petersen, 0);
  EXPECT_EQ(p.order(), 10u);
  EXPECT_EQ(p.edge_count(), 15u);
  for (std::size_t u = 0; u < 10; ++u) EXPECT_EQ(p.degree(u), 3u);
  // Girth 5: no triangles and no 4-cycles, so adjacent vertices share no
  // neighbor and non-adjacent ones share exactly one.
  for (std::size_t u = 0; u < 10; ++u) {
    for (std::size_t v = u + 1; v < 10; ++v) {
      std::size_t common = 0;
      for (std::size_t w = 0; w < 10; ++w) common += p.adjacent(u, w) && p.adjacent(v, w);
      EXPECT_EQ(common, p.adjacent(u, v) ? 0u : 1u);
    }
  }
}

TEST(Generate, OmegaOddIsEmpty) {
  for (std::size_t n : {1u, 3u, 5u}) {
    const auto g = generate(Family::omega, n);
    EXPECT_EQ(g.order(), std::size_t{1} << n);
    EXPECT_EQ(g.edge_count(), 0u);
  }
}

TEST(Generate, OmegaTwoIsFourCycle) {
  // Enumerate the four sign vectors and test orthogonality directly.
  const int vecs[4][2] = {{1, 1}, {-1, 1}, {1, -1}, {-1, -1}};
  std::vector<Edge> e;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b)
      if (vecs[a][0] * vecs[b][0] + vecs[a][1] * vecs[b][1] == 0) e.emplace_back(a, b);
  const auto g = generate(Family::omega, 2);
  EXPECT_EQ(g, Graph(4, e));
  EXPECT_TRUE(support::isomorphic(g, generate(Family::cycle, 4)));
  EXPECT_TRUE(is_bipartite(g).bipartite);
}

TEST(Generate, OmegaFourRegular) {
  const auto g = generate(Family::omega, 4);
  EXPECT_EQ(g.order(), 16u);
  for (std::size_t u = 0; u < 16; ++u) EXPECT_EQ(g.degree(u), 6u);
  EXPECT_THROW(generate(Family::omega, 12), CapacityError);
}

TEST(Complement, Basics) {
  EXPECT_FALSE(complement(generate(Family::complete, 4)).has_edges());
  EXPECT_EQ(complement(generate(Family::empty, 3)), generate(Family::complete, 3));
  const auto c5 = generate(Family::cycle, 5);
  const auto co = complement(c5);
  EXPECT_EQ(co.edge_count(), 5u);
  for (std::size_t u = 0; u < 5; ++u) EXPECT_EQ(co.degree(u), 2u);
  EXPECT_TRUE(support::isomorphic(co, c5));
  EXPECT_EQ(complement(co), c5);
}

TEST(Product, SmallCases) {
  const auto k2 = generate(Family::complete, 2);
  const auto sq = product(ProductKind::cartesian, k2, k2);
  EXPECT_TRUE(support::isomorphic(sq, generate(Family::cycle, 4)));
  const auto cat = product(ProductKind::categorical, k2, k2);
  EXPECT_EQ(edge_set(cat), (std::set<Edge>{{0, 3}, {1, 2}}));
  EXPECT_EQ(product(ProductKind::strong, k2, k2), generate(Family::complete, 4));
}

TEST(Product, MatchesDefinitionsOnRandomPairs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_graph(2 + rng() % 5, 0.5, rng);
    const auto h = random_graph(2 + rng() % 5, 0.5, rng);
    for (auto kind : kAllProductKinds) {
      EXPECT_EQ(edge_set(product(kind, g, h)), definition_edges(kind, g, h)) << to_string(kind);
    }
    // Strong = categorical union Cartesian on the same vertex-pair set.
    const auto cat = edge_set(product(ProductKind::categorical, g, h));
    auto uni = edge_set(product(ProductKind::cartesian, g, h));
    uni.insert(cat.begin(), cat.end());
    EXPECT_EQ(edge_set(product(ProductKind::strong, g, h)), uni);
    EXPECT_EQ(product(ProductKind::strong, g, h),
              graph_union(product(ProductKind::cartesian, g, h), product(ProductKind::categorical, g, h)));
    // Complement of the disjunctive product is the strong product of complements.
    EXPECT_EQ(complement(product(ProductKind::disjunctive, g, h)),
              product(ProductKind::strong, complement(g), complement(h)));
  }
}

TEST(Product, EdgeCounts) {
  const auto g = generate(Family::cycle, 5), h = generate(Family::petersen, 0);
  EXPECT_EQ(product(ProductKind::cartesian, g, h).edge_count(), 5u * 15 + 10u * 5);
  EXPECT_EQ(product(ProductKind::categorical, g, h).edge_count(), 2u * 5 * 15);
}

TEST(Union, Basics) {
  const auto c5 = generate(Family::cycle, 5);
  EXPECT_EQ(graph_union(c5, generate(Family::empty, 5)), c5);
  EXPECT_EQ(graph_union(c5, complement(c5)), generate(Family::complete, 5));
  EXPECT_THROW(graph_union(c5, generate(Family::empty, 4)), DimensionError);
}

TEST(Bipartite, Cycles) {
  const auto even = is_bipartite(generate(Family::cycle, 4));
  ASSERT_TRUE(even.bipartite);
  const auto c6 = generate(Family::cycle, 6);
  const auto r = is_bipartite(c6);
  ASSERT_TRUE(r.partition);
  for (auto [u, v] : c6.edges()) EXPECT_NE((*r.partition)[u], (*r.partition)[v]);
  EXPECT_FALSE(is_bipartite(generate(Family::cycle, 5)).bipartite);
  EXPECT_TRUE(is_bipartite(generate(Family::empty, 3)).bipartite);
}

TEST(RemoveIsolated, Basics) {
  const Graph g(4, {{0, 1}, {1, 2}, {0, 2}});
  const auto r = remove_isolated(g);
  EXPECT_EQ(r.graph, generate(Family::complete, 3));
  EXPECT_FALSE(r.index_map[3].has_value());
  EXPECT_EQ(*r.index_map[2], 2u);
  EXPECT_EQ(remove_isolated(generate(Family::empty, 5)).graph.order(), 0u);
}

TEST(RandomGraph, DeterministicPerSeed) {
  std::mt19937_64 a(42), b(42), c(43);
  const auto g1 = random_graph(12, 0.5, a), g2 = random_graph(12, 0.5, b), g3 = random_graph(12, 0.5, c);
  EXPECT_EQ(g1, g2);
  EXPECT_NE(g1, g3);
  std::mt19937_64 r(1);
  EXPECT_FALSE(random_graph(6, 0.0, r).has_edges());
  EXPECT_EQ(random_graph(6, 1.0, r).edge_count(), 15u);
}
