#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"

using namespace vecchrom;

namespace {

const double kSqrt5 = std::sqrt(5.0);

VectorColoring rotate(const VectorColoring& c, const Matrix& q) {
  std::vector<Vector> out;
  for (const auto& v : c.vectors()) {
    Vector w(v.size(), 0.0);
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) w[i] += q(i, j) * v[j];
    out.push_back(std::move(w));
  }
  return VectorColoring(std::move(out), c.k(), c.strict());
}

VectorColoring solved_coloring(const Graph& g, bool strict) {
  const auto r = strict ? theta_bar(g, {}, Certificates::primal_and_dual)
                        : chi_vec(g, {}, Certificates::primal_and_dual);
  return extract_coloring(*r.primal_certificate, r.solves.back().objective, 1e-5, strict);
}

}  // namespace

TEST(VectorColoring, Validation) {
  EXPECT_THROW(VectorColoring({{1.0}}, 1.0, true), DomainError);
  EXPECT_THROW(VectorColoring({{1.0}, {1.0, 0.0}}, 2.0, true), DimensionError);
  EXPECT_THROW(VectorColoring({{0.5}}, 2.0, true), DomainError);
}

TEST(Simplex, SmallCases) {
  const auto c2 = simplex_coloring(2);
  ASSERT_EQ(c2.dim(), 1u);
  EXPECT_NEAR(std::abs(c2[0][0]), 1.0, 1e-15);
  EXPECT_NEAR(dot(c2[0], c2[1]), -1.0, 1e-15);
  const auto c3 = simplex_coloring(3);
  EXPECT_EQ(c3.dim(), 2u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) EXPECT_NEAR(dot(c3[i], c3[j]), -0.5, 1e-12);
  const auto c6 = simplex_coloring(6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) EXPECT_NEAR(dot(c6[i], c6[j]), -0.2, 1e-10);
  EXPECT_THROW(simplex_coloring(1), DomainError);
}

TEST(Simplex, PassesOnComplete) {
  for (std::size_t n = 2; n <= 9; ++n) {
    const auto r = verify_coloring(generate(Family::complete, n), simplex_coloring(n), 1e-10);
    EXPECT_TRUE(r.pass);
    EXPECT_LE(r.worst_residual, 1e-10);
  }
}

TEST(Simplex, TwoColoringOfEvenCycle) {
  const auto c2 = simplex_coloring(2);
  const auto c6 = generate(Family::cycle, 6);
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < 6; ++i) vs.push_back(c2[i % 2]);
  EXPECT_TRUE(verify_coloring(c6, VectorColoring(vs, 2.0, true), 1e-12).pass);
  // The same alternation on C_5 breaks one edge.
  std::vector<Vector> odd(vs.begin(), vs.begin() + 5);
  const auto r = verify_coloring(generate(Family::cycle, 5), VectorColoring(odd, 2.0, true), 1e-6);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.violations, 1u);
  EXPECT_EQ(*r.worst_edge, Edge(0, 4));
  EXPECT_NEAR(r.worst_residual, 2.0, 1e-12);
}

TEST(Verify, RotationInvariance) {
  std::mt19937_64 rng(81);
  const auto c = simplex_coloring(5);
  const auto q = support::random_orthogonal(c.dim(), rng);
  const auto rc = rotate(c, q);
  const auto g = generate(Family::complete, 5);
  EXPECT_NEAR(verify_coloring(g, rc, 1e-9).worst_residual, verify_coloring(g, c, 1e-9).worst_residual, 1e-9);
  EXPECT_TRUE(verify_coloring(g, rc, 1e-9).pass);
}

TEST(Verify, PlainModeAllowsSmaller) {
  // Antipodal pair satisfies <= -1/2 (k = 3) but not = -1/2.
  const VectorColoring strict({{1.0}, {-1.0}}, 3.0, true), plain({{1.0}, {-1.0}}, 3.0, false);
  const auto k2 = generate(Family::complete, 2);
  EXPECT_FALSE(verify_coloring(k2, strict, 1e-6).pass);
  EXPECT_TRUE(verify_coloring(k2, plain, 1e-6).pass);
}

TEST(Extract, SimplexRoundtrip) {
  for (std::size_t n = 2; n <= 6; ++n) {
    Matrix m(n, n, -1.0);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = n - 1.0;
    const auto c = extract_coloring(SymMatrix(m), double(n), 1e-9, true);
    const auto s = simplex_coloring(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_NEAR(dot(c[i], c[j]), dot(s[i], s[j]), 1e-6);
  }
}

TEST(Extract, Errors) {
  EXPECT_THROW(extract_coloring(SymMatrix::identity(2), 1.0, 1e-6, true), DomainError);
  EXPECT_THROW(extract_coloring(SymMatrix({{1, -1}, {-1, 2}}), 2.0, 1e-6, true), ValidationError);
  EXPECT_THROW(extract_coloring(SymMatrix({{1, -3}, {-3, 1}}), 2.0, 1e-6, true), ValidationError);
}

TEST(Extract, FromSolvedPrimals) {
  const auto c5 = generate(Family::cycle, 5);
  const auto cc = solved_coloring(c5, true);
  EXPECT_NEAR(cc.k(), kSqrt5, 1e-4);
  EXPECT_TRUE(verify_coloring(c5, cc, 1e-4).pass);
  const auto pet = generate(Family::petersen, 0);
  const auto pc = solved_coloring(pet, false);
  EXPECT_NEAR(pc.k(), 2.5, 1e-3);
  EXPECT_TRUE(verify_coloring(pet, pc, 1e-4).pass);
}

TEST(Lift, Examples) {
  const auto k2 = simplex_coloring(2);
  const auto same = lift_coloring(k2, 2.0);
  EXPECT_EQ(same.dim(), 2u);
  EXPECT_EQ(same[0][1], 0.0);
  EXPECT_NEAR(same[0][0], k2[0][0], 1e-15);

  const auto up = lift_coloring(k2, 3.0);
  EXPECT_NEAR(std::abs(up[0][0]), std::sqrt(3.0) / 2, 1e-12);
  EXPECT_NEAR(up[0][1], 0.5, 1e-12);
  EXPECT_NEAR(dot(up[0], up[1]), -0.5, 1e-12);
  EXPECT_THROW(lift_coloring(k2, 1.5), DomainError);
  EXPECT_THROW(lift_coloring(VectorColoring({{1.0}}, 2.0, false), 3.0), DomainError);
}

TEST(Lift, CycleToThree) {
  const auto c5 = generate(Family::cycle, 5);
  const auto lifted = lift_coloring(solved_coloring(c5, true), 3.0);
  for (const auto& v : lifted.vectors()) EXPECT_NEAR(std::sqrt(dot(v, v)), 1.0, 1e-10);
  EXPECT_TRUE(verify_coloring(c5, lifted, 1e-6).pass);
}

TEST(Tensor, SquareFromTwoEdges) {
  const auto k2 = simplex_coloring(2);
  const auto c4 = cartesian_tensor_coloring(k2, k2);
  const auto sq = product(ProductKind::cartesian, generate(Family::complete, 2), generate(Family::complete, 2));
  for (auto [u, v] : sq.edges()) EXPECT_NEAR(dot(c4[u], c4[v]), -1.0, 1e-15);
  EXPECT_TRUE(verify_coloring(sq, c4, 1e-12).pass);
}

TEST(Tensor, CycleTimesTriangle) {
  const auto c5 = generate(Family::cycle, 5), k3 = generate(Family::complete, 3);
  const auto lifted = lift_coloring(solved_coloring(c5, true), 3.0);
  const auto t = cartesian_tensor_coloring(lifted, simplex_coloring(3));
  const auto gh = product(ProductKind::cartesian, c5, k3);
  EXPECT_TRUE(verify_coloring(gh, t, 1e-6).pass);
  // Edges fixing the second coordinate carry the first factor's inner product.
  for (auto [u, v] : c5.edges()) {
    for (std::size_t z = 0; z < 3; ++z) {
      EXPECT_NEAR(dot(t[u * 3 + z], t[v * 3 + z]), dot(lifted[u], lifted[v]), 1e-12);
    }
  }
  EXPECT_THROW(cartesian_tensor_coloring(solved_coloring(c5, true), simplex_coloring(3)), DomainError);
}

TEST(Tensor, CartesianBoundOnRandomPairs) {
  std::mt19937_64 rng(83);
  int done = 0;
  while (done < 10) {
    const auto g = random_graph(3 + rng() % 4, 0.6, rng), h = random_graph(3 + rng() % 4, 0.6, rng);
    if (!g.has_edges() || !h.has_edges()) continue;
    ++done;
    auto cg = solved_coloring(g, true), ch = solved_coloring(h, true);
    const double top = std::max(cg.k(), ch.k());
    cg = lift_coloring(cg, top);
    ch = lift_coloring(ch, top);
    const auto t = cartesian_tensor_coloring(cg, ch);
    const auto gh = product(ProductKind::cartesian, g, h);
    EXPECT_TRUE(verify_coloring(gh, t, 1e-5).pass);
    EXPECT_LE(theta_bar(gh).value, top + 1e-4);
  }
}

TEST(Modular, Examples) {
  const ClassicalColoring k2({0, 1}, 2);
  const auto sq = product(ProductKind::cartesian, generate(Family::complete, 2), generate(Family::complete, 2));
  EXPECT_TRUE(is_proper(sq, modular_coloring(k2, k2)));

  const auto c5 = generate(Family::cycle, 5), k3 = generate(Family::complete, 3);
  const ClassicalColoring a({0, 1, 0, 1, 2}, 3), b({0, 1, 2}, 3);
  ASSERT_TRUE(is_proper(c5, a));
  const auto m = modular_coloring(a, b);
  EXPECT_TRUE(is_proper(product(ProductKind::cartesian, c5, k3), m));
  EXPECT_THROW(modular_coloring(a, k2), DomainError);
  EXPECT_THROW(ClassicalColoring({0, 3}, 3), DomainError);
}

TEST(Modular, ReproducesProductChromaticNumber) {
  std::mt19937_64 rng(87);
  for (int t = 0; t < 10; ++t) {
    const auto g = random_graph(2 + rng() % 6, 0.5, rng), h = random_graph(2 + rng() % 6, 0.5, rng);
    const auto rg = chromatic_number(g, 8), rh = chromatic_number(h, 8);
    const std::size_t m = std::max(rg.value, rh.value);
    const auto col = modular_coloring(ClassicalColoring(rg.coloring, m), ClassicalColoring(rh.coloring, m));
    const auto gh = product(ProductKind::cartesian, g, h);
    EXPECT_TRUE(is_proper(gh, col));
    EXPECT_EQ(chromatic_number(gh, gh.order(), {64}).value, m);
  }
}
