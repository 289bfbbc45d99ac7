#include "fank/error.hpp"
#include "fank/linalg.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace fank;
using fank::testing::Rng;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> r;
  std::size_t cols = 0;
  for (auto row : rows) {
    r.push_back(make_vector(row));
    cols = row.size();
  }
  return IntMatrix::from_rows(r, cols);
}

void expect_valid_smith(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  ASSERT_EQ(s.U * a * s.V, s.D);
  EXPECT_EQ(abs(determinant(s.U)), 1);
  EXPECT_EQ(abs(determinant(s.V)), 1);
  EXPECT_EQ(s.U * s.U_inv, IntMatrix::identity(a.rows()));
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) EXPECT_EQ(s.D(i, j), 0);
  const std::size_t k = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < k; ++i) {
    EXPECT_GE(s.D(i, i), 0);
    if (i + 1 < k && s.D(i, i) != 0) EXPECT_TRUE(mpz_divisible_p(s.D(i + 1, i + 1).get_mpz_t(), s.D(i, i).get_mpz_t()));
    if (s.D(i, i) == 0 && i + 1 < k) EXPECT_EQ(s.D(i + 1, i + 1), 0);
  }
  EXPECT_EQ(s.rank, rank(a));
}

}  // namespace

TEST(Smith, Identity) {
  SmithDecomposition s = smith_normal_form(IntMatrix::identity(2));
  EXPECT_EQ(s.D, IntMatrix::identity(2));
}

TEST(Smith, TwoByTwo) {
  IntMatrix a = mat({{2, 4}, {6, 8}});
  SmithDecomposition s = smith_normal_form(a);
  EXPECT_EQ(s.D, mat({{2, 0}, {0, 4}}));
  EXPECT_EQ(s.U * a * s.V, s.D);
}

TEST(Smith, ZeroMatrix) {
  SmithDecomposition s = smith_normal_form(IntMatrix(2, 2));
  EXPECT_EQ(s.D, IntMatrix(2, 2));
  EXPECT_EQ(s.rank, 0u);
}

TEST(Smith, NonSquareAndDivisibilityRepair) {
  expect_valid_smith(mat({{2, 0}, {0, 3}}));
  expect_valid_smith(mat({{4, 6, 10}, {6, 9, 15}}));
  expect_valid_smith(mat({{0, 0, 7}}));
  expect_valid_smith(mat({{3}, {5}, {0}}));
}

TEST(Smith, RandomIdentities) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t r = rng.uniform(1, 6), c = rng.uniform(1, 6);
    IntMatrix a = rng.matrix(r, c, -50, 50);
    if (trial % 5 == 0 && r > 1) a = rng.matrix(r, 1, -9, 9) * rng.matrix(1, c, -9, 9);  // rank one
    expect_valid_smith(a);
  }
}

TEST(Determinant, Basics) {
  EXPECT_EQ(determinant(mat({{1, 0, 2}, {0, 1, 2}, {-1, -1, 1}})), 5);
  EXPECT_EQ(determinant(mat({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(determinant(mat({{1, 2}, {2, 4}})), 0);
}

TEST(Hermite, IndexTwo) {
  Lattice l = hermite_basis(2, {make_vector({2, 0}), make_vector({0, 2}), make_vector({1, 1})});
  ASSERT_EQ(l.rank(), 2u);
  EXPECT_EQ(determinant(IntMatrix::from_rows(l.basis(), 2)), 2);
}

TEST(Hermite, EmptyAndFull) {
  Lattice empty = hermite_basis(3, {});
  EXPECT_EQ(empty.rank(), 0u);
  Lattice full = hermite_basis(2, {make_vector({1, 0}), make_vector({0, 1})});
  EXPECT_TRUE(spans_ambient(2, full.basis()).spans);
}

TEST(Hermite, TransformReproducesBasis) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = rng.uniform(1, 5), k = rng.uniform(0, 6);
    std::vector<IntVector> g;
    for (std::size_t i = 0; i < k; ++i) g.push_back(rng.vector(n, -9, 9));
    HermiteResult h = hermite_with_transform(n, g);
    if (k == 0) continue;
    IntMatrix H = h.W * IntMatrix::from_rows(g, n);
    EXPECT_EQ(abs(determinant(h.W)), 1);
    for (std::size_t i = 0; i < h.lattice.rank(); ++i) EXPECT_EQ(H.row(i), h.lattice.basis()[i]);
    for (std::size_t i = h.lattice.rank(); i < k; ++i) EXPECT_TRUE(is_zero(H.row(i)));
  }
}

TEST(Hermite, CanonicalUnderPermutationAndIdempotent) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = rng.uniform(1, 5), k = rng.uniform(1, 6);
    std::vector<IntVector> g;
    for (std::size_t i = 0; i < k; ++i) g.push_back(rng.vector(n, -12, 12));
    Lattice a = hermite_basis(n, g);
    std::shuffle(g.begin(), g.end(), rng.engine());
    // add a redundant combination too
    g.push_back(g[0] + Integer(3) * g.back());
    EXPECT_EQ(hermite_basis(n, g), a);
    EXPECT_EQ(hermite_basis(n, a.basis()), a);
  }
}

TEST(Primitive, Examples) {
  EXPECT_EQ(primitive(make_vector({2, 4, 6})), make_vector({1, 2, 3}));
  EXPECT_EQ(primitive(make_vector({1, 0})), make_vector({1, 0}));
  EXPECT_EQ(primitive(make_vector({0, -3})), make_vector({0, -1}));
  EXPECT_THROW(primitive(make_vector({0, 0})), Error);
}

TEST(LatticeContains, Examples) {
  Lattice l = hermite_basis(2, {make_vector({2, -1}), make_vector({1, 1})});
  EXPECT_FALSE(lattice_contains(l, make_vector({1, -1})));
  Lattice z2 = hermite_basis(2, {make_vector({1, 0}), make_vector({0, 1})});
  auto a = lattice_contains(z2, make_vector({7, -3}));
  ASSERT_TRUE(a);
  EXPECT_EQ(*a, make_vector({7, -3}));
  auto zero = lattice_contains(l, make_vector({0, 0}));
  ASSERT_TRUE(zero);
  EXPECT_TRUE(is_zero(*zero));
  EXPECT_THROW(lattice_contains(l, make_vector({1, 2, 3})), Error);
}

TEST(LatticeContains, CoefficientsReconstruct) {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = rng.uniform(1, 4), k = rng.uniform(1, 4);
    std::vector<IntVector> g;
    for (std::size_t i = 0; i < k; ++i) g.push_back(rng.vector(n, -6, 6));
    Lattice l = hermite_basis(n, g);
    IntVector v = zero_vector(n);
    for (const auto& x : g) v = v + Integer(rng.uniform(-4, 4)) * x;
    auto c = lattice_contains(l, v);
    ASSERT_TRUE(c);
    IntVector back = zero_vector(n);
    for (std::size_t i = 0; i < l.rank(); ++i) back = back + (*c)[i] * l.basis()[i];
    EXPECT_EQ(back, v);
  }
}

TEST(LatticeLeq, Examples) {
  Lattice two = hermite_basis(2, {make_vector({2, 0})});
  Lattice one = hermite_basis(2, {make_vector({1, 0})});
  EXPECT_TRUE(lattice_leq(two, one));
  EXPECT_FALSE(lattice_leq(one, two));
  EXPECT_TRUE(lattice_leq(one, one));
}

TEST(LatticeLeq, PartialOrder) {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = rng.uniform(1, 3);
    auto random_lattice = [&] {
      std::vector<IntVector> g;
      for (long i = rng.uniform(0, 3); i > 0; --i) g.push_back(rng.vector(n, -3, 3));
      return hermite_basis(n, g);
    };
    Lattice a = random_lattice(), b = random_lattice();
    EXPECT_TRUE(lattice_leq(a, a));
    if (lattice_leq(a, b) && lattice_leq(b, a)) EXPECT_EQ(a, b);
    EXPECT_TRUE(lattice_leq(a, lattice_sum(a, b)));
  }
}

TEST(SpansAmbient, Examples) {
  SpanInfo h1 = spans_ambient(2, {make_vector({1, 0}), make_vector({0, 1}), make_vector({-1, 1})});
  EXPECT_TRUE(h1.spans);
  EXPECT_EQ(*h1.index, 1);
  SpanInfo fake = spans_ambient(2, {make_vector({1, 2}), make_vector({1, -1}), make_vector({-2, -1})});
  EXPECT_FALSE(fake.spans);
  ASSERT_TRUE(fake.index);
  EXPECT_EQ(*fake.index, 3);
  SpanInfo low = spans_ambient(2, {make_vector({1, 0})});
  EXPECT_FALSE(low.spans);
  EXPECT_FALSE(low.index);
  EXPECT_EQ(low.rank, 1u);
}

TEST(SpansAmbient, IndexMatchesSmithProduct) {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = rng.uniform(1, 4), k = n + rng.uniform(0, 2);
    std::vector<IntVector> g;
    for (std::size_t i = 0; i < k; ++i) g.push_back(rng.vector(n, -7, 7));
    SpanInfo info = spans_ambient(n, g);
    SmithDecomposition s = smith_normal_form(IntMatrix::from_rows(g, n));
    EXPECT_EQ(info.rank, s.rank);
    if (s.rank == n) {
      Integer prod = 1;
      for (const auto& d : s.invariant_factors()) prod *= d;
      EXPECT_EQ(*info.index, prod);
      EXPECT_EQ(info.spans, prod == 1);
    } else {
      EXPECT_FALSE(info.spans);
    }
  }
}

TEST(Perp, Examples) {
  EXPECT_EQ(perp_lattice(2, {make_vector({1, 0})}), hermite_basis(2, {make_vector({0, 1})}));
  EXPECT_EQ(perp_lattice(3, {make_vector({1, 0, 1}), make_vector({0, 1, 1}), make_vector({-1, 0, 1}),
                             make_vector({0, -1, 1})})
                .rank(),
            0u);
  EXPECT_EQ(perp_lattice(2, {make_vector({1, 1})}), hermite_basis(2, {make_vector({1, -1})}));
  EXPECT_EQ(perp_lattice(2, {}).rank(), 2u);
}

TEST(Perp, SaturatedAndOrthogonal) {
  Rng rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = rng.uniform(1, 5), k = rng.uniform(0, 4);
    std::vector<IntVector> g;
    for (std::size_t i = 0; i < k; ++i) g.push_back(rng.vector(n, -6, 6));
    Lattice p = perp_lattice(n, g);
    EXPECT_EQ(p.rank(), n - rank_of(n, g));
    for (const auto& b : p.basis())
      for (const auto& x : g) EXPECT_EQ(dot(b, x), 0);
    // saturated: index of p in its rational span is 1, i.e. Smith factors all 1
    if (p.rank() > 0)
      for (const auto& d : smith_normal_form(IntMatrix::from_rows(p.basis(), n)).invariant_factors()) EXPECT_EQ(d, 1);
  }
}
