#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace dualgr;

TEST(Matrix, DeterminantsAgreeWithLeibniz) {
  Rng rng(1);
  for (std::size_t n = 1; n <= 7; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      Matrix<Integer> m = random_matrix(n, n, rng, 4);
      Integer expected = testutil::leibniz_det(m);
      EXPECT_EQ(det_cofactor(m), expected);
      EXPECT_EQ(det_bareiss(m), expected);
      EXPECT_EQ(det(m), expected);
    }
}

TEST(Matrix, BareissAndCofactorAgreeOnLargerMatrices) {
  Rng rng(4);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix<Integer> m = random_matrix(11, 11, rng, 3);
    EXPECT_EQ(det_cofactor(m), det_bareiss(m));
  }
}

TEST(Matrix, PolynomialDeterminantMatchesLeibniz) {
  Matrix<IntPoly> m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = (i + j) % 3 ? IntPoly::variable(16, 4 * i + j) : IntPoly::constant(16, Integer(0));
  EXPECT_EQ(det(m), testutil::leibniz_det(m));
  EXPECT_EQ(det_bareiss(m), testutil::leibniz_det(m));
}

TEST(Matrix, PrimeFieldDeterminantIsReduction) {
  Rng rng(6);
  Matrix<Integer> m = random_matrix(6, 6, rng, 50);
  Matrix<Fp> mp = m.map<Fp>([](const Integer& x) { return Fp(x); });
  EXPECT_EQ(det(mp), Fp(det(m)));
}

TEST(Matrix, RankAgreesWithGaussianElimination) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t r = 1 + rng.uniform(0, 6), c = 1 + rng.uniform(0, 6);
    Matrix<Integer> a = random_matrix(r, 3, rng, 2), b = random_matrix(3, c, rng, 2);
    Matrix<Integer> m = a * b;
    EXPECT_EQ(rank_exact(m), testutil::gauss_rank(m));
    EXPECT_EQ(rank_fraction_free(m), testutil::gauss_rank(m));
    EXPECT_LE(rank_exact(m), 3u);
  }
}

TEST(Matrix, NullspaceVectorsAreKernel) {
  Rng rng(12);
  Matrix<Integer> m = random_matrix(4, 7, rng, 3);
  auto ns = nullspace(to_rational(m));
  EXPECT_EQ(ns.size(), 7 - rank_exact(m));
  for (const auto& v : ns)
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) s += Rational(m(i, j)) * v[j];
      EXPECT_EQ(s, 0);
    }
}

TEST(Matrix, AdjugateIdentity) {
  Rng rng(13);
  Matrix<Integer> m = random_matrix(5, 5, rng, 3);
  Matrix<Integer> p = m * adjugate(m);
  Integer d = det(m);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(p(i, j), i == j ? d : Integer(0));
}

TEST(Matrix, RowSpaceComparison) {
  Matrix<Integer> a{{1, 2, 3}, {0, 1, 1}};
  Matrix<Integer> b{{1, 3, 4}, {2, 5, 7}};
  Matrix<Integer> c{{1, 0, 0}, {0, 1, 1}};
  EXPECT_TRUE(same_row_space(a, b));
  EXPECT_FALSE(same_row_space(a, c));
}

TEST(Matrix, ShapeErrors) {
  Matrix<Integer> m(2, 3);
  EXPECT_THROW(det(m), std::invalid_argument);
  EXPECT_THROW(m * m, std::invalid_argument);
}

TEST(Matrix, PermutedIsSimultaneous) {
  Matrix<Integer> m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  Matrix<Integer> p = m.permuted({2, 0, 1});
  EXPECT_EQ(p(0, 0), Integer(9));
  EXPECT_EQ(p(0, 1), Integer(7));
  EXPECT_EQ(p(1, 2), Integer(2));
}
