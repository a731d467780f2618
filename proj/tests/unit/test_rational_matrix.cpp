#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wdg/error.hpp"
#include "wdg/rational_matrix.hpp"

using wdg::Rational;
using wdg::RationalMatrix;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = oracle::random_rational(rng);
  }
  return m;
}

}  // namespace

TEST(Kronecker, IdentityTimesIdentity) {
  EXPECT_EQ(wdg::kronecker(RationalMatrix::identity(2), RationalMatrix::identity(3)), RationalMatrix::identity(6));
}

TEST(Kronecker, ScalarBlock) {
  const RationalMatrix a{{0, 1}, {1, 0}};
  const RationalMatrix b{{2}};
  EXPECT_EQ(wdg::kronecker(a, b), (RationalMatrix{{0, 2}, {2, 0}}));
}

TEST(Kronecker, IndexLayout) {
  std::mt19937_64 rng(11);
  const RationalMatrix a = random_matrix(rng, 2, 3);
  const RationalMatrix b = random_matrix(rng, 3, 2);
  const RationalMatrix k = wdg::kronecker(a, b);
  ASSERT_EQ(k.rows(), 6U);
  ASSERT_EQ(k.cols(), 6U);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = 0; q < 2; ++q) EXPECT_EQ(k(i * 3 + p, j * 2 + q), a(i, j) * b(p, q));
}

TEST(Hadamard, Examples) {
  const RationalMatrix a{{Rational(1, 2), Rational(-1, 3)}};
  EXPECT_EQ(wdg::hadamard(a, a), (RationalMatrix{{Rational(1, 4), Rational(1, 9)}}));
  EXPECT_EQ(wdg::hadamard(a, RationalMatrix{{1, 1}}), a);
  EXPECT_TRUE(wdg::hadamard(a, RationalMatrix(1, 2)).is_zero());
}

TEST(Hadamard, ShapeMismatch) {
  try {
    wdg::hadamard(RationalMatrix(2, 2), RationalMatrix(2, 3));
    FAIL();
  } catch (const wdg::Error& e) {
    EXPECT_EQ(e.code(), wdg::ErrorCode::ShapeMismatch);
  }
}

TEST(AbsMatrix, Examples) {
  EXPECT_EQ(wdg::abs_matrix(RationalMatrix{{Rational(-1, 8), Rational(1, 8)}}),
            (RationalMatrix{{Rational(1, 8), Rational(1, 8)}}));
  EXPECT_TRUE(wdg::abs_matrix(RationalMatrix(3, 3)).is_zero());
  const RationalMatrix md{{0, Rational(1, 3), Rational(-1, 6)}, {Rational(1, 3), 0, 0}, {Rational(-1, 6), 0, 0}};
  EXPECT_EQ(wdg::upper_triangle_sum(wdg::abs_matrix(md)), Rational(1, 2));
}

TEST(Kronecker, MixedProductWithHadamardProperty) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const RationalMatrix a = random_matrix(rng, 1 + trial % 3, 1 + trial % 4);
    const RationalMatrix b = random_matrix(rng, 1 + trial % 2, 2 + trial % 3);
    const RationalMatrix ab = wdg::kronecker(a, b);
    EXPECT_EQ(wdg::hadamard(ab, ab), wdg::kronecker(wdg::hadamard(a, a), wdg::hadamard(b, b)));
    EXPECT_EQ(wdg::abs_matrix(ab), wdg::kronecker(wdg::abs_matrix(a), wdg::abs_matrix(b)));
  }
}

TEST(RationalMatrix, RaggedLiteralThrows) {
  EXPECT_THROW((RationalMatrix{{1, 2}, {3}}), wdg::Error);
}

TEST(RationalMatrix, ProductAndRank) {
  const RationalMatrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(a * RationalMatrix::identity(2), a);
  EXPECT_EQ(a * a, (RationalMatrix{{7, 10}, {15, 22}}));
  EXPECT_EQ(wdg::rank(a), 2U);
  EXPECT_EQ(wdg::rank(RationalMatrix{{1, 2}, {2, 4}}), 1U);
  EXPECT_EQ(wdg::rank(RationalMatrix(3, 3)), 0U);
  EXPECT_THROW(a * RationalMatrix(3, 1), wdg::Error);
}

TEST(RationalMatrix, QuadraticFormAndSums) {
  const RationalMatrix m{{0, 1}, {1, 0}};
  EXPECT_EQ(wdg::half_quadratic_form(m, {1, -1}), Rational(-1));
  EXPECT_EQ(wdg::entry_sum(m), Rational(2));
  EXPECT_EQ(wdg::upper_triangle_sum(m), Rational(1));
  EXPECT_TRUE(m.is_symmetric());
  EXPECT_FALSE((RationalMatrix{{0, 1}, {2, 0}}).is_symmetric());
  EXPECT_EQ((RationalMatrix{{0, 1}, {2, 0}}).transpose(), (RationalMatrix{{0, 2}, {1, 0}}));
}
