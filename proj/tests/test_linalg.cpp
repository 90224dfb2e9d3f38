#include <gtest/gtest.h>

#include "multilin/dense_matrix.hpp"

using namespace multilin;

TEST(Det, SmallCases) {
  EXPECT_EQ(det(DenseMatrix{{1, 2}, {3, 4}}), Rational(-2));
  EXPECT_EQ(det(DenseMatrix::identity(4)), Rational(1));
  EXPECT_EQ(det(DenseMatrix{{1, 2}, {2, 4}}), Rational(0));
  EXPECT_EQ(det(DenseMatrix{{0, 1}, {1, 0}}), Rational(-1));
  EXPECT_EQ(det(DenseMatrix{{Rational(1, 2), 0}, {0, Rational(2, 3)}}), Rational(1, 3));
  EXPECT_EQ(det(DenseMatrix(0, 0)), Rational(1));
}

TEST(Det, NonSquareThrows) { EXPECT_THROW(det(DenseMatrix(2, 3)), DimensionError); }

TEST(Rank, SmallCases) {
  EXPECT_EQ(rank(DenseMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(rank(DenseMatrix(3, 2)), 0u);
  EXPECT_EQ(rank(DenseMatrix{{1, 0, 1}, {0, 1, 1}}), 2u);
  EXPECT_EQ(rank(DenseMatrix{{1, 0, 1}, {0, 1, 1}}.transpose()), 2u);
}

TEST(Inverse, UnitUpperTriangular) {
  const DenseMatrix a{{1, 1}, {0, 1}};
  EXPECT_EQ(inverse(a), (DenseMatrix{{1, -1}, {0, 1}}));
  EXPECT_EQ(a * inverse(a), DenseMatrix::identity(2));
}

TEST(Inverse, SingularThrows) {
  EXPECT_THROW(inverse(DenseMatrix{{1, 2}, {2, 4}}), SingularMatrixError);
  EXPECT_THROW(inverse(DenseMatrix(2, 3)), DimensionError);
}

TEST(Matmul, ShapeMismatchThrows) { EXPECT_THROW(DenseMatrix(2, 3) * DenseMatrix(2, 3), DimensionError); }

TEST(Triangular, Spectrum) {
  EXPECT_TRUE(is_upper_triangular(DenseMatrix::identity(3)));
  EXPECT_EQ(triangular_spectrum(DenseMatrix::identity(3)), (std::vector<Rational>{1, 1, 1}));
  EXPECT_EQ(triangular_spectrum(DenseMatrix{{1, 5}, {0, 2}}), (std::vector<Rational>{1, 2}));
  EXPECT_FALSE(is_upper_triangular(DenseMatrix{{0, 0}, {1, 0}}));
  EXPECT_THROW(triangular_spectrum(DenseMatrix{{0, 0}, {1, 0}}), DomainError);
}

TEST(Det, MultiplicativeOnSample) {
  const DenseMatrix a{{2, -1, 0}, {Rational(1, 3), 4, 1}, {0, 5, -2}};
  const DenseMatrix b{{1, 1, 1}, {0, 2, Rational(-1, 2)}, {3, 0, 1}};
  EXPECT_EQ(det(a * b), det(a) * det(b));
  EXPECT_EQ(a * inverse(a), DenseMatrix::identity(3));
}
