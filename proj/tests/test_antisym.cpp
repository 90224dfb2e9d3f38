#include <gtest/gtest.h>

#include "multilin/alt_matrix.hpp"

using namespace multilin;

TEST(Wedge, TwoByTwoScalar) {
  const DenseMatrix a{{1, 2}, {3, 4}}, b{{5, 6}, {7, 8}};
  const AltMatrix c = wedge(AltMatrix::from_linear(a), AltMatrix::from_linear(b));
  ASSERT_EQ(c.rows(), 1u);
  ASSERT_EQ(c.cols(), 1u);
  // a11 b22 + a22 b11 - a12 b21 - a21 b12
  EXPECT_EQ(c.flat()(0, 0), Rational(1 * 8 + 4 * 5 - 2 * 7 - 3 * 6));
}

TEST(Wedge, ThreeByThreeTopLeft) {
  const DenseMatrix a{{1, 2, 0}, {-1, 3, 4}, {2, 2, 5}};
  const DenseMatrix b{{0, 1, 1}, {2, -3, 1}, {1, 0, 6}};
  const AltMatrix c = wedge(AltMatrix::from_linear(a), AltMatrix::from_linear(b));
  const Rational d1 = Rational(1 * -3 - 2 * 2);  // |a11 a12; b21 b22|
  const Rational d2 = Rational(0 * 3 - 1 * -1);  // |b11 b12; a21 a22|
  EXPECT_EQ(c.at(StrictIndex({1, 2}, 3), StrictIndex({1, 2}, 3)), d1 + d2);
}

TEST(Wedge, ZeroAndBase) {
  EXPECT_TRUE(wedge(AltMatrix::from_linear(DenseMatrix::identity(3)), AltMatrix(3, 3, 1, 1)).is_zero());
  EXPECT_THROW(wedge(AltMatrix(2, 2, 1, 1), AltMatrix(3, 2, 1, 1)), DimensionError);
}

TEST(Wedge, VectorAntisymmetry) {
  const AltMatrix x = AltMatrix::column({1, Rational(2, 3), -1});
  const AltMatrix y = AltMatrix::column({0, 5, 2});
  EXPECT_TRUE(wedge(x, x).is_zero());
  EXPECT_EQ(wedge(x, y), Rational(-1) * wedge(y, x));
}

TEST(Wedge, OversizedWeightIsEmpty) {
  const AltMatrix c = wedge(AltMatrix::column({1, 2}), wedge(AltMatrix::column({3, 4}), AltMatrix::column({5, 6})));
  EXPECT_EQ(c.rows(), 0u);
}

TEST(MultiWedge, EmptyIsUnitAndSingleIsItself) {
  EXPECT_EQ(multi_wedge({}), AltMatrix::unit());
  const AltMatrix a = AltMatrix::from_linear(DenseMatrix{{1, 2}, {3, 4}});
  EXPECT_EQ(multi_wedge({a}), a);
}

TEST(Compound, Examples) {
  EXPECT_EQ(compound(DenseMatrix::identity(3), 2).flat(), DenseMatrix::identity(3));
  const AltMatrix c = compound(DenseMatrix::diagonal({2, 3, 5}), 2);
  EXPECT_EQ(c.flat(), DenseMatrix::diagonal({6, 10, 15}));
  EXPECT_EQ(det(c.flat()), Rational(900));
  const DenseMatrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(compound(a, 1).flat(), a);
  EXPECT_EQ(compound(a, 2).flat()(0, 0), det(a));
}

TEST(WedgePower, ZeroIsUnitAndFactorial) {
  const AltMatrix a = AltMatrix::from_linear(DenseMatrix{{1, 2, 0}, {0, 1, 1}, {4, 0, 1}});
  EXPECT_EQ(wedge_power(a, 0), AltMatrix::unit(3, 3));
  EXPECT_EQ(wedge_power(a, 3).flat()(0, 0), Rational(6) * det(DenseMatrix{{1, 2, 0}, {0, 1, 1}, {4, 0, 1}}));
  EXPECT_THROW(wedge_power(AltMatrix(2, 2, 2, 1), 2), DimensionError);
}

TEST(GlActionAntisym, IdentityAndSingular) {
  AltMatrix a(3, 3, 1, 2);
  a.set(StrictIndex({2}, 3), StrictIndex({1, 3}, 3), 7);
  EXPECT_EQ(gl_action_antisym(a, DenseMatrix::identity(3), 2), a);
  EXPECT_THROW(gl_action_antisym(a, DenseMatrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 1}}, 2), SingularMatrixError);
}

TEST(GlActionAntisym, ThirdFactorIsMinorMatrix) {
  const DenseMatrix t{{1, 2, 0}, {-1, 1, 3}, {2, 0, 1}};
  const AltMatrix c = compound(t, 2);
  const auto idx = enumerate_strict(3, 2);
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t s = 0; s < idx.size(); ++s) {
      const int i1 = idx[r][0] - 1, i2 = idx[r][1] - 1, j1 = idx[s][0] - 1, j2 = idx[s][1] - 1;
      EXPECT_EQ(c.flat()(r, s), t(i1, j1) * t(i2, j2) - t(i1, j2) * t(i2, j1));
    }
}
