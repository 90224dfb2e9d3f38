#include <gtest/gtest.h>

#include "multilin/polymap.hpp"

using namespace multilin;

namespace {

SymMatrix scalar_block(int p_prime, Rational v) {
  SymMatrix b(1, 1, 1, p_prime);
  b.set({1}, {p_prime}, std::move(v));
  return b;
}

PolyMap square() { return PolyMap(1, 1, {SymMatrix(1, 1, 1, 0), SymMatrix(1, 1, 1, 1), scalar_block(2, 2)}); }

PolyMap shift() { return PolyMap(1, 1, {scalar_block(0, 1), scalar_block(1, 1)}); }

}  // namespace

TEST(Eval, Examples) {
  EXPECT_EQ(eval(square(), {3}), (Vector{9}));
  EXPECT_EQ(eval(PolyMap::identity(2), {Rational(1, 2), -4}), (Vector{Rational(1, 2), -4}));
  EXPECT_EQ(eval(PolyMap(1, 1, {scalar_block(0, 7)}), {11}), (Vector{7}));
  EXPECT_THROW(eval(square(), {1, 2}), DimensionError);
}

TEST(ExpBlock, ShiftSecondRow) {
  const BlockMatrix e = exp_block(shift().to_block_matrix(), 2, 2);
  EXPECT_EQ(e.block(2, 0).at({2}, {0}), Rational(1, 2));
  EXPECT_EQ(e.block(2, 1).at({2}, {1}), Rational(1));
  EXPECT_EQ(e.block(2, 2).at({2}, {2}), Rational(1));
  EXPECT_EQ(e.block(1, 0), shift().block(0));
  EXPECT_EQ(e.block(1, 1), shift().block(1));
  EXPECT_EQ(e.block(0, 0).at({0}, {0}), Rational(1));
}

TEST(ExpBlock, ZeroGivesUnit) {
  const BlockMatrix e = exp_block(BlockMatrix(2, 3), 3, 3);
  EXPECT_EQ(e, BlockMatrix::unit(2, 3));
}

TEST(ExpBlock, RejectsConstantBlock) {
  BlockMatrix m(1, 1);
  m.set_block(SymMatrix::unit(1, 1));
  EXPECT_THROW(exp_block(m, 2, 2), DomainError);
  EXPECT_THROW(exp_block(BlockMatrix(1, 1), -1, 0), DomainError);
}

TEST(Compose, SquareAfterShift) {
  const PolyMap c = compose(square(), shift());
  ASSERT_EQ(c.degree(), 2);
  EXPECT_EQ(c.block(0).at({1}, {0}), Rational(1));
  EXPECT_EQ(c.block(1).at({1}, {1}), Rational(2));
  EXPECT_EQ(c.block(2).at({1}, {2}), Rational(2));
  for (int y = -3; y <= 3; ++y) EXPECT_EQ(eval(c, {y}), (Vector{(y + 1) * (y + 1)}));
}

TEST(Compose, IdentityAndLinear) {
  EXPECT_EQ(compose(square(), PolyMap::identity(1)), square());
  const DenseMatrix a{{1, 2}, {0, -1}}, b{{Rational(1, 2), 0}, {3, 1}};
  EXPECT_EQ(compose(PolyMap::linear(a), PolyMap::linear(b)).block(1).flat(), a * b);
}

TEST(Compose, DimensionMismatchThrows) {
  EXPECT_THROW(compose(PolyMap::identity(2), PolyMap::identity(3)), DimensionError);
}

TEST(ChangeOfVariables, ShiftedSquare) {
  const PolyMap r = change_of_variables(square(), PolyMap::identity(1), shift());
  EXPECT_EQ(r, compose(square(), shift()));
  EXPECT_EQ(change_of_variables(square(), PolyMap::identity(1), PolyMap::identity(1)), square());
}

TEST(ChangeOfVariables, LinearMatchesGlAction) {
  SymMatrix a(2, 2, 1, 2);
  a.set({1, 0}, {2, 0}, 1);
  a.set({1, 0}, {1, 1}, -3);
  a.set({0, 1}, {0, 2}, Rational(1, 2));
  const DenseMatrix s{{2, 1}, {1, 1}}, t_inv{{1, -1}, {2, 3}};
  PolyMap phi(2, 2);
  phi.set_block(a);
  const PolyMap r = change_of_variables(phi, PolyMap::linear(s), PolyMap::linear(t_inv));
  EXPECT_EQ(r.block(2), gl_action_homogeneous(a, s, t_inv, 2));
}

TEST(GlActionHomogeneous, IdentityAndShape) {
  SymMatrix a(2, 2, 1, 2);
  a.set({0, 1}, {1, 1}, 4);
  EXPECT_EQ(gl_action_homogeneous(a, DenseMatrix::identity(2), DenseMatrix::identity(2), 2), a);
  EXPECT_THROW(gl_action_homogeneous(a, DenseMatrix::identity(2), DenseMatrix::identity(2), 3), DimensionError);
}

TEST(GlActionHomogeneous, QuadraticThirdFactorCentre) {
  const DenseMatrix t{{2, 3}, {5, 7}};
  const SymMatrix p = sym_power(SymMatrix::from_linear(t), 2);
  const Rational centre = Rational(2 * 7 + 3 * 5);
  EXPECT_EQ(p.at({1, 1}, {1, 1}), centre);
  EXPECT_EQ(p.at({1, 1}, {2, 0}), Rational(2 * 2 * 5));
  EXPECT_EQ(p.at({2, 0}, {1, 1}), Rational(2 * 3));
  EXPECT_NE(p.at({1, 1}, {1, 1}), 2 * centre);
}

TEST(InvertAffine, RoundTrip) {
  const PolyMap m = PolyMap::affine(DenseMatrix{{2, 1}, {1, 1}}, {3, -1});
  const PolyMap inv = invert_affine(m);
  EXPECT_EQ(compose(m, inv), PolyMap::identity(2));
  EXPECT_THROW(invert_affine(PolyMap::affine(DenseMatrix{{1, 1}, {1, 1}}, {0, 0})), SingularMatrixError);
  EXPECT_THROW(invert_affine(square()), DomainError);
}

TEST(PolyMap, BlockValidation) {
  PolyMap m(2, 3);
  EXPECT_THROW(m.set_block(SymMatrix(3, 2, 2, 1)), DimensionError);
  EXPECT_THROW(m.set_block(SymMatrix(2, 2, 1, 1)), DimensionError);
}
