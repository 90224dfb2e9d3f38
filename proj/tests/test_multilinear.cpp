#include <gtest/gtest.h>

#include <array>

#include "multilin/multilinear.hpp"

using namespace multilin;

namespace {

SymMultiMap sym_scalar(int arity, Rational v) {
  SymMatrix m(1, 1, 1, arity);
  m.set({1}, {arity}, std::move(v));
  return SymMultiMap(m);
}

Rational det3(const std::vector<Vector>& cols) {
  DenseMatrix m(3, 3);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) m(i, j) = cols[j][i];
  return det(m);
}

}  // namespace

TEST(EvalSym, ArityOneIsMatrixVector) {
  const DenseMatrix a{{1, 2}, {0, -1}, {3, 1}};
  const SymMultiMap m(SymMatrix::from_linear(a));
  EXPECT_EQ(eval_sym(m, {{2, 5}}), (Vector{12, -5, 11}));
}

TEST(EvalSym, ScalarQuadraticForm) {
  // For scalars x (.) y = x y, so A = (2) gives 2 (x y) / 2! = x y and the
  // diagonal reproduces the polynomial A x^(2) / 2! = x^2.
  EXPECT_EQ(eval_sym(sym_scalar(2, 2), {{3}, {Rational(1, 2)}}), (Vector{Rational(3, 2)}));
  EXPECT_EQ(eval_sym(sym_scalar(2, 2), {{3}, {3}}), (Vector{9}));
  EXPECT_EQ(eval_sym(sym_scalar(2, 2), {{0}, {7}}), (Vector{0}));
}

TEST(EvalSym, SymmetricInArguments) {
  SymMatrix m(2, 2, 1, 2);
  m.set({1, 0}, {2, 0}, 1);
  m.set({1, 0}, {1, 1}, 3);
  m.set({0, 1}, {0, 2}, -2);
  const SymMultiMap f(m);
  const Vector x{1, 2}, y{Rational(-1, 3), 4};
  EXPECT_EQ(eval_sym(f, {x, y}), eval_sym(f, {y, x}));
}

TEST(EvalSym, ArityMismatchThrows) {
  EXPECT_THROW(eval_sym(sym_scalar(2, 1), {{1}}), DimensionError);
  EXPECT_THROW(eval_sym(sym_scalar(1, 1), {{1, 2}}), DimensionError);
}

TEST(EvalSym, RejectsRowWeightOtherThanOne) { EXPECT_THROW(SymMultiMap(SymMatrix(1, 1, 2, 1)), DimensionError); }

TEST(EvalAlt, FullWeightIsDeterminant) {
  AltMatrix m(1, 3, 1, 3);
  m.set(StrictIndex({1}, 1), StrictIndex({1, 2, 3}, 3), 1);
  const AltMultiMap f(m);
  const std::vector<Vector> args{{1, 2, 0}, {Rational(1, 2), -1, 3}, {4, 0, 1}};
  EXPECT_EQ(eval_alt(f, args), (Vector{det3(args)}));
  EXPECT_EQ(eval_alt(f, {args[0], args[0], args[2]}), (Vector{0}));
  EXPECT_EQ(eval_alt(f, {args[1], args[0], args[2]}), (Vector{-det3(args)}));
}

TEST(EvalAlt, ArityOneIsMatrixVector) {
  const DenseMatrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(eval_alt(AltMultiMap(AltMatrix::from_linear(a)), {{1, -1}}), (Vector{-1, -1}));
}

TEST(TensorEval, Examples) {
  MultilinearTensor t(1, 2, 2);
  const std::array<int, 2> d0{0, 0}, d1{1, 1};
  t.at(0, d0) = 2;
  t.at(0, d1) = 5;
  EXPECT_EQ(tensor_eval(t, {{1, 3}, {4, 2}}), (Vector{2 * 1 * 4 + 5 * 3 * 2}));
  EXPECT_EQ(tensor_eval(MultilinearTensor(2, 2, 2), {{1, 3}, {4, 2}}), (Vector{0, 0}));
  MultilinearTensor lin(2, 2, 1);
  const std::array<int, 1> i0{0}, i1{1};
  lin.at(0, i1) = 1;
  lin.at(1, i0) = -1;
  EXPECT_EQ(tensor_eval(lin, {{7, 9}}), (Vector{9, -7}));
  EXPECT_THROW(tensor_eval(lin, {{7}}), DimensionError);
}

TEST(ProductSym, ScalarChain) {
  const Rational a(3), b(Rational(-2, 5));
  const BilinearMap c = BilinearMap::from_coefficients(1, 1, 1, {1});
  const SymMultiMap r = product_sym(sym_scalar(1, a), sym_scalar(1, b), c);
  EXPECT_EQ(r.arity(), 2);
  const Rational x1(7), x2(Rational(1, 3));
  EXPECT_EQ(eval_sym(r, {{x1}, {x2}}), (Vector{a * b * x1 * x2}));
}

TEST(ProductSym, ZeroFactor) {
  const BilinearMap c = BilinearMap::from_coefficients(1, 1, 1, {4});
  EXPECT_TRUE(product_sym(sym_scalar(1, 0), sym_scalar(2, 5), c).matrix().is_zero());
}

TEST(ProductSym, ChainMismatchThrows) {
  const BilinearMap c = BilinearMap::from_coefficients(1, 2, 1, {1, 1});
  EXPECT_THROW(product_sym(sym_scalar(1, 1), sym_scalar(1, 1), c), DimensionError);
}

TEST(ProductAlt, TwoShuffles) {
  const DenseMatrix a{{1, 2}}, b{{-1, 3}};
  const Rational k(5);
  const BilinearMap c = BilinearMap::from_coefficients(1, 1, 1, {k});
  const AltMultiMap r = product_alt(AltMultiMap(AltMatrix::from_linear(a)), AltMultiMap(AltMatrix::from_linear(b)), c);
  const Vector x1{2, 1}, x2{Rational(1, 2), -4};
  auto dot = [](const DenseMatrix& m, const Vector& x) { return m(0, 0) * x[0] + m(0, 1) * x[1]; };
  const Rational expected = k * dot(a, x1) * dot(b, x2) - k * dot(a, x2) * dot(b, x1);
  EXPECT_EQ(eval_alt(r, {x1, x2}), (Vector{expected}));
}

TEST(ProductAlt, ZeroFactor) {
  const BilinearMap c = BilinearMap::from_coefficients(1, 1, 1, {1});
  const AltMultiMap z(AltMatrix(1, 2, 1, 1));
  const AltMultiMap a(AltMatrix::from_linear(DenseMatrix{{1, 1}}));
  EXPECT_TRUE(product_alt(z, a, c).matrix().is_zero());
}

TEST(Bilinear, PaddingIdentity) {
  const BilinearMap c = BilinearMap::from_coefficients(2, 1, 2, {1, 2, 3, -1});
  const Vector x{3}, y{1, -2};
  const Vector expected{1 * 3 * 1 + 2 * 3 * -2, 3 * 3 * 1 + -1 * 3 * -2};
  EXPECT_EQ(c(x, y), expected);
  const SymMatrix padded = odot(SymMatrix::column({3, 0, 0}), SymMatrix::column({0, 1, -2}));
  EXPECT_EQ((c.matrix() * padded).to_vector(), expected);
}

TEST(SymmetricPairing, ShortcutMatchesGeneralPath) {
  // C(x, y) = x1 y1 + 3 (x1 y2 + x2 y1) - x2 y2 written as C (x (.) y) / 2.
  SymMatrix cs(1, 2, 1, 2);
  cs.set({1}, {2, 0}, 2);
  cs.set({1}, {1, 1}, 6);
  cs.set({1}, {0, 2}, -2);
  const BilinearMap general = bilinear_from_symmetric_pairing(cs);
  EXPECT_EQ(general({1, 0}, {1, 0}), (Vector{1}));
  EXPECT_EQ(general({1, 0}, {0, 1}), (Vector{3}));
  EXPECT_EQ(general({0, 1}, {0, 1}), (Vector{-1}));

  const SymMultiMap a(SymMatrix::from_linear(DenseMatrix{{1, 2}, {0, 1}}));
  SymMatrix bm(2, 2, 1, 2);
  bm.set({1, 0}, {1, 1}, 1);
  bm.set({0, 1}, {2, 0}, Rational(1, 2));
  const SymMultiMap b(bm);
  EXPECT_EQ(product_sym_symmetric_pairing(a, b, cs), product_sym(a, b, general));
}

TEST(AntisymmetricPairing, ShortcutMatchesGeneralPath) {
  AltMatrix ca(1, 2, 1, 2);
  ca.set(StrictIndex({1}, 1), StrictIndex({1, 2}, 2), 3);
  const BilinearMap general = bilinear_from_antisymmetric_pairing(ca);
  EXPECT_EQ(general({1, 0}, {0, 1}), (Vector{3}));
  EXPECT_EQ(general({0, 1}, {1, 0}), (Vector{-3}));
  EXPECT_EQ(general({1, 1}, {1, 1}), (Vector{0}));

  const AltMultiMap a(AltMatrix::from_linear(DenseMatrix{{1, 2}, {0, 1}}));
  const AltMultiMap b(AltMatrix::from_linear(DenseMatrix{{-1, 1}, {2, 5}}));
  EXPECT_EQ(product_alt_antisymmetric_pairing(a, b, ca), product_alt(a, b, general));
}
