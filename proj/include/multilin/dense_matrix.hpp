#pragma once

/**
 * @file dense_matrix.hpp
 * @brief Exact dense matrices over Rational: products, Bareiss determinant,
 * rank, inverse and triangular spectra.
 */

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "multilin/errors.hpp"
#include "multilin/rational.hpp"

namespace multilin {

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_) throw DimensionError("entry count does not match rows*cols");
  }

  /// Row-major nested initializer, for tests and fixtures.
  DenseMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static DenseMatrix diagonal(const std::vector<Rational>& d) {
    DenseMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<Rational>& entries() const { return a_; }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x.is_zero(); });
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  DenseMatrix& operator+=(const DenseMatrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  DenseMatrix& operator-=(const DenseMatrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  DenseMatrix& operator*=(const Rational& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(DenseMatrix a, const Rational& s) { return a *= s; }
  friend DenseMatrix operator*(const Rational& s, DenseMatrix a) { return a *= s; }
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) { return matmul(a, b); }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

  friend DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionError("matmul: " + a.shape() + " times " + b.shape());
    }
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void check_same_shape(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("shape mismatch: " + shape() + " vs " + o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

/// Fraction-free (Bareiss) elimination. Entries are scaled to integers first
/// so every intermediate division is exact.
inline Rational det(const DenseMatrix& a) {
  if (!a.is_square()) throw DimensionError("det of non-square " + a.shape() + " matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;

  Integer scale = 1;
  for (const auto& x : a.entries()) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.denominator().get_mpz_t());
  }
  std::vector<Integer> m(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    m[i] = a.entries()[i].numerator() * (scale / a.entries()[i].denominator());
  }
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return m[i * n + j]; };

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Integer scale_n;
  mpz_pow_ui(scale_n.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(sign * at(n - 1, n - 1), scale_n);
}

namespace detail {

/// In-place reduced row echelon form; returns the rank.
inline std::size_t row_reduce(DenseMatrix& m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
    }
    Rational inv = Rational(1) / m(rank, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(rank, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || m(i, col).is_zero()) continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

inline std::size_t rank(DenseMatrix a) { return detail::row_reduce(a); }

inline DenseMatrix inverse(const DenseMatrix& a) {
  if (!a.is_square()) throw DimensionError("inverse of non-square " + a.shape() + " matrix");
  const std::size_t n = a.rows();
  DenseMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  // Pivoting only inside the left block keeps the right block intact.
  std::size_t r = 0;
  for (std::size_t col = 0; col < n; ++col, ++r) {
    std::size_t pivot = r;
    while (pivot < n && aug(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw SingularMatrixError("matrix is singular");
    if (pivot != r) {
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(pivot, j), aug(r, j));
    }
    Rational inv = Rational(1) / aug(r, col);
    for (std::size_t j = 0; j < 2 * n; ++j) aug(r, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || aug(i, col).is_zero()) continue;
      Rational f = aug(i, col);
      for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(r, j);
    }
  }
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

inline bool is_upper_triangular(const DenseMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < std::min(i, a.cols()); ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}

/// Eigenvalues of a square upper-triangular matrix with multiplicity, sorted
/// ascending.
inline std::vector<Rational> triangular_spectrum(const DenseMatrix& a) {
  if (!a.is_square()) throw DimensionError("spectrum of non-square matrix");
  if (!is_upper_triangular(a)) throw DomainError("triangular_spectrum requires an upper-triangular matrix");
  std::vector<Rational> d;
  d.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) d.push_back(a(i, i));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace multilin
