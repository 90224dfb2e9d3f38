#pragma once

/**
 * @file sym_matrix.hpp
 * @brief Matrices M_{n,n'}(p,p') indexed by multi-indices and the symmetric
 * product that makes their direct sum a commutative graded algebra.
 *
 * Rows are the weight-p indices of I_n, columns the weight-p' indices of
 * I_{n'}, both in graded rank order; the flat DenseMatrix in that layout is
 * the "ordinary" matrix and ordinary products go through it.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "multilin/dense_matrix.hpp"
#include "multilin/multiindex.hpp"
#include "multilin/rational.hpp"
#include "multilin/shape.hpp"

namespace multilin {

using Vector = std::vector<Rational>;

class SymMatrix {
 public:
  SymMatrix() : SymMatrix(0, 0, 0, 0) {}

  /// The zero matrix of M_{n,n'}(p,p').
  SymMatrix(int n, int n_prime, int p, int p_prime)
      : n_(n), n_prime_(n_prime), p_(p), p_prime_(p_prime), flat_(stratum_size(n, p), stratum_size(n_prime, p_prime)) {
    if (n < 0 || n_prime < 0 || p < 0 || p_prime < 0) throw DomainError("negative SymMatrix dimension or weight");
  }

  SymMatrix(int n, int n_prime, int p, int p_prime, DenseMatrix flat) : SymMatrix(n, n_prime, p, p_prime) {
    if (flat.rows() != flat_.rows() || flat.cols() != flat_.cols()) {
      throw DimensionError("flat matrix " + flat.shape() + " does not fit M_{" + std::to_string(n) + "," +
                           std::to_string(n_prime) + "}(" + std::to_string(p) + "," + std::to_string(p_prime) +
                           ") of flat shape " + flat_.shape());
    }
    flat_ = std::move(flat);
  }

  /// The unit of the graded algebra: weight (0,0), single entry 1.
  static SymMatrix unit(int n = 0, int n_prime = 0) {
    SymMatrix u(n, n_prime, 0, 0);
    u.flat_(0, 0) = 1;
    return u;
  }

  /// Column vector v in M_{n,0}(1,0).
  static SymMatrix column(const Vector& v) {
    return SymMatrix(static_cast<int>(v.size()), 0, 1, 0, DenseMatrix(v.size(), 1, v));
  }

  /// Row vector h in M_{0,n}(0,1).
  static SymMatrix row(const Vector& h) {
    return SymMatrix(0, static_cast<int>(h.size()), 0, 1, DenseMatrix(1, h.size(), h));
  }

  /// An ordinary r x c matrix viewed as an element of M_{r,c}(1,1).
  static SymMatrix from_linear(const DenseMatrix& a) {
    return SymMatrix(static_cast<int>(a.rows()), static_cast<int>(a.cols()), 1, 1, a);
  }

  int n() const { return n_; }
  int n_prime() const { return n_prime_; }
  int p() const { return p_; }
  int p_prime() const { return p_prime_; }
  std::size_t rows() const { return flat_.rows(); }
  std::size_t cols() const { return flat_.cols(); }
  const DenseMatrix& flat() const { return flat_; }
  bool is_zero() const { return flat_.is_zero(); }

  const Rational& at(const MultiIndex& row, const MultiIndex& col) const {
    return flat_(row_rank(row), col_rank(col));
  }
  void set(const MultiIndex& row, const MultiIndex& col, Rational value) {
    flat_(row_rank(row), col_rank(col)) = std::move(value);
  }

  /// Entries of a column vector (p' = 0) or row vector (p = 0) in rank order.
  Vector to_vector() const { return flat_.entries(); }

  /// Same entries with a different base dimension on zero-weight sides.
  SymMatrix rebased(int n, int n_prime) const {
    if (!detail::same_base(n_, n, p_) || !detail::same_base(n_prime_, n_prime, p_prime_)) {
      throw DimensionError("rebasing changes a side of positive weight");
    }
    SymMatrix r = *this;
    r.n_ = n;
    r.n_prime_ = n_prime;
    return r;
  }

  SymMatrix& operator+=(const SymMatrix& o) {
    check_same_space(o);
    flat_ += o.flat_;
    return *this;
  }
  SymMatrix& operator-=(const SymMatrix& o) {
    check_same_space(o);
    flat_ -= o.flat_;
    return *this;
  }
  SymMatrix& operator*=(const Rational& s) {
    flat_ *= s;
    return *this;
  }
  SymMatrix& operator/=(const Rational& s) { return *this *= Rational(1) / s; }

  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
  friend SymMatrix operator*(SymMatrix a, const Rational& s) { return a *= s; }
  friend SymMatrix operator*(const Rational& s, SymMatrix a) { return a *= s; }
  friend SymMatrix operator/(SymMatrix a, const Rational& s) { return a /= s; }

  /// Ordinary (flat) product M_{n,n'}(p,p') x M_{n',n''}(p',q') -> M_{n,n''}(p,q').
  friend SymMatrix operator*(const SymMatrix& a, const SymMatrix& b) {
    if (a.p_prime_ != b.p_) {
      throw DimensionError("flat product: column weight " + std::to_string(a.p_prime_) + " vs row weight " +
                           std::to_string(b.p_));
    }
    detail::resolve_base(a.n_prime_, a.p_prime_, b.n_, b.p_, "flat product inner");
    return SymMatrix(a.n_, b.n_prime_, a.p_, b.p_prime_, a.flat_ * b.flat_);
  }

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.p_ == b.p_ && a.p_prime_ == b.p_prime_ && detail::same_base(a.n_, b.n_, a.p_) &&
           detail::same_base(a.n_prime_, b.n_prime_, a.p_prime_) && a.flat_ == b.flat_;
  }

  std::string space() const {
    return "M_{" + std::to_string(n_) + "," + std::to_string(n_prime_) + "}(" + std::to_string(p_) + "," +
           std::to_string(p_prime_) + ")";
  }

 private:
  std::size_t row_rank(const MultiIndex& a) const {
    if (a.size() != n_ || a.weight() != p_) throw DomainError("row index " + a.str() + " not in " + space());
    return rank_index(a);
  }
  std::size_t col_rank(const MultiIndex& a) const {
    if (a.size() != n_prime_ || a.weight() != p_prime_) {
      throw DomainError("column index " + a.str() + " not in " + space());
    }
    return rank_index(a);
  }
  void check_same_space(const SymMatrix& o) const {
    if (p_ != o.p_ || p_prime_ != o.p_prime_ || !detail::same_base(n_, o.n_, p_) ||
        !detail::same_base(n_prime_, o.n_prime_, p_prime_)) {
      throw DimensionError("adding " + space() + " and " + o.space());
    }
  }

  int n_, n_prime_, p_, p_prime_;
  DenseMatrix flat_;
};

/// The symmetric product: for |alpha| = p+q, |alpha'| = p'+q',
///   C[alpha, alpha'] = sum binom(alpha', beta') A[beta, beta'] B[alpha-beta, alpha'-beta']
/// over beta << alpha of weight p and beta' << alpha' of weight p'.
inline SymMatrix odot(const SymMatrix& a, const SymMatrix& b) {
  const int n = detail::resolve_base(a.n(), a.p(), b.n(), b.p(), "odot row");
  const int np = detail::resolve_base(a.n_prime(), a.p_prime(), b.n_prime(), b.p_prime(), "odot column");
  SymMatrix c(n, np, a.p() + b.p(), a.p_prime() + b.p_prime());

  const auto rows_a = enumerate_stratum(n, a.p());
  const auto rows_b = enumerate_stratum(n, b.p());
  const auto cols_a = enumerate_stratum(np, a.p_prime());
  const auto cols_b = enumerate_stratum(np, b.p_prime());

  // Enumerating the pairs (beta, alpha - beta) is the same as enumerating all
  // pairs of an A index with a B index.
  std::vector<std::size_t> row_sum(rows_a.size() * rows_b.size());
  for (std::size_t i = 0; i < rows_a.size(); ++i)
    for (std::size_t k = 0; k < rows_b.size(); ++k) row_sum[i * rows_b.size() + k] = rank_index(rows_a[i] + rows_b[k]);
  std::vector<std::size_t> col_sum(cols_a.size() * cols_b.size());
  std::vector<Rational> col_coef(cols_a.size() * cols_b.size());
  for (std::size_t j = 0; j < cols_a.size(); ++j) {
    for (std::size_t l = 0; l < cols_b.size(); ++l) {
      auto s = cols_a[j] + cols_b[l];
      col_sum[j * cols_b.size() + l] = rank_index(s);
      col_coef[j * cols_b.size() + l] = Rational(multi_binomial(s, cols_a[j]));
    }
  }

  DenseMatrix out(c.rows(), c.cols());
  const auto& fa = a.flat();
  const auto& fb = b.flat();
  for (std::size_t i = 0; i < rows_a.size(); ++i) {
    for (std::size_t j = 0; j < cols_a.size(); ++j) {
      const Rational& aij = fa(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < rows_b.size(); ++k) {
        for (std::size_t l = 0; l < cols_b.size(); ++l) {
          const Rational& bkl = fb(k, l);
          if (bkl.is_zero()) continue;
          const std::size_t jl = j * cols_b.size() + l;
          out(row_sum[i * rows_b.size() + k], col_sum[jl]) += col_coef[jl] * aij * bkl;
        }
      }
    }
  }
  return SymMatrix(n, np, c.p(), c.p_prime(), std::move(out));
}

/// A^(m); A^(0) is the unit.
inline SymMatrix odot_power(const SymMatrix& a, int m) {
  if (m < 0) throw DomainError("negative odot power");
  SymMatrix r = SymMatrix::unit(a.n(), a.n_prime());
  for (int i = 0; i < m; ++i) r = odot(r, a);
  return r;
}

/// The normalized power A^(k) / k!.
inline SymMatrix sym_power(const SymMatrix& a, int k) {
  return odot_power(a, k) / Rational(factorial(k));
}

/// v^1 (.) v^2 (.) ... for column vectors; the empty product is the unit.
inline SymMatrix odot_all(const std::vector<SymMatrix>& factors) {
  if (factors.empty()) return SymMatrix::unit();
  SymMatrix r = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) r = odot(r, factors[i]);
  return r;
}

/// Embeds the rows of A (row weight 1) at coordinates offset.. of a
/// `total`-dimensional codomain, zero elsewhere.
inline SymMatrix padded_embed_rows(const SymMatrix& a, int offset, int total) {
  if (a.p() != 1) throw DomainError("padded_embed_rows requires row weight 1");
  if (offset < 0 || offset + a.n() > total) throw DomainError("padding offset out of range");
  DenseMatrix flat(static_cast<std::size_t>(total), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) flat(static_cast<std::size_t>(offset) + i, j) = a.flat()(i, j);
  return SymMatrix(total, a.n_prime(), 1, a.p_prime(), std::move(flat));
}

}  // namespace multilin
