#pragma once

/**
 * @file alt_matrix.hpp
 * @brief Matrices over strictly increasing index tuples, the signed
 * double-shuffle (wedge) product, wedge powers and compound matrices.
 *
 * Rows are J_n(p) and columns J_{n'}(p'), both in co-lexicographic rank
 * order. A^{wedge k}/k! is the k-th compound matrix of an ordinary matrix A.
 */

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "multilin/dense_matrix.hpp"
#include "multilin/multiindex.hpp"
#include "multilin/rational.hpp"
#include "multilin/shape.hpp"

namespace multilin {

class AltMatrix {
 public:
  AltMatrix() : AltMatrix(0, 0, 0, 0) {}

  AltMatrix(int n, int n_prime, int p, int p_prime)
      : n_(n), n_prime_(n_prime), p_(p), p_prime_(p_prime), flat_(choose(n, p), choose(n_prime, p_prime)) {
    if (n < 0 || n_prime < 0 || p < 0 || p_prime < 0) throw DomainError("negative AltMatrix dimension or weight");
  }

  AltMatrix(int n, int n_prime, int p, int p_prime, DenseMatrix flat) : AltMatrix(n, n_prime, p, p_prime) {
    if (flat.rows() != flat_.rows() || flat.cols() != flat_.cols()) {
      throw DimensionError("flat matrix " + flat.shape() + " does not fit " + space());
    }
    flat_ = std::move(flat);
  }

  static AltMatrix unit(int n = 0, int n_prime = 0) {
    AltMatrix u(n, n_prime, 0, 0);
    u.flat_(0, 0) = 1;
    return u;
  }

  static AltMatrix column(const std::vector<Rational>& v) {
    return AltMatrix(static_cast<int>(v.size()), 0, 1, 0, DenseMatrix(v.size(), 1, v));
  }

  static AltMatrix from_linear(const DenseMatrix& a) {
    return AltMatrix(static_cast<int>(a.rows()), static_cast<int>(a.cols()), 1, 1, a);
  }

  int n() const { return n_; }
  int n_prime() const { return n_prime_; }
  int p() const { return p_; }
  int p_prime() const { return p_prime_; }
  std::size_t rows() const { return flat_.rows(); }
  std::size_t cols() const { return flat_.cols(); }
  const DenseMatrix& flat() const { return flat_; }
  bool is_zero() const { return flat_.is_zero(); }
  std::vector<Rational> to_vector() const { return flat_.entries(); }

  const Rational& at(const StrictIndex& row, const StrictIndex& col) const {
    return flat_(row_rank(row), col_rank(col));
  }
  void set(const StrictIndex& row, const StrictIndex& col, Rational v) {
    flat_(row_rank(row), col_rank(col)) = std::move(v);
  }

  AltMatrix rebased(int n, int n_prime) const {
    if (!detail::same_base(n_, n, p_) || !detail::same_base(n_prime_, n_prime, p_prime_)) {
      throw DimensionError("rebasing changes a side of positive weight");
    }
    AltMatrix r = *this;
    r.n_ = n;
    r.n_prime_ = n_prime;
    return r;
  }

  AltMatrix& operator+=(const AltMatrix& o) {
    check_same_space(o);
    flat_ += o.flat_;
    return *this;
  }
  AltMatrix& operator-=(const AltMatrix& o) {
    check_same_space(o);
    flat_ -= o.flat_;
    return *this;
  }
  AltMatrix& operator*=(const Rational& s) {
    flat_ *= s;
    return *this;
  }

  friend AltMatrix operator+(AltMatrix a, const AltMatrix& b) { return a += b; }
  friend AltMatrix operator-(AltMatrix a, const AltMatrix& b) { return a -= b; }
  friend AltMatrix operator*(AltMatrix a, const Rational& s) { return a *= s; }
  friend AltMatrix operator*(const Rational& s, AltMatrix a) { return a *= s; }
  friend AltMatrix operator/(AltMatrix a, const Rational& s) { return a *= Rational(1) / s; }

  friend AltMatrix operator*(const AltMatrix& a, const AltMatrix& b) {
    if (a.p_prime_ != b.p_) throw DimensionError("flat product: column weight does not match row weight");
    detail::resolve_base(a.n_prime_, a.p_prime_, b.n_, b.p_, "flat product inner");
    return AltMatrix(a.n_, b.n_prime_, a.p_, b.p_prime_, a.flat_ * b.flat_);
  }

  friend bool operator==(const AltMatrix& a, const AltMatrix& b) {
    return a.p_ == b.p_ && a.p_prime_ == b.p_prime_ && detail::same_base(a.n_, b.n_, a.p_) &&
           detail::same_base(a.n_prime_, b.n_prime_, a.p_prime_) && a.flat_ == b.flat_;
  }

  std::string space() const {
    return "AltM_{" + std::to_string(n_) + "," + std::to_string(n_prime_) + "}(" + std::to_string(p_) + "," +
           std::to_string(p_prime_) + ")";
  }

 private:
  std::size_t row_rank(const StrictIndex& a) const {
    if (a.size() != p_ || (p_ > 0 && a[p_ - 1] > n_)) throw DomainError("row index not in " + space());
    return rank_strict(a);
  }
  std::size_t col_rank(const StrictIndex& a) const {
    if (a.size() != p_prime_ || (p_prime_ > 0 && a[p_prime_ - 1] > n_prime_)) {
      throw DomainError("column index not in " + space());
    }
    return rank_strict(a);
  }
  void check_same_space(const AltMatrix& o) const {
    if (p_ != o.p_ || p_prime_ != o.p_prime_ || !detail::same_base(n_, o.n_, p_) ||
        !detail::same_base(n_prime_, o.n_prime_, p_prime_)) {
      throw DimensionError("adding " + space() + " and " + o.space());
    }
  }

  int n_, n_prime_, p_, p_prime_;
  DenseMatrix flat_;
};

namespace detail {

struct ShuffleTerm {
  int sign;
  std::size_t left;   // rank of the first-block sub-tuple
  std::size_t right;  // rank of the second-block sub-tuple
};

/// For each alpha in J_dim(p+q), the signed splits of alpha by S_{[p]+[q]}.
inline std::vector<std::vector<ShuffleTerm>> shuffle_splits(int dim, int p, int q) {
  const auto all = enumerate_strict(dim, p + q);
  const auto sh = shuffles(p, q);
  std::vector<std::vector<ShuffleTerm>> out(all.size());
  std::vector<int> left(static_cast<std::size_t>(p)), right(static_cast<std::size_t>(q));
  for (std::size_t r = 0; r < all.size(); ++r) {
    for (const auto& s : sh) {
      for (int i = 1; i <= p; ++i) left[static_cast<std::size_t>(i - 1)] = all[r][s(i) - 1];
      for (int i = 1; i <= q; ++i) right[static_cast<std::size_t>(i - 1)] = all[r][s(p + i) - 1];
      out[r].push_back({s.sign(), rank_strict(left), rank_strict(right)});
    }
  }
  return out;
}

}  // namespace detail

/// C[alpha, alpha'] = sum eps(s) eps(s') A[alpha_s(1..p), alpha'_s'(1..p')]
///                                         B[alpha_s(p+1..), alpha'_s'(p'+1..)]
/// over s in S_{[p]+[q]}, s' in S_{[p']+[q']}.
inline AltMatrix wedge(const AltMatrix& a, const AltMatrix& b) {
  const int n = detail::resolve_base(a.n(), a.p(), b.n(), b.p(), "wedge row");
  const int np = detail::resolve_base(a.n_prime(), a.p_prime(), b.n_prime(), b.p_prime(), "wedge column");
  const auto row_terms = detail::shuffle_splits(n, a.p(), b.p());
  const auto col_terms = detail::shuffle_splits(np, a.p_prime(), b.p_prime());
  DenseMatrix out(row_terms.size(), col_terms.size());
  const auto& fa = a.flat();
  const auto& fb = b.flat();
  for (std::size_t r = 0; r < row_terms.size(); ++r) {
    for (std::size_t c = 0; c < col_terms.size(); ++c) {
      Rational acc;
      for (const auto& rt : row_terms[r]) {
        for (const auto& ct : col_terms[c]) {
          const Rational& x = fa(rt.left, ct.left);
          if (x.is_zero()) continue;
          Rational term = x * fb(rt.right, ct.right);
          if (rt.sign * ct.sign < 0) {
            acc -= term;
          } else {
            acc += term;
          }
        }
      }
      out(r, c) = std::move(acc);
    }
  }
  return AltMatrix(n, np, a.p() + b.p(), a.p_prime() + b.p_prime(), std::move(out));
}

/// Left fold of wedge; the empty product is the unit.
inline AltMatrix multi_wedge(const std::vector<AltMatrix>& factors) {
  if (factors.empty()) return AltMatrix::unit();
  AltMatrix r = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) r = wedge(r, factors[i]);
  return r;
}

/// A^{wedge k} for A of weight (1,1); k = 0 gives the unit.
inline AltMatrix wedge_power(const AltMatrix& a, int k) {
  if (a.p() != 1 || a.p_prime() != 1) throw DimensionError("wedge_power expects a weight-(1,1) matrix");
  if (k < 0) throw DomainError("negative wedge power");
  AltMatrix r = AltMatrix::unit(a.n(), a.n_prime());
  for (int i = 0; i < k; ++i) r = wedge(r, a);
  return r;
}

/// The k-th compound matrix A^{wedge k}/k!: entries are k x k minors.
inline AltMatrix compound(const DenseMatrix& a, int k) {
  return wedge_power(AltMatrix::from_linear(a), k) / Rational(factorial(k));
}

/// A' = T^{-1} A T^{wedge p}/p! for A of weight (1,p) on an n-dimensional space.
inline AltMatrix gl_action_antisym(const AltMatrix& a, const DenseMatrix& t, int p_arity) {
  if (a.p() != 1 || a.p_prime() != p_arity) throw DimensionError("gl_action_antisym expects A of weight (1,p)");
  if (!t.is_square() || static_cast<int>(t.rows()) != a.n() || a.n() != a.n_prime()) {
    throw DimensionError("T must be square of the dimension of A's space");
  }
  return AltMatrix::from_linear(inverse(t)) * a * compound(t, p_arity);
}

inline AltMatrix padded_embed_rows(const AltMatrix& a, int offset, int total) {
  if (a.p() != 1) throw DomainError("padded_embed_rows requires row weight 1");
  if (offset < 0 || offset + a.n() > total) throw DomainError("padding offset out of range");
  DenseMatrix flat(static_cast<std::size_t>(total), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) flat(static_cast<std::size_t>(offset) + i, j) = a.flat()(i, j);
  return AltMatrix(total, a.n_prime(), 1, a.p_prime(), std::move(flat));
}

}  // namespace multilin
