#pragma once

/**
 * @file polymap.hpp
 * @brief Block matrices, the truncated Exp operator, and polynomial maps
 * phi(x) = M_phi Exp(x) with composition and changes of variables.
 *
 * All Exp computations carry explicit (row, column) weight bounds. Blocks
 * outside the bounds are dropped as soon as they appear; weights never
 * decrease under the symmetric product, so dropped blocks cannot feed back
 * into kept ones and every kept block is exact.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "multilin/dense_matrix.hpp"
#include "multilin/sym_matrix.hpp"

namespace multilin {

class BlockMatrix {
 public:
  using Key = std::pair<int, int>;

  BlockMatrix(int n = 0, int n_prime = 0) : n_(n), n_prime_(n_prime) {}  // NOLINT(google-explicit-constructor)

  /// E: the single block (0,0) = 1.
  static BlockMatrix unit(int n, int n_prime) {
    BlockMatrix e(n, n_prime);
    e.set_block(SymMatrix::unit(n, n_prime));
    return e;
  }

  int n() const { return n_; }
  int n_prime() const { return n_prime_; }
  const std::map<Key, SymMatrix>& blocks() const { return blocks_; }

  /// Block (p, p'); absent blocks are zero.
  SymMatrix block(int p, int p_prime) const {
    auto it = blocks_.find({p, p_prime});
    return it == blocks_.end() ? SymMatrix(n_, n_prime_, p, p_prime) : it->second;
  }

  void set_block(const SymMatrix& b) {
    SymMatrix r = b.rebased(n_, n_prime_);
    if (r.is_zero()) {
      blocks_.erase({r.p(), r.p_prime()});
    } else {
      blocks_.insert_or_assign({r.p(), r.p_prime()}, std::move(r));
    }
  }

  void add_to_block(const SymMatrix& b) {
    auto it = blocks_.find({b.p(), b.p_prime()});
    if (it == blocks_.end()) {
      set_block(b);
    } else {
      set_block(it->second + b.rebased(n_, n_prime_));
    }
  }

  BlockMatrix& operator*=(const Rational& s) {
    for (auto& [k, b] : blocks_) b *= s;
    if (s.is_zero()) blocks_.clear();
    return *this;
  }

  BlockMatrix& operator+=(const BlockMatrix& o) {
    for (const auto& [k, b] : o.blocks_) add_to_block(b);
    return *this;
  }

  friend bool operator==(const BlockMatrix& a, const BlockMatrix& b) { return a.blocks_ == b.blocks_; }

  /// Ordinary product of block matrices: (AB)(p,r) = sum_q A(p,q) B(q,r).
  friend BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b) {
    BlockMatrix c(a.n_, b.n_prime_);
    for (const auto& [ka, ba] : a.blocks_) {
      for (const auto& [kb, bb] : b.blocks_) {
        if (ka.second != kb.first) continue;
        if (ka.second > 0 && a.n_prime_ != b.n_) throw DimensionError("block product inner dimension mismatch");
        c.add_to_block(ba * bb);
      }
    }
    return c;
  }

 private:
  int n_, n_prime_;
  std::map<Key, SymMatrix> blocks_;
};

/// Blockwise symmetric product, keeping blocks with row weight <= max_row and
/// column weight <= max_col.
inline BlockMatrix odot(const BlockMatrix& a, const BlockMatrix& b, int max_row, int max_col) {
  const int n = a.blocks().empty() ? b.n() : a.n();
  const int np = a.blocks().empty() ? b.n_prime() : a.n_prime();
  if (!a.blocks().empty() && !b.blocks().empty() && (a.n() != b.n() || a.n_prime() != b.n_prime())) {
    throw DimensionError("block odot base dimension mismatch");
  }
  BlockMatrix c(n, np);
  for (const auto& [ka, ba] : a.blocks()) {
    for (const auto& [kb, bb] : b.blocks()) {
      if (ka.first + kb.first > max_row || ka.second + kb.second > max_col) continue;
      c.add_to_block(odot(ba, bb));
    }
  }
  return c;
}

/// Exp(M) = E + M + M^(2)/2! + ... restricted to blocks (p, p') with
/// p <= max_row, p' <= max_col. M must have a zero (0,0) block, otherwise the
/// series does not terminate under truncation.
inline BlockMatrix exp_block(const BlockMatrix& m, int max_row, int max_col) {
  if (max_row < 0 || max_col < 0) throw DomainError("negative Exp truncation bound");
  if (m.blocks().count({0, 0})) {
    throw DomainError("Exp of a block matrix with a nonzero (0,0) block does not terminate under truncation");
  }
  BlockMatrix result = BlockMatrix::unit(m.n(), m.n_prime());
  BlockMatrix term = result;
  for (int i = 1;; ++i) {
    term = odot(term, m, max_row, max_col);
    if (term.blocks().empty()) break;
    term *= Rational(1, i);
    result += term;
  }
  return result;
}

// ---------------------------------------------------------------------------

/// A polynomial map R^{n_in} -> R^{n_out} given by its blocks M(1,c),
/// phi(x) = sum_c M(1,c) x^(c) / c!.
class PolyMap {
 public:
  PolyMap(int n_in = 0, int n_out = 0) : n_in_(n_in), n_out_(n_out) {  // NOLINT(google-explicit-constructor)
    blocks_.emplace_back(n_out, n_in, 1, 0);
  }

  PolyMap(int n_in, int n_out, const std::vector<SymMatrix>& blocks) : PolyMap(n_in, n_out) {
    for (std::size_t c = 0; c < blocks.size(); ++c) {
      if (blocks[c].p_prime() != static_cast<int>(c)) throw DimensionError("PolyMap block order does not match weight");
      set_block(blocks[c]);
    }
  }

  static PolyMap identity(int n) { return linear(DenseMatrix::identity(static_cast<std::size_t>(n))); }

  static PolyMap linear(const DenseMatrix& a) {
    PolyMap m(static_cast<int>(a.cols()), static_cast<int>(a.rows()));
    m.set_block(SymMatrix::from_linear(a));
    return m;
  }

  /// x -> A x + b.
  static PolyMap affine(const DenseMatrix& a, const Vector& b) {
    PolyMap m = linear(a);
    if (b.size() != a.rows()) throw DimensionError("affine offset length does not match rows");
    m.set_block(SymMatrix(static_cast<int>(a.rows()), static_cast<int>(a.cols()), 1, 0, DenseMatrix(b.size(), 1, b)));
    return m;
  }

  int n_in() const { return n_in_; }
  int n_out() const { return n_out_; }
  /// Largest c with a nonzero block M(1,c); the zero map has degree 0.
  int degree() const { return static_cast<int>(blocks_.size()) - 1; }

  SymMatrix block(int c) const {
    if (c < 0) throw DomainError("negative block weight");
    if (c < static_cast<int>(blocks_.size())) return blocks_[static_cast<std::size_t>(c)];
    return SymMatrix(n_out_, n_in_, 1, c);
  }
  const std::vector<SymMatrix>& blocks() const { return blocks_; }

  void set_block(const SymMatrix& b) {
    if (b.p() != 1) throw DimensionError("PolyMap blocks have row weight 1");
    if (b.n() != n_out_ || (b.p_prime() > 0 && b.n_prime() != n_in_)) {
      throw DimensionError("PolyMap block " + b.space() + " does not match n_out=" + std::to_string(n_out_) +
                           ", n_in=" + std::to_string(n_in_));
    }
    const auto c = static_cast<std::size_t>(b.p_prime());
    while (blocks_.size() <= c) blocks_.emplace_back(n_out_, n_in_, 1, static_cast<int>(blocks_.size()));
    blocks_[c] = b.rebased(n_out_, n_in_);
    while (blocks_.size() > 1 && blocks_.back().is_zero()) blocks_.pop_back();
  }

  BlockMatrix to_block_matrix() const {
    BlockMatrix m(n_out_, n_in_);
    for (const auto& b : blocks_) m.set_block(b);
    return m;
  }

  static PolyMap from_block_matrix(const BlockMatrix& m) {
    PolyMap r(m.n_prime(), m.n());
    for (const auto& [k, b] : m.blocks()) {
      if (k.first != 1) throw DomainError("block matrix has a block outside row weight 1");
      r.set_block(b);
    }
    return r;
  }

  friend bool operator==(const PolyMap& a, const PolyMap& b) {
    return a.n_in_ == b.n_in_ && a.n_out_ == b.n_out_ && a.blocks_ == b.blocks_;
  }

 private:
  int n_in_, n_out_;
  std::vector<SymMatrix> blocks_;
};

/// Exp(x) as a block column: blocks (p, 0) = x^(p)/p! for p <= max_weight.
inline BlockMatrix exp_vector(const Vector& x, int max_weight) {
  BlockMatrix m(static_cast<int>(x.size()), 0);
  m.set_block(SymMatrix::column(x));
  return exp_block(m, max_weight, 0);
}

inline Vector eval(const PolyMap& phi, const Vector& x) {
  if (static_cast<int>(x.size()) != phi.n_in()) {
    throw DimensionError("eval: point has length " + std::to_string(x.size()) + ", map expects " +
                         std::to_string(phi.n_in()));
  }
  const SymMatrix xc = SymMatrix::column(x);
  SymMatrix power = SymMatrix::unit(phi.n_in(), 0);
  SymMatrix sum(phi.n_out(), 0, 1, 0);
  for (int c = 0; c <= phi.degree(); ++c) {
    if (c > 0) power = odot(power, xc);
    sum += phi.block(c) * power / Rational(factorial(c));
  }
  return sum.to_vector();
}

/// M_{phi o psi} = M_phi Exp(M_psi); psi is applied first.
inline PolyMap compose(const PolyMap& phi, const PolyMap& psi) {
  if (phi.n_in() != psi.n_out()) {
    throw DimensionError("compose: phi takes " + std::to_string(phi.n_in()) + " inputs, psi produces " +
                         std::to_string(psi.n_out()));
  }
  const int max_col = phi.degree() * psi.degree();
  BlockMatrix e = exp_block(psi.to_block_matrix(), phi.degree(), max_col);
  BlockMatrix product = phi.to_block_matrix() * e;
  PolyMap out(psi.n_in(), phi.n_out());
  for (const auto& [k, b] : product.blocks()) out.set_block(b);
  return out;
}

/// Matrix of phi after the changes y' = S(y) of the codomain and x = T_inv(x')
/// of the domain: S Exp(M_phi) Exp(T_inv). The caller supplies the inverse
/// domain change.
inline PolyMap change_of_variables(const PolyMap& phi, const PolyMap& s, const PolyMap& t_inv) {
  if (s.n_in() != phi.n_out()) throw DimensionError("change_of_variables: S does not act on the codomain of phi");
  if (t_inv.n_out() != phi.n_in()) throw DimensionError("change_of_variables: T_inv does not land in the domain of phi");
  const int mid = s.degree() * phi.degree();
  const int top = mid * t_inv.degree();
  BlockMatrix product = s.to_block_matrix() * exp_block(phi.to_block_matrix(), s.degree(), mid) *
                        exp_block(t_inv.to_block_matrix(), mid, top);
  PolyMap out(t_inv.n_in(), s.n_out());
  for (const auto& [k, b] : product.blocks()) out.set_block(b);
  return out;
}

/// Inverse of an invertible affine map x -> A x + b.
inline PolyMap invert_affine(const PolyMap& m) {
  if (m.degree() > 1) throw DomainError("invert_affine: map has degree " + std::to_string(m.degree()));
  if (m.n_in() != m.n_out()) throw DimensionError("invert_affine: map is not square");
  DenseMatrix a_inv = inverse(m.block(1).flat());
  DenseMatrix b = m.block(0).flat();
  return PolyMap::affine(a_inv, (Rational(-1) * (a_inv * b)).entries());
}

/// A'(1,k) = S A(1,k) (T^{-1})^(k)/k! for a homogeneous degree-k map under
/// linear changes y' = S y, x' = T x.
inline SymMatrix gl_action_homogeneous(const SymMatrix& a, const DenseMatrix& s, const DenseMatrix& t_inv, int k) {
  if (a.p() != 1 || a.p_prime() != k) throw DimensionError("gl_action_homogeneous expects A in M(1,k)");
  if (static_cast<int>(s.cols()) != a.n()) throw DimensionError("S does not act on the codomain of A");
  if (!t_inv.is_square() || static_cast<int>(t_inv.rows()) != a.n_prime()) {
    throw DimensionError("T_inv must be square of the domain dimension");
  }
  return SymMatrix::from_linear(s) * a * sym_power(SymMatrix::from_linear(t_inv), k);
}

}  // namespace multilin
