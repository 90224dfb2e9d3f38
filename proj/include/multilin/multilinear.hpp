#pragma once

/**
 * @file multilinear.hpp
 * @brief Matrix representations of symmetric and antisymmetric multilinear
 * maps and their products through a bilinear pairing.
 *
 * A symmetric map A: V^p -> V' is represented by A in M_{n',n}(1,p) with
 *   A(x^1, ..., x^p) = A (x^1 (.) ... (.) x^p) / p!,
 * an antisymmetric one by A in AltM_{n',n}(1,p) with
 *   A(x^1, ..., x^p) = A (x^1 ^ ... ^ x^p).
 * A bilinear C: V' x V'' -> V''' is represented by C in M_{n''',n'+n''}(1,2)
 * acting on the concatenated space, C(x', x'') = C ((x',0) (.) (0,x'')).
 */

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "multilin/alt_matrix.hpp"
#include "multilin/sym_matrix.hpp"

namespace multilin {

/// Full coefficient tensor T[i][s_1]...[s_p] of a multilinear map V^p -> V',
/// stored row-major with the output index first. Index s_j runs over 0..in_dim-1.
class MultilinearTensor {
 public:
  MultilinearTensor(int out_dim, int in_dim, int arity)
      : out_(out_dim), in_(in_dim), arity_(arity), c_(static_cast<std::size_t>(out_dim) * ipow(in_dim, arity)) {
    if (out_dim < 0 || in_dim < 0 || arity < 0) throw DomainError("negative tensor shape");
  }

  int out_dim() const { return out_; }
  int in_dim() const { return in_; }
  int arity() const { return arity_; }
  std::size_t inner_size() const { return ipow(in_, arity_); }

  Rational& at(int i, std::span<const int> s) { return c_[offset(i, s)]; }
  const Rational& at(int i, std::span<const int> s) const { return c_[offset(i, s)]; }
  /// Direct access by flat inner position (s_1 most significant).
  Rational& at_flat(int i, std::size_t inner) { return c_[static_cast<std::size_t>(i) * inner_size() + inner]; }
  const Rational& at_flat(int i, std::size_t inner) const {
    return c_[static_cast<std::size_t>(i) * inner_size() + inner];
  }

  /// Decodes a flat inner position into (s_1, ..., s_p).
  std::vector<int> decode(std::size_t inner) const {
    std::vector<int> s(static_cast<std::size_t>(arity_));
    for (int j = arity_ - 1; j >= 0; --j) {
      s[static_cast<std::size_t>(j)] = static_cast<int>(inner % static_cast<std::size_t>(in_));
      inner /= static_cast<std::size_t>(in_);
    }
    return s;
  }

 private:
  static std::size_t ipow(int b, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<std::size_t>(b);
    return r;
  }
  std::size_t offset(int i, std::span<const int> s) const {
    if (static_cast<int>(s.size()) != arity_) throw DimensionError("tensor index has wrong arity");
    std::size_t inner = 0;
    for (int v : s) {
      if (v < 0 || v >= in_) throw DomainError("tensor index out of range");
      inner = inner * static_cast<std::size_t>(in_) + static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(i) * inner_size() + inner;
  }

  int out_, in_, arity_;
  std::vector<Rational> c_;
};

/// Direct nested summation sum_s T[i][s] x^1_{s_1} ... x^p_{s_p}; makes no
/// symmetry assumption on T.
inline Vector tensor_eval(const MultilinearTensor& t, const std::vector<Vector>& args) {
  if (static_cast<int>(args.size()) != t.arity()) throw DimensionError("tensor_eval: wrong number of arguments");
  for (const auto& x : args) {
    if (static_cast<int>(x.size()) != t.in_dim()) throw DimensionError("tensor_eval: argument length mismatch");
  }
  Vector out(static_cast<std::size_t>(t.out_dim()));
  for (std::size_t inner = 0; inner < t.inner_size(); ++inner) {
    const auto s = t.decode(inner);
    Rational prod = 1;
    for (std::size_t j = 0; j < s.size() && !prod.is_zero(); ++j) prod *= args[j][static_cast<std::size_t>(s[j])];
    if (prod.is_zero()) continue;
    for (int i = 0; i < t.out_dim(); ++i) out[static_cast<std::size_t>(i)] += t.at_flat(i, inner) * prod;
  }
  return out;
}

// ---------------------------------------------------------------------------

class SymMultiMap {
 public:
  explicit SymMultiMap(SymMatrix m) : m_(std::move(m)) {
    if (m_.p() != 1) throw DimensionError("symmetric multilinear map matrix must have row weight 1");
  }
  int arity() const { return m_.p_prime(); }
  int in_dim() const { return m_.n_prime(); }
  int out_dim() const { return m_.n(); }
  const SymMatrix& matrix() const { return m_; }
  friend bool operator==(const SymMultiMap&, const SymMultiMap&) = default;

 private:
  SymMatrix m_;
};

class AltMultiMap {
 public:
  explicit AltMultiMap(AltMatrix m) : m_(std::move(m)) {
    if (m_.p() != 1) throw DimensionError("antisymmetric multilinear map matrix must have row weight 1");
  }
  int arity() const { return m_.p_prime(); }
  int in_dim() const { return m_.n_prime(); }
  int out_dim() const { return m_.n(); }
  const AltMatrix& matrix() const { return m_; }
  friend bool operator==(const AltMultiMap&, const AltMultiMap&) = default;

 private:
  AltMatrix m_;
};

/// Bilinear C: V' x V'' -> V''' as a weight-(1,2) matrix over the
/// concatenated (n'+n'')-dimensional space. Only the cross columns
/// e_i + e_{n'+j} are ever read.
class BilinearMap {
 public:
  BilinearMap(SymMatrix m, int first_dim) : m_(std::move(m)), first_(first_dim) {
    if (m_.p() != 1 || m_.p_prime() != 2) throw DimensionError("bilinear map matrix must have weight (1,2)");
    if (first_dim < 0 || first_dim > m_.n_prime()) throw DimensionError("bilinear split outside the concatenated space");
  }

  /// From c[k][i][j] with i in V' (first_dim) and j in V'' (second_dim).
  static BilinearMap from_coefficients(int out_dim, int first_dim, int second_dim,
                                       const std::vector<Rational>& coeffs) {
    if (coeffs.size() != static_cast<std::size_t>(out_dim * first_dim * second_dim)) {
      throw DimensionError("bilinear coefficient count mismatch");
    }
    const int total = first_dim + second_dim;
    SymMatrix m(out_dim, total, 1, 2);
    std::size_t pos = 0;
    for (int k = 0; k < out_dim; ++k)
      for (int i = 0; i < first_dim; ++i)
        for (int j = 0; j < second_dim; ++j) {
          m.set(unit_row(out_dim, k), MultiIndex::unit(total, i) + MultiIndex::unit(total, first_dim + j),
                coeffs[pos++]);
        }
    return BilinearMap(std::move(m), first_dim);
  }

  const SymMatrix& matrix() const { return m_; }
  int first_dim() const { return first_; }
  int second_dim() const { return m_.n_prime() - first_; }
  int out_dim() const { return m_.n(); }

  /// C((x',0) (.) (0,x'')).
  Vector operator()(const Vector& x1, const Vector& x2) const {
    if (static_cast<int>(x1.size()) != first_dim() || static_cast<int>(x2.size()) != second_dim()) {
      throw DimensionError("bilinear map argument length mismatch");
    }
    Vector left(static_cast<std::size_t>(m_.n_prime())), right(static_cast<std::size_t>(m_.n_prime()));
    std::copy(x1.begin(), x1.end(), left.begin());
    std::copy(x2.begin(), x2.end(), right.begin() + first_);
    return (m_ * odot(SymMatrix::column(left), SymMatrix::column(right))).to_vector();
  }

 private:
  static MultiIndex unit_row(int n, int k) { return MultiIndex::unit(n, k); }

  SymMatrix m_;
  int first_;
};

// ---------------------------------------------------------------------------

inline Vector eval_sym(const SymMultiMap& m, const std::vector<Vector>& args) {
  if (static_cast<int>(args.size()) != m.arity()) {
    throw DimensionError("eval_sym: arity " + std::to_string(m.arity()) + ", got " + std::to_string(args.size()) +
                         " arguments");
  }
  SymMatrix prod = SymMatrix::unit(m.in_dim(), 0);
  for (const auto& x : args) {
    if (static_cast<int>(x.size()) != m.in_dim()) throw DimensionError("eval_sym: argument length mismatch");
    prod = odot(prod, SymMatrix::column(x));
  }
  return (m.matrix() * prod / Rational(factorial(m.arity()))).to_vector();
}

inline Vector eval_alt(const AltMultiMap& m, const std::vector<Vector>& args) {
  if (static_cast<int>(args.size()) != m.arity()) {
    throw DimensionError("eval_alt: arity " + std::to_string(m.arity()) + ", got " + std::to_string(args.size()) +
                         " arguments");
  }
  AltMatrix prod = AltMatrix::unit(m.in_dim(), 0);
  for (const auto& x : args) {
    if (static_cast<int>(x.size()) != m.in_dim()) throw DimensionError("eval_alt: argument length mismatch");
    prod = wedge(prod, AltMatrix::column(x));
  }
  return (m.matrix() * prod).to_vector();
}

/// Matrix of the symmetrization of T: column alpha gets
/// alpha! * sum of T over all index tuples with content alpha.
inline SymMultiMap sym_map_from_tensor(const MultilinearTensor& t) {
  SymMatrix m(t.out_dim(), t.in_dim(), 1, t.arity());
  std::vector<int> content(static_cast<std::size_t>(t.in_dim()));
  for (std::size_t inner = 0; inner < t.inner_size(); ++inner) {
    std::fill(content.begin(), content.end(), 0);
    for (int s : t.decode(inner)) ++content[static_cast<std::size_t>(s)];
    MultiIndex alpha(content);
    const Rational scale(alpha.factorial());
    for (int i = 0; i < t.out_dim(); ++i) {
      const MultiIndex row = MultiIndex::unit(t.out_dim(), i);
      m.set(row, alpha, m.at(row, alpha) + scale * t.at_flat(i, inner));
    }
  }
  return SymMultiMap(std::move(m));
}

/// Matrix of the antisymmetrization of T: A[i, alpha] = (1/p!) sum_sigma
/// eps(sigma) T[i][alpha_sigma]. Equals T[i][alpha] for alternating T.
inline AltMultiMap alt_map_from_tensor(const MultilinearTensor& t) {
  const int p = t.arity();
  AltMatrix m(t.out_dim(), t.in_dim(), 1, p);
  const auto cols = enumerate_strict(t.in_dim(), p);
  std::vector<int> perm(static_cast<std::size_t>(p));
  const Rational inv_fact = Rational(1) / Rational(factorial(p));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (int i = 0; i < t.out_dim(); ++i) {
      std::iota(perm.begin(), perm.end(), 0);
      Rational acc;
      do {
        std::vector<int> s(static_cast<std::size_t>(p));
        for (int j = 0; j < p; ++j) s[static_cast<std::size_t>(j)] = cols[c][perm[static_cast<std::size_t>(j)]] - 1;
        int inversions = 0;
        for (int x = 0; x < p; ++x)
          for (int y = x + 1; y < p; ++y) inversions += perm[static_cast<std::size_t>(x)] > perm[static_cast<std::size_t>(y)];
        const int sign = inversions % 2 ? -1 : 1;
        acc += sign > 0 ? t.at(i, s) : -t.at(i, s);
      } while (std::next_permutation(perm.begin(), perm.end()));
      m.set(StrictIndex({i + 1}, t.out_dim()), cols[c], acc * inv_fact);
    }
  }
  return AltMultiMap(std::move(m));
}

namespace detail {

inline void check_chain(int a_out, int b_out, int a_in, int b_in, const BilinearMap& c) {
  if (a_in != b_in) throw DimensionError("multilinear product: factors have different domains");
  if (c.first_dim() != a_out || c.second_dim() != b_out) {
    throw DimensionError("multilinear product: pairing expects (" + std::to_string(c.first_dim()) + "," +
                         std::to_string(c.second_dim()) + "), factors produce (" + std::to_string(a_out) + "," +
                         std::to_string(b_out) + ")");
  }
}

}  // namespace detail

/// A x_C B with matrix C (A-bar (.) B-underbar).
inline SymMultiMap product_sym(const SymMultiMap& a, const SymMultiMap& b, const BilinearMap& c) {
  detail::check_chain(a.out_dim(), b.out_dim(), a.in_dim(), b.in_dim(), c);
  const int total = a.out_dim() + b.out_dim();
  SymMatrix over = padded_embed_rows(a.matrix(), 0, total);
  SymMatrix under = padded_embed_rows(b.matrix(), a.out_dim(), total);
  return SymMultiMap(c.matrix() * odot(over, under));
}

/// A ^_C B with matrix C (A-bar ^ B-underbar). The weight-2 strict index
/// (i, j) of the concatenated space is paired with C's column e_i + e_j.
inline AltMultiMap product_alt(const AltMultiMap& a, const AltMultiMap& b, const BilinearMap& c) {
  detail::check_chain(a.out_dim(), b.out_dim(), a.in_dim(), b.in_dim(), c);
  const int total = a.out_dim() + b.out_dim();
  AltMatrix w = wedge(padded_embed_rows(a.matrix(), 0, total), padded_embed_rows(b.matrix(), a.out_dim(), total));
  AltMatrix c_strict(c.out_dim(), total, 1, 2);
  const auto pairs = enumerate_strict(total, 2);
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    const auto col = MultiIndex::unit(total, pairs[r][0] - 1) + MultiIndex::unit(total, pairs[r][1] - 1);
    for (int k = 0; k < c.out_dim(); ++k) {
      c_strict.set(StrictIndex({k + 1}, c.out_dim()), pairs[r], c.matrix().at(MultiIndex::unit(c.out_dim(), k), col));
    }
  }
  return AltMultiMap(c_strict * w);
}

/// For a symmetric pairing C(x', y') = C (x' (.) y') / 2! on V' x V', the
/// same map written over the concatenated space V' + V'.
inline BilinearMap bilinear_from_symmetric_pairing(const SymMatrix& c) {
  if (c.p() != 1 || c.p_prime() != 2) throw DimensionError("symmetric pairing must have weight (1,2)");
  const int d = c.n_prime();
  std::vector<Rational> coeffs;
  for (int k = 0; k < c.n(); ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        auto col = MultiIndex::unit(d, i) + MultiIndex::unit(d, j);
        // (x' (.) y') at e_i+e_j is x'_i y'_j + x'_j y'_i for i != j and
        // x'_i y'_i on the diagonal, so every coefficient is half of C.
        coeffs.push_back(c.at(MultiIndex::unit(c.n(), k), col) / Rational(2));
      }
  return BilinearMap::from_coefficients(c.n(), d, d, coeffs);
}

/// Shortcut product for a symmetric pairing on V' x V': (1/2!) C (A (.) B).
inline SymMultiMap product_sym_symmetric_pairing(const SymMultiMap& a, const SymMultiMap& b, const SymMatrix& c) {
  if (a.out_dim() != b.out_dim() || c.n_prime() != a.out_dim() || a.in_dim() != b.in_dim()) {
    throw DimensionError("symmetric pairing shortcut: dimension chain mismatch");
  }
  return SymMultiMap(c * odot(a.matrix(), b.matrix()) / Rational(2));
}

/// For an antisymmetric pairing C(x', y') = C (x' ^ y') on V' x V', the same
/// map over the concatenated space.
inline BilinearMap bilinear_from_antisymmetric_pairing(const AltMatrix& c) {
  if (c.p() != 1 || c.p_prime() != 2) throw DimensionError("antisymmetric pairing must have weight (1,2)");
  const int d = c.n_prime();
  std::vector<Rational> coeffs;
  for (int k = 0; k < c.n(); ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (i == j) {
          coeffs.emplace_back(0);
          continue;
        }
        const int lo = std::min(i, j) + 1, hi = std::max(i, j) + 1;
        Rational v = c.at(StrictIndex({k + 1}, c.n()), StrictIndex({lo, hi}, d));
        coeffs.push_back(i < j ? v : -v);
      }
  return BilinearMap::from_coefficients(c.n(), d, d, coeffs);
}

/// Shortcut product for an antisymmetric pairing on V' x V': C (A ^ B).
inline AltMultiMap product_alt_antisymmetric_pairing(const AltMultiMap& a, const AltMultiMap& b, const AltMatrix& c) {
  if (a.out_dim() != b.out_dim() || c.n_prime() != a.out_dim() || a.in_dim() != b.in_dim()) {
    throw DimensionError("antisymmetric pairing shortcut: dimension chain mismatch");
  }
  return AltMultiMap(c * wedge(a.matrix(), b.matrix()));
}

}  // namespace multilin
