#pragma once

/**
 * @file oracles.hpp
 * @brief Slow reference implementations used to cross-check the library.
 *
 * Nothing here calls the production product code. Permutations come from
 * std::next_permutation with signs from inversion counts, polynomials are
 * sparse exponent maps, and determinants are Leibniz sums.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <vector>

#include "multilin/alt_matrix.hpp"
#include "multilin/multilinear.hpp"
#include "multilin/polymap.hpp"
#include "multilin/sym_matrix.hpp"

namespace multilin::oracle {

inline int inversion_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
  return inv % 2 ? -1 : 1;
}

/// All permutations of 0..m-1 that increase inside each consecutive block.
inline std::vector<std::vector<int>> block_monotone_perms(const std::vector<int>& blocks) {
  const int m = std::accumulate(blocks.begin(), blocks.end(), 0);
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    int start = 0;
    for (int b : blocks) {
      for (int i = start + 1; i < start + b && ok; ++i) ok = perm[static_cast<std::size_t>(i - 1)] < perm[static_cast<std::size_t>(i)];
      start += b;
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline Rational leibniz_det(const DenseMatrix& a) {
  const auto n = a.rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational sum;
  do {
    Rational term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= a(i, static_cast<std::size_t>(perm[i]));
    sum += inversion_sign(perm) > 0 ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

/// Minor of a on 1-based rows and columns.
inline Rational minor(const DenseMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
  DenseMatrix sub(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      sub(i, j) = a(static_cast<std::size_t>(rows[i] - 1), static_cast<std::size_t>(cols[j] - 1));
  return leibniz_det(sub);
}

inline Rational scalar_multi_binomial(const std::vector<int>& a, const std::vector<int>& b) {
  Rational r = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) return 0;
    r *= Rational(factorial(a[i])) / Rational(factorial(b[i]) * factorial(a[i] - b[i]));
  }
  return r;
}

/// Every nonnegative integer vector of length n and the given weight, in no
/// particular order.
inline std::vector<std::vector<int>> all_compositions(int n, int weight) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      cur[static_cast<std::size_t>(i)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, left - v);
    }
  };
  if (n == 0) {
    if (weight == 0) out.emplace_back();
    return out;
  }
  rec(rec, 0, weight);
  return out;
}

/// One entry of A (.) B summed straight from the definition.
inline Rational odot_entry(const SymMatrix& a, const SymMatrix& b, const std::vector<int>& alpha,
                           const std::vector<int>& alpha_prime) {
  Rational sum;
  for (const auto& beta : all_compositions(static_cast<int>(alpha.size()), a.p())) {
    bool inside = true;
    for (std::size_t i = 0; i < beta.size(); ++i) inside = inside && beta[i] <= alpha[i];
    if (!inside) continue;
    for (const auto& beta_p : all_compositions(static_cast<int>(alpha_prime.size()), a.p_prime())) {
      const Rational coef = scalar_multi_binomial(alpha_prime, beta_p);
      if (coef.is_zero()) continue;
      std::vector<int> rest(alpha.size()), rest_p(alpha_prime.size());
      for (std::size_t i = 0; i < alpha.size(); ++i) rest[i] = alpha[i] - beta[i];
      for (std::size_t i = 0; i < alpha_prime.size(); ++i) rest_p[i] = alpha_prime[i] - beta_p[i];
      sum += coef * a.at(MultiIndex(beta), MultiIndex(beta_p)) * b.at(MultiIndex(rest), MultiIndex(rest_p));
    }
  }
  return sum;
}

inline SymMatrix odot_direct(const SymMatrix& a, const SymMatrix& b) {
  const int n = a.p() ? a.n() : b.n();
  const int np = a.p_prime() ? a.n_prime() : b.n_prime();
  SymMatrix c(n, np, a.p() + b.p(), a.p_prime() + b.p_prime());
  for (const auto& r : all_compositions(n, c.p()))
    for (const auto& col : all_compositions(np, c.p_prime())) c.set(MultiIndex(r), MultiIndex(col), odot_entry(a.rebased(n, np), b.rebased(n, np), r, col));
  return c;
}

/// The k-factor signed double-shuffle sum over
/// S_{[p1]+...+[pk]} x S_{[p1']+...+[pk']}.
inline AltMatrix multi_wedge_direct(const std::vector<AltMatrix>& factors) {
  if (factors.empty()) return AltMatrix::unit();
  int n = 0, np = 0, p = 0, pp = 0;
  std::vector<int> rb, cb;
  for (const auto& f : factors) {
    if (f.p()) n = f.n();
    if (f.p_prime()) np = f.n_prime();
    p += f.p();
    pp += f.p_prime();
    rb.push_back(f.p());
    cb.push_back(f.p_prime());
  }
  const auto row_perms = block_monotone_perms(rb);
  const auto col_perms = block_monotone_perms(cb);
  AltMatrix c(n, np, p, pp);
  for (const auto& alpha : enumerate_strict(n, p)) {
    for (const auto& alpha_p : enumerate_strict(np, pp)) {
      Rational sum;
      for (const auto& s : row_perms) {
        for (const auto& t : col_perms) {
          Rational term = inversion_sign(s) * inversion_sign(t);
          int ro = 0, co = 0;
          for (const auto& f : factors) {
            std::vector<int> r(static_cast<std::size_t>(f.p())), q(static_cast<std::size_t>(f.p_prime()));
            for (int i = 0; i < f.p(); ++i) r[static_cast<std::size_t>(i)] = alpha[s[static_cast<std::size_t>(ro + i)]];
            for (int i = 0; i < f.p_prime(); ++i) q[static_cast<std::size_t>(i)] = alpha_p[t[static_cast<std::size_t>(co + i)]];
            ro += f.p();
            co += f.p_prime();
            term *= f.flat()(rank_strict(r), rank_strict(q));
            if (term.is_zero()) break;
          }
          sum += term;
        }
      }
      c.set(alpha, alpha_p, sum);
    }
  }
  return c;
}

inline AltMatrix wedge_direct(const AltMatrix& a, const AltMatrix& b) { return multi_wedge_direct({a, b}); }

// ---------------------------------------------------------------------------
// Sparse multivariate polynomials.

using Monomial = std::vector<int>;
using Polynomial = std::map<Monomial, Rational>;

inline void add_term(Polynomial& p, const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = p.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

inline Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      add_term(r, m, ca * cb);
    }
  return r;
}

/// Component polynomials of phi: coefficient of x^alpha in phi_i is
/// M[i, alpha] / alpha!.
inline std::vector<Polynomial> to_polynomials(const PolyMap& phi) {
  std::vector<Polynomial> out(static_cast<std::size_t>(phi.n_out()));
  for (int c = 0; c <= phi.degree(); ++c) {
    const SymMatrix b = phi.block(c);
    for (const auto& alpha : all_compositions(phi.n_in(), c)) {
      Rational fact = 1;
      for (int x : alpha) fact *= Rational(factorial(x));
      for (int i = 0; i < phi.n_out(); ++i) {
        add_term(out[static_cast<std::size_t>(i)], alpha, b.at(MultiIndex::unit(phi.n_out(), i), MultiIndex(alpha)) / fact);
      }
    }
  }
  return out;
}

inline PolyMap from_polynomials(const std::vector<Polynomial>& polys, int n_in) {
  PolyMap m(n_in, static_cast<int>(polys.size()));
  int degree = 0;
  for (const auto& p : polys)
    for (const auto& [mono, c] : p) degree = std::max(degree, std::accumulate(mono.begin(), mono.end(), 0));
  for (int c = 0; c <= degree; ++c) {
    SymMatrix b(static_cast<int>(polys.size()), n_in, 1, c);
    for (std::size_t i = 0; i < polys.size(); ++i)
      for (const auto& [mono, coef] : polys[i]) {
        if (std::accumulate(mono.begin(), mono.end(), 0) != c) continue;
        Rational fact = 1;
        for (int x : mono) fact *= Rational(factorial(x));
        b.set(MultiIndex::unit(static_cast<int>(polys.size()), static_cast<int>(i)), MultiIndex(mono), coef * fact);
      }
    m.set_block(b);
  }
  return m;
}

/// phi o psi by substituting the component polynomials of psi into phi.
inline PolyMap substitute(const PolyMap& phi, const PolyMap& psi) {
  const auto outer = to_polynomials(phi);
  const auto inner = to_polynomials(psi);
  const Monomial one(static_cast<std::size_t>(psi.n_in()), 0);
  std::vector<Polynomial> result(outer.size());
  for (std::size_t i = 0; i < outer.size(); ++i) {
    for (const auto& [mono, coef] : outer[i]) {
      Polynomial term{{one, coef}};
      for (std::size_t v = 0; v < mono.size(); ++v)
        for (int e = 0; e < mono[v]; ++e) term = multiply(term, inner[v]);
      for (const auto& [m, c] : term) add_term(result[i], m, c);
    }
  }
  return from_polynomials(result, psi.n_in());
}

inline Vector eval_polynomials(const std::vector<Polynomial>& polys, const Vector& x) {
  Vector out;
  for (const auto& p : polys) {
    Rational s;
    for (const auto& [mono, c] : p) {
      Rational t = c;
      for (std::size_t v = 0; v < mono.size(); ++v) t *= pow(x[v], mono[v]);
      s += t;
    }
    out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Products of multilinear maps straight from their definitions. The factors
// are given as coefficient tensors and the pairing as c[k][i][j].

struct Pairing {
  int out_dim, first_dim, second_dim;
  std::vector<Rational> coeffs;  // k-major, then i, then j

  Vector operator()(const Vector& x, const Vector& y) const {
    Vector r(static_cast<std::size_t>(out_dim));
    std::size_t pos = 0;
    for (int k = 0; k < out_dim; ++k)
      for (int i = 0; i < first_dim; ++i)
        for (int j = 0; j < second_dim; ++j) r[static_cast<std::size_t>(k)] += coeffs[pos++] * x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
    return r;
  }
};

inline std::vector<Vector> pick(const std::vector<Vector>& args, const std::vector<int>& perm, std::size_t from, std::size_t count) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(args[static_cast<std::size_t>(perm[from + i])]);
  return out;
}

/// (1/(p+q)!) sum over S_{p+q} of C(A(x_s(1..p)), B(x_s(p+1..p+q))).
inline Vector sym_product_eval(const MultilinearTensor& a, const MultilinearTensor& b, const Pairing& c,
                               const std::vector<Vector>& args) {
  const auto p = static_cast<std::size_t>(a.arity()), q = static_cast<std::size_t>(b.arity());
  std::vector<int> perm(p + q);
  std::iota(perm.begin(), perm.end(), 0);
  Vector sum(static_cast<std::size_t>(c.out_dim));
  do {
    const Vector v = c(tensor_eval(a, pick(args, perm, 0, p)), tensor_eval(b, pick(args, perm, p, q)));
    for (std::size_t k = 0; k < v.size(); ++k) sum[k] += v[k];
  } while (std::next_permutation(perm.begin(), perm.end()));
  const Rational scale = Rational(1) / Rational(factorial(static_cast<long>(p + q)));
  for (auto& x : sum) x *= scale;
  return sum;
}

/// sum over S_{[p]+[q]} of eps(s) C(A(x_s(1..p)), B(x_s(p+1..p+q))).
inline Vector alt_product_eval(const MultilinearTensor& a, const MultilinearTensor& b, const Pairing& c,
                               const std::vector<Vector>& args) {
  const auto p = static_cast<std::size_t>(a.arity()), q = static_cast<std::size_t>(b.arity());
  Vector sum(static_cast<std::size_t>(c.out_dim));
  for (const auto& perm : block_monotone_perms({a.arity(), b.arity()})) {
    const Vector v = c(tensor_eval(a, pick(args, perm, 0, p)), tensor_eval(b, pick(args, perm, p, q)));
    const int s = inversion_sign(perm);
    for (std::size_t k = 0; k < v.size(); ++k) sum[k] += s > 0 ? v[k] : -v[k];
  }
  return sum;
}

}  // namespace multilin::oracle
