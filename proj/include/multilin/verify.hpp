#pragma once

/**
 * @file verify.hpp
 * @brief Seeded property suites that check the library against the oracles.
 *
 * Every suite draws from its own generator derived from the run seed, so a
 * report is a pure function of the seed. Each suite is tagged with the
 * acceptance criterion it backs.
 */

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "multilin/alt_matrix.hpp"
#include "multilin/dense_matrix.hpp"
#include "multilin/json_io.hpp"
#include "multilin/multiindex.hpp"
#include "multilin/multilinear.hpp"
#include "multilin/norms.hpp"
#include "multilin/oracles.hpp"
#include "multilin/polymap.hpp"
#include "multilin/sym_matrix.hpp"

namespace multilin::verify {

/// Deterministic generator. Ranges are mapped by hand rather than through
/// std distributions, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(eng_() % span);
  }
  bool coin(int one_in = 2) { return uniform(0, one_in - 1) == 0; }

  /// Small numerators, denominators mostly 1 so products stay readable.
  Rational rational() {
    static constexpr long dens[] = {1, 1, 1, 2, 3};
    return Rational(Integer(uniform(-5, 5)), Integer(dens[uniform(0, 4)]));
  }
  Rational nonzero_rational() {
    Rational r;
    while (r.is_zero()) r = rational();
    return r;
  }
  /// Zero with probability 1/2, else rational().
  Rational sparse_rational() { return coin() ? Rational() : rational(); }

  Vector vector(int n) {
    Vector v;
    for (int i = 0; i < n; ++i) v.push_back(rational());
    return v;
  }

  DenseMatrix matrix(int rows, int cols) {
    DenseMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = rational();
    return m;
  }

  DenseMatrix invertible(int n) {
    for (;;) {
      DenseMatrix m = matrix(n, n);
      if (!det(m).is_zero()) return m;
    }
  }

  DenseMatrix upper_triangular(int n) {
    DenseMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = rational();
    return m;
  }

  DenseMatrix with_rank(int rows, int cols, int r) {
    for (;;) {
      DenseMatrix m = r == 0 ? DenseMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols))
                             : matrix(rows, r) * matrix(r, cols);
      if (static_cast<int>(rank(m)) == r) return m;
    }
  }

  SymMatrix sym(int n, int n_prime, int p, int p_prime) {
    SymMatrix a(n, n_prime, p, p_prime);
    DenseMatrix f(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) f(i, j) = rational();
    return SymMatrix(n, n_prime, p, p_prime, std::move(f));
  }

  AltMatrix alt(int n, int n_prime, int p, int p_prime) {
    AltMatrix a(n, n_prime, p, p_prime);
    DenseMatrix f(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) f(i, j) = rational();
    return AltMatrix(n, n_prime, p, p_prime, std::move(f));
  }

  PolyMap polymap(int n_in, int n_out, int degree) {
    PolyMap m(n_in, n_out);
    for (int c = 0; c <= degree; ++c) {
      SymMatrix b(n_out, n_in, 1, c);
      DenseMatrix f(b.rows(), b.cols());
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) f(i, j) = sparse_rational();
      m.set_block(SymMatrix(n_out, n_in, 1, c, std::move(f)));
    }
    return m;
  }

  MultilinearTensor tensor(int out, int in, int arity) {
    MultilinearTensor t(out, in, arity);
    for (int i = 0; i < out; ++i)
      for (std::size_t s = 0; s < t.inner_size(); ++s) t.at_flat(i, s) = rational();
    return t;
  }

 private:
  std::mt19937_64 eng_;
};

/// sum over S_p of T[i][s o sigma], optionally signed.
inline MultilinearTensor symmetrize(const MultilinearTensor& t, bool alternate) {
  MultilinearTensor r(t.out_dim(), t.in_dim(), t.arity());
  std::vector<int> perm(static_cast<std::size_t>(t.arity()));
  for (std::size_t inner = 0; inner < t.inner_size(); ++inner) {
    const auto s = t.decode(inner);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> ps(s.size());
      for (std::size_t j = 0; j < s.size(); ++j) ps[j] = s[static_cast<std::size_t>(perm[j])];
      const int sign = alternate ? oracle::inversion_sign(perm) : 1;
      for (int i = 0; i < t.out_dim(); ++i) {
        r.at_flat(i, inner) += sign > 0 ? t.at(i, ps) : -t.at(i, ps);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return r;
}

// ---------------------------------------------------------------------------

struct SuiteResult {
  SuiteResult(std::string suite_name, int crit) : name(std::move(suite_name)), criterion(crit) {}

  std::string name;
  int criterion = 0;
  long passed = 0;
  long total = 0;
  std::string first_failure;

  bool ok() const { return total > 0 && passed == total; }

  void check(bool cond, const std::string& what) {
    ++total;
    if (cond) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = what;
    }
  }
};

namespace detail {

template <class F>
void repeat(SuiteResult& s, int count, F&& body) {
  for (int i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (const std::exception& e) {
      s.check(false, "instance " + std::to_string(i) + " threw: " + e.what());
    }
  }
}

inline std::uint64_t suite_seed(std::uint64_t seed, const std::string& name) {
  // FNV-1a over the suite name keeps streams independent of suite order.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return seed ^ h;
}

inline bool close(double a, double b) { return std::fabs(a - b) <= 1e-9 * std::max({1.0, std::fabs(a), std::fabs(b)}); }

inline bool leq(double a, double b) { return a <= b + 1e-9 * std::max(1.0, std::fabs(b)); }

inline Rational det2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) { return a * d - b * c; }

inline Vector unit_vector(int n, int i) {
  Vector v(static_cast<std::size_t>(n));
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

inline std::vector<Vector> random_args(Rng& rng, int count, int n) {
  std::vector<Vector> args;
  for (int i = 0; i < count; ++i) args.push_back(rng.vector(n));
  return args;
}

inline std::vector<Rational> products_over_multi_indices(const std::vector<Rational>& lambda, int k) {
  std::vector<Rational> out;
  for (const auto& alpha : enumerate_stratum(static_cast<int>(lambda.size()), k)) {
    Rational prod = 1;
    for (int i = 0; i < alpha.size(); ++i) prod *= pow(lambda[static_cast<std::size_t>(i)], alpha[i]);
    out.push_back(prod);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Rational> products_over_subsets(const std::vector<Rational>& lambda, int k) {
  std::vector<Rational> out;
  for (const auto& s : enumerate_strict(static_cast<int>(lambda.size()), k)) {
    Rational prod = 1;
    for (int i = 0; i < s.size(); ++i) prod *= lambda[static_cast<std::size_t>(s[i] - 1)];
    out.push_back(prod);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Criterion 1

inline SuiteResult odot_pattern(std::uint64_t seed) {
  SuiteResult s{"odot_pattern", 1};
  Rng rng(detail::suite_seed(seed, s.name));
  detail::repeat(s, 100, [&](int) {
    const DenseMatrix a = rng.matrix(2, 2), b = rng.matrix(2, 2);
    auto A = [&](int i, int j) { return a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)); };
    auto B = [&](int i, int j) { return b(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)); };
    const DenseMatrix expected{
        {2 * A(1, 1) * B(1, 1), A(1, 1) * B(1, 2) + A(1, 2) * B(1, 1), 2 * A(1, 2) * B(1, 2)},
        {2 * (A(1, 1) * B(2, 1) + A(2, 1) * B(1, 1)),
         A(1, 1) * B(2, 2) + A(2, 2) * B(1, 1) + A(1, 2) * B(2, 1) + A(2, 1) * B(1, 2),
         2 * (A(1, 2) * B(2, 2) + A(2, 2) * B(1, 2))},
        {2 * A(2, 1) * B(2, 1), A(2, 1) * B(2, 2) + A(2, 2) * B(2, 1), 2 * A(2, 2) * B(2, 2)}};
    const SymMatrix c = odot(SymMatrix::from_linear(a), SymMatrix::from_linear(b));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        s.check(c.flat()(i, j) == expected(i, j), "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
  });
  return s;
}

// ---------------------------------------------------------------------------
// Criterion 2

/// Third factor of the n = k = 2 action, written out entrywise for T^{-1} = t.
inline DenseMatrix quadratic_third_factor(const DenseMatrix& t) {
  auto T = [&](int i, int j) { return t(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)); };
  return DenseMatrix{{T(1, 1) * T(1, 1), T(1, 1) * T(1, 2), T(1, 2) * T(1, 2)},
                     {2 * T(1, 1) * T(2, 1), T(1, 1) * T(2, 2) + T(1, 2) * T(2, 1), 2 * T(1, 2) * T(2, 2)},
                     {T(2, 1) * T(2, 1), T(2, 1) * T(2, 2), T(2, 2) * T(2, 2)}};
}

inline SuiteResult gl_action_quadratic(std::uint64_t seed) {
  SuiteResult s{"gl_action_quadratic", 2};
  Rng rng(detail::suite_seed(seed, s.name));
  detail::repeat(s, 100, [&](int) {
    const DenseMatrix a = rng.matrix(2, 3);
    const DenseMatrix t_inv = rng.invertible(2);
    const DenseMatrix t = inverse(t_inv);
    const SymMatrix A(2, 2, 1, 2, a);
    const SymMatrix got = gl_action_homogeneous(A, t, t_inv, 2);
    s.check(got.flat() == t * a * quadratic_third_factor(t_inv), "triple product");
    s.check(sym_power(SymMatrix::from_linear(t_inv), 2).flat() == quadratic_third_factor(t_inv), "third factor");

    PolyMap phi(2, 2);
    phi.set_block(A);
    const PolyMap moved = change_of_variables(phi, PolyMap::linear(t), PolyMap::linear(t_inv));
    s.check(moved.block(2) == got && moved.degree() <= 2, "change_of_variables path");
    s.check(rank(got.flat()) == rank(a), "rank invariance");

    // Acting twice equals acting by the composite.
    const DenseMatrix t2_inv = rng.invertible(2);
    const DenseMatrix t2 = inverse(t2_inv);
    const SymMatrix twice = gl_action_homogeneous(got, t2, t2_inv, 2);
    s.check(twice == gl_action_homogeneous(A, t2 * t, t_inv * t2_inv, 2), "group law");
  });
  return s;
}

// ---------------------------------------------------------------------------
// Criterion 3

inline SuiteResult wedge_minor_sums(std::uint64_t seed) {
  SuiteResult s{"wedge_minor_sums", 3};
  Rng rng(detail::suite_seed(seed, s.name));
  detail::repeat(s, 100, [&](int) {
    const DenseMatrix a = rng.matrix(3, 3), b = rng.matrix(3, 3);
    auto A = [&](int i, int j) { return a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)); };
    auto B = [&](int i, int j) { return b(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)); };
    const AltMatrix w = wedge(AltMatrix::from_linear(a), AltMatrix::from_linear(b));
    for (const auto& row : enumerate_strict(3, 2)) {
      for (const auto& col : enumerate_strict(3, 2)) {
        const int i = row[0], j = row[1], k = col[0], l = col[1];
        const Rational expected =
            detail::det2(A(i, k), A(i, l), B(j, k), B(j, l)) + detail::det2(B(i, k), B(i, l), A(j, k), A(j, l));
        s.check(w.at(row, col) == expected, "n=3 entry");
      }
    }
    s.check(w == oracle::wedge_direct(AltMatrix::from_linear(a), AltMatrix::from_linear(b)), "n=3 direct sum");

    const DenseMatrix c = rng.matrix(2, 2), d = rng.matrix(2, 2);
    auto C = [&](int i, int j) { return c(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)); };
    auto D = [&](int i, int j) { return d(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)); };
    const AltMatrix v = wedge(AltMatrix::from_linear(c), AltMatrix::from_linear(d));
    s.check(v.flat()(0, 0) == C(1, 1) * D(2, 2) + C(2, 2) * D(1, 1) - C(1, 2) * D(2, 1) - C(2, 1) * D(1, 2),
            "n=2 expansion");
  });
  return s;
}

// ---------------------------------------------------------------------------
// Criterion 4

inline SuiteResult sym_power_laws(std::uint64_t seed) {
  SuiteResult s{"sym_power_laws", 4};
  Rng rng(detail::suite_seed(seed, s.name));
  detail::repeat(s, 60, [&](int) {
    const int n = static_cast<int>(rng.uniform(1, 4)), k = static_cast<int>(rng.uniform(1, 3));
    const DenseMatrix u = rng.upper_triangular(n);
    const SymMatrix p = sym_power(SymMatrix::from_linear(u), k);
    std::vector<Rational> lambda;
    for (int i = 0; i < n; ++i) lambda.push_back(u(static_cast<std::size_t>(i), static_cast<std::size_t>(i)));
    s.check(is_upper_triangular(p.flat()) &&
                triangular_spectrum(p.flat()) == detail::products_over_multi_indices(lambda, k),
            "spectrum on triangular input");
  });
  detail::repeat(s, 60, [&](int) {
    const int n = static_cast<int>(rng.uniform(1, 4)), k = static_cast<int>(rng.uniform(1, 3));
    const int l = static_cast<int>(rng.uniform(0, n));
    const DenseMatrix a = rng.with_rank(n, n, l);
    const auto expected = binomial(k + l - 1, l - 1);
    s.check(Integer(static_cast<unsigned long>(rank(sym_power(SymMatrix::from_linear(a), k).flat()))) == expected,
            "rank law");
  });
  detail::repeat(s, 60, [&](int) {
    const int n = static_cast<int>(rng.uniform(1, 4)), k = static_cast<int>(rng.uniform(1, 3));
    const DenseMatrix a = rng.matrix(n, n);
    const long e = binomial(k + n - 1, n).get_si();
    s.check(det(sym_power(SymMatrix::from_linear(a), k).flat()) == pow(det(a), e), "det law");
  });
  detail::repeat(s, 50, [&](int) {
    // Eigenvectors: A = V diag(lambda) V^{-1}, columns of V are eigenvectors.
    const int n = static_cast<int>(rng.uniform(1, 3)), k = static_cast<int>(rng.uniform(1, 3));
    const DenseMatrix v = rng.invertible(n);
    std::vector<Rational> lambda = rng.vector(n);
    const DenseMatrix a = v * DenseMatrix::diagonal(lambda) * inverse(v);
    const SymMatrix p = sym_power(SymMatrix::from_linear(a), k);
    for (const auto& alpha : enumerate_stratum(n, k)) {
      SymMatrix w = SymMatrix::unit(n, 0);
      Rational mu = 1;
      for (int i = 0; i < n; ++i) {
        Vector col;
        for (int r = 0; r < n; ++r) col.push_back(v(static_cast<std::size_t>(r), static_cast<std::size_t>(i)));
        w = odot(w, odot_power(SymMatrix::column(col), alpha[i]));
        mu *= pow(lambda[static_cast<std::size_t>(i)], alpha[i]);
      }
      s.check(p * w == w * mu, "eigenvector " + alpha.str());
    }
  });
  detail::repeat(s, 50, [&](int) {
    const int n = static_cast<int>(rng.uniform(1, 3)), k = static_cast<int>(rng.uniform(0, 3));
    const DenseMatrix a = rng.matrix(n, n), b = rng.matrix(n, n);
    auto sp = [&](const DenseMatrix& m) { return sym_power(SymMatrix::from_linear(m), k); };
    s.check(sp(a * b) == sp(a) * sp(b), "functoriality");
    const DenseMatrix t = rng.invertible(n);
    s.check(sp(t) * sp(inverse(t)) == SymMatrix(n, n, k, k, DenseMatrix::identity(stratum_size(n, k))),
            "inverse of a power");
  });
  return s;
}

// ---------------------------------------------------------------------------
// Criterion 5

inline SuiteResult compound_laws(std::uint64_t seed) {
  SuiteResult s{"compound_laws", 5};
  Rng rng(detail::suite_seed(seed, s.name));
  detail::repeat(s, 60, [&](int) {
    const int n = static_cast<int>(rng.uniform(1, 4)), m = static_cast<int>(rng.uniform(1, 4));
    const int k = static_cast<int>(rng.uniform(1, std::min(n, m)));
    const DenseMatrix a = rng.matrix(n, m);
    const AltMatrix c = compound(a, k);
    const AltMatrix w = wedge_power(AltMatrix::from_linear(a), k);
    for (const auto& row : enumerate_strict(n, k)) {
      for (const auto& col : enumerate_strict(m, k)) {
        s.check(c.at(row, col) == oracle::minor(a, row.entries(), col.entries()), "minor formula");
        Rational row_side, col_side;
        std::vector<int> perm(static_cast<std::size_t>(k));
        std::iota(perm.begin(), perm.end(), 0);
        do {
          Rational r = oracle::inversion_sign(perm), q = oracle::inversion_sign(perm);
          for (int i = 0; i < k; ++i) {
            r *= a(static_cast<std::size_t>(row[perm[static_cast<std::size_t>(i)]] - 1), static_cast<std::size_t>(col[i] - 1));
            q *= a(static_cast<std::size_t>(row[i] - 1), static_cast<std::size_t>(col[perm[static_cast<std::size_t>(i)]] - 1));
          }
          row_side += r;
          col_side += q;
        } while (std::next_permutation(perm.begin(), perm.end()));
        const Rational kf(factorial(k));
        s.check(w.at(row, col) == kf * row_side && w.at(row, col) == kf * col_side, "k! signed sums");
      }
    }
  });
  detail::repeat(s, 60, [&](int) {
    const int n = static_cast<int>(rng.uniform(1, 4)), m = static_cast<int>(rng.uniform(1, 4));
    const int r = static_cast<int>(rng.uniform(1, 4));
    const int k = static_cast<int>(rng.uniform(0, std::min({n, m, r})));
    const DenseMatrix a = rng.matrix(n, m), b = rng.matrix(m, r);
    s.check(compound(a * b, k) == compound(a, k) * compound(b, k), "multiplicativity");
    std::vector<AltMatrix> xs, axs;
    for (int i = 0; i < k; ++i) {
      const Vector x = rng.vector(m);
      xs.push_back(AltMatrix::column(x));
      axs.push_back(AltMatrix::column((a * DenseMatrix(x.size(), 1, x)).entries()));
    }
    s.check(multi_wedge(axs).rebased(n, 0) == (compound(a, k) * multi_wedge(xs).rebased(m, 0)).rebased(n, 0),
            "A x^1 ^ ... ^ A x^k");
  });
  detail::repeat(s, 60, [&](int) {
    const int n = static_cast<int>(rng.uniform(1, 4)), m = static_cast<int>(rng.uniform(1, 4));
    const int l = static_cast<int>(rng.uniform(0, std::min(n, m)));
    const int k = static_cast<int>(rng.uniform(1, std::min(n, m)));
    const DenseMatrix a = rng.with_rank(n, m, l);
    s.check(Integer(static_cast<unsigned long>(rank(wedge_power(AltMatrix::from_linear(a), k).flat()))) ==
                binomial(l, k),
            "rank law");
  });
  detail::repeat(s, 60, [&](int) {
    const int n = static_cast<int>(rng.uniform(1, 4)), k = static_cast<int>(rng.uniform(1, n));
    const DenseMatrix a = rng.matrix(n, n);
    s.check(det(compound(a, k).flat()) == pow(det(a), binomial(n - 1, k - 1).get_si()), "det law");
  });
  detail::repeat(s, 60, [&](int) {
    const int n = static_cast<int>(rng.uniform(1, 4)), k = static_cast<int>(rng.uniform(1, n));
    const DenseMatrix u = rng.upper_triangular(n);
    const AltMatrix c = compound(u, k);
    std::vector<Rational> lambda;
    for (int i = 0; i < n; ++i) lambda.push_back(u(static_cast<std::size_t>(i), static_cast<std::size_t>(i)));
    s.check(is_upper_triangular(c.flat()) && triangular_spectrum(c.flat()) == detail::products_over_subsets(lambda, k),
            "spectrum on triangular input");
  });
  detail::repeat(s, 50, [&](int) {
    const int n = static_cast<int>(rng.uniform(1, 4)), k = static_cast<int>(rng.uniform(1, n));
    const DenseMatrix v = rng.invertible(n);
    const Vector lambda = rng.vector(n);
    const DenseMatrix a = v * DenseMatrix::diagonal(lambda) * inverse(v);
    const AltMatrix c = compound(a, k);
    std::vector<AltMatrix> cols;
    Rational mu = 1;
    for (int i = 0; i < k; ++i) {
      Vector col;
      for (int r = 0; r < n; ++r) col.push_back(v(static_cast<std::size_t>(r), static_cast<std::size_t>(i)));
      cols.push_back(AltMatrix::column(col));
      mu *= lambda[static_cast<std::size_t>(i)];
    }
    const AltMatrix w = multi_wedge(cols);
    s.check(!w.is_zero() && c * w == w * mu, "eigenvector of the compound");
  });
  detail::repeat(s, 50, [&](int) {
    const int n = static_cast<int>(rng.uniform(1, 4)), p = static_cast<int>(rng.uniform(1, n));
    const AltMatrix a = rng.alt(n, n, 1, p);
    const DenseMatrix t = rng.invertible(n), t2 = rng.invertible(n);
    const AltMatrix moved = gl_action_antisym(a, t, p);
    s.check(gl_action_antisym(a, DenseMatrix::identity(static_cast<std::size_t>(n)), p) == a, "identity action");
    s.check(gl_action_antisym(moved, t2, p) == gl_action_antisym(a, t * t2, p), "group law");
    s.check(moved == AltMatrix::from_linear(inverse(t)) * a * compound(t, p), "third factor is the compound");
  });
  return s;
}

// ---------------------------------------------------------------------------
// Criterion 6

inline SuiteResult composition_oracle(std::uint64_t seed) {
  SuiteResult s{"composition_oracle", 6};
  Rng rng(detail::suite_seed(seed, s.name));
  detail::repeat(s, 100, [&](int) {
    const int n_in = static_cast<int>(rng.uniform(1, 3)), n_mid = static_cast<int>(rng.uniform(1, 3)),
              n_out = static_cast<int>(rng.uniform(1, 3));
    const PolyMap psi = rng.polymap(n_in, n_mid, static_cast<int>(rng.uniform(0, 3)));
    const PolyMap phi = rng.polymap(n_mid, n_out, static_cast<int>(rng.uniform(0, 3)));
    const PolyMap comp = compose(phi, psi);
    s.check(comp == oracle::substitute(phi, psi), "blocks match substitution");
    for (int j = 0; j < 2; ++j) {
      const Vector y = rng.vector(n_in);
      s.check(eval(comp, y) == eval(phi, eval(psi, y)), "pointwise composition");
      s.check(eval(comp, y) == oracle::eval_polynomials(oracle::to_polynomials(comp), y), "eval vs polynomial");
    }

    // Exp(M_phi Exp(x)) = Exp(M_phi) Exp(x), compared up to row weight 2.
    const int rmax = 2;
    const Vector x = rng.vector(n_mid);
    const BlockMatrix lhs2 = exp_vector(eval(phi, x), rmax);
    const BlockMatrix rhs2 = exp_block(phi.to_block_matrix(), rmax, rmax * phi.degree()) *
                             exp_vector(x, rmax * phi.degree());
    s.check(lhs2 == rhs2, "Exp(phi(x)) = Exp(M_phi) Exp(x)");

    // Exp(M_phi Exp(M_psi)) = Exp(M_phi) Exp(M_psi), same row bound.
    const int mid = rmax * phi.degree();
    const int top = mid * psi.degree();
    const BlockMatrix lhs4 = exp_block(comp.to_block_matrix(), rmax, top);
    const BlockMatrix rhs4 = exp_block(phi.to_block_matrix(), rmax, mid) * exp_block(psi.to_block_matrix(), mid, top);
    s.check(lhs4 == rhs4, "Exp(M_phi Exp(M_psi)) = Exp(M_phi) Exp(M_psi)");
  });
  detail::repeat(s, 30, [&](int) {
    const int a = static_cast<int>(rng.uniform(1, 2)), b = static_cast<int>(rng.uniform(1, 2)),
              c = static_cast<int>(rng.uniform(1, 2)), d = static_cast<int>(rng.uniform(1, 2));
    const PolyMap chi = rng.polymap(a, b, static_cast<int>(rng.uniform(0, 2)));
    const PolyMap psi = rng.polymap(b, c, static_cast<int>(rng.uniform(0, 2)));
    const PolyMap phi = rng.polymap(c, d, static_cast<int>(rng.uniform(0, 2)));
    s.check(compose(compose(phi, psi), chi) == compose(phi, compose(psi, chi)), "associativity");
    s.check(compose(phi, PolyMap::identity(c)) == phi && compose(PolyMap::identity(d), phi) == phi, "identity");
  });
  detail::repeat(s, 30, [&](int) {
    const int n = static_cast<int>(rng.uniform(1, 2)), m = static_cast<int>(rng.uniform(1, 2));
    const PolyMap phi = rng.polymap(n, m, static_cast<int>(rng.uniform(0, 2)));
    const PolyMap s_map = rng.polymap(m, m, static_cast<int>(rng.uniform(1, 2)));
    const PolyMap t_inv = rng.polymap(n, n, static_cast<int>(rng.uniform(1, 2)));
    const PolyMap moved = change_of_variables(phi, s_map, t_inv);
    const Vector xp = rng.vector(n);
    s.check(eval(moved, xp) == eval(s_map, eval(phi, eval(t_inv, xp))), "change of variables pointwise");
    const PolyMap aff = PolyMap::affine(rng.invertible(n), rng.vector(n));
    s.check(compose(aff, invert_affine(aff)) == PolyMap::identity(n), "affine inverse");
  });
  return s;
}

// ---------------------------------------------------------------------------
// Criterion 7

inline SuiteResult multilinear_products(std::uint64_t seed) {
  SuiteResult s{"multilinear_products", 7};
  Rng rng(detail::suite_seed(seed, s.name));
  auto dim = [&] { return static_cast<int>(rng.uniform(1, 3)); };

  detail::repeat(s, 100, [&](int) {
    const int n = dim(), out = dim(), p = static_cast<int>(rng.uniform(1, 3));
    const auto ts = symmetrize(rng.tensor(out, n, p), false);
    const auto ta = symmetrize(rng.tensor(out, n, p), true);
    const auto args = detail::random_args(rng, p, n);
    const SymMultiMap ms = sym_map_from_tensor(ts);
    const AltMultiMap ma = alt_map_from_tensor(ta);
    s.check(eval_sym(ms, args) == tensor_eval(ts, args), "symmetric representation");
    s.check(eval_alt(ma, args) == tensor_eval(ta, args), "antisymmetric representation");
    if (p >= 2) {
      auto swapped = args;
      std::swap(swapped[0], swapped[1]);
      s.check(eval_sym(ms, swapped) == eval_sym(ms, args), "symmetry under a swap");
      Vector neg = eval_alt(ma, args);
      for (auto& v : neg) v = -v;
      s.check(eval_alt(ma, swapped) == neg, "sign under a swap");
      auto repeated = args;
      repeated[1] = repeated[0];
      s.check(eval_alt(ma, repeated) == Vector(static_cast<std::size_t>(out)), "repeated argument");
    }
  });

  detail::repeat(s, 100, [&](int) {
    const int n = dim(), n1 = dim(), n2 = dim(), n3 = dim();
    const int p = static_cast<int>(rng.uniform(1, 2)), q = static_cast<int>(rng.uniform(1, 2));
    oracle::Pairing pairing{n3, n1, n2, {}};
    for (int i = 0; i < n3 * n1 * n2; ++i) pairing.coeffs.push_back(rng.rational());
    const BilinearMap c = BilinearMap::from_coefficients(n3, n1, n2, pairing.coeffs);
    const Vector x1 = rng.vector(n1), x2 = rng.vector(n2);
    s.check(c(x1, x2) == pairing(x1, x2), "padding identity");

    const auto ta = symmetrize(rng.tensor(n1, n, p), false), tb = symmetrize(rng.tensor(n2, n, q), false);
    const SymMultiMap sp = product_sym(sym_map_from_tensor(ta), sym_map_from_tensor(tb), c);
    const auto args = detail::random_args(rng, p + q, n);
    s.check(eval_sym(sp, args) == oracle::sym_product_eval(ta, tb, pairing, args), "symmetric product pointwise");

    const auto ua = symmetrize(rng.tensor(n1, n, p), true), ub = symmetrize(rng.tensor(n2, n, q), true);
    const AltMultiMap ap = product_alt(alt_map_from_tensor(ua), alt_map_from_tensor(ub), c);
    s.check(eval_alt(ap, args) == oracle::alt_product_eval(ua, ub, pairing, args), "antisymmetric product pointwise");
  });

  detail::repeat(s, 100, [&](int) {
    const int n = dim(), d = dim(), n3 = dim();
    const int p = static_cast<int>(rng.uniform(1, 2)), q = static_cast<int>(rng.uniform(1, 2));
    const auto args = detail::random_args(rng, p + q, n);

    const SymMatrix cs = rng.sym(n3, d, 1, 2);
    oracle::Pairing sym_pairing{n3, d, d, {}};
    for (int k = 0; k < n3; ++k)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          const auto v = (cs * odot(SymMatrix::column(detail::unit_vector(d, i)), SymMatrix::column(detail::unit_vector(d, j))))
                             .to_vector();
          sym_pairing.coeffs.push_back(v[static_cast<std::size_t>(k)] / Rational(2));
        }
    const auto ta = symmetrize(rng.tensor(d, n, p), false), tb = symmetrize(rng.tensor(d, n, q), false);
    const SymMultiMap a = sym_map_from_tensor(ta), b = sym_map_from_tensor(tb);
    const SymMultiMap shortcut = product_sym_symmetric_pairing(a, b, cs);
    s.check(shortcut == product_sym(a, b, bilinear_from_symmetric_pairing(cs)), "symmetric pairing shortcut");
    s.check(eval_sym(shortcut, args) == oracle::sym_product_eval(ta, tb, sym_pairing, args),
            "symmetric pairing shortcut pointwise");

    const AltMatrix ca = rng.alt(n3, d, 1, 2);
    oracle::Pairing alt_pairing{n3, d, d, {}};
    for (int k = 0; k < n3; ++k)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          const auto v = (ca * wedge(AltMatrix::column(detail::unit_vector(d, i)), AltMatrix::column(detail::unit_vector(d, j))))
                             .to_vector();
          alt_pairing.coeffs.push_back(v[static_cast<std::size_t>(k)]);
        }
    const auto ua = symmetrize(rng.tensor(d, n, p), true), ub = symmetrize(rng.tensor(d, n, q), true);
    const AltMultiMap e = alt_map_from_tensor(ua), f = alt_map_from_tensor(ub);
    const AltMultiMap alt_shortcut = product_alt_antisymmetric_pairing(e, f, ca);
    s.check(alt_shortcut == product_alt(e, f, bilinear_from_antisymmetric_pairing(ca)), "antisymmetric pairing shortcut");
    s.check(eval_alt(alt_shortcut, args) == oracle::alt_product_eval(ua, ub, alt_pairing, args),
            "antisymmetric pairing shortcut pointwise");
  });
  return s;
}

// ---------------------------------------------------------------------------
// Criterion 8

inline SuiteResult odot_algebra_laws(std::uint64_t seed) {
  SuiteResult s{"odot_algebra_laws", 8};
  Rng rng(detail::suite_seed(seed, s.name));
  auto w = [&] { return static_cast<int>(rng.uniform(0, 2)); };
  auto dim = [&] { return static_cast<int>(rng.uniform(1, 3)); };
  detail::repeat(s, 60, [&](int) {
    const int n = dim(), np = dim();
    const int p = w(), pp = w(), q = w(), qp = w(), r = static_cast<int>(rng.uniform(0, 1)), rp = static_cast<int>(rng.uniform(0, 1));
    const SymMatrix a = rng.sym(n, np, p, pp), a2 = rng.sym(n, np, p, pp), b = rng.sym(n, np, q, qp),
                    c = rng.sym(n, np, r, rp);
    const Rational lambda = rng.rational();
    s.check(odot(a, b) == oracle::odot_direct(a, b), "definition");
    s.check(odot(a, b) == odot(b, a), "commutativity");
    s.check(odot(a + a2, b) == odot(a, b) + odot(a2, b), "additivity");
    s.check(odot(odot(a, b), c) == odot(a, odot(b, c)), "associativity");
    s.check(odot(a * lambda, b) == odot(a, b) * lambda, "scalar pull-out");
    s.check(odot(a, SymMatrix(n, np, q, qp)).is_zero(), "zero factor");
  });
  detail::repeat(s, 60, [&](int) {
    const int n = dim(), p = static_cast<int>(rng.uniform(1, 2)), q = static_cast<int>(rng.uniform(0, 2));
    auto triangular = [&](int weight) {
      const auto size = stratum_size(n, weight);
      DenseMatrix f(size, size);
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i; j < size; ++j) f(i, j) = rng.rational();
      return SymMatrix(n, n, weight, weight, std::move(f));
    };
    s.check(is_upper_triangular(odot(triangular(p), triangular(q)).flat()), "triangular closure");
  });
  detail::repeat(s, 60, [&](int) {
    const int n = dim(), np = dim();
    SymMatrix a = rng.sym(n, np, w(), w()), b = rng.sym(n, np, w(), w());
    if (a.is_zero() || b.is_zero()) return;
    s.check(!odot(a, b).is_zero(), "no zero divisors");
  });
  detail::repeat(s, 60, [&](int) {
    const int n = dim(), m = dim(), k = dim();
    const int p = w(), pp = static_cast<int>(rng.uniform(1, 2)), qp = w(), r = static_cast<int>(rng.uniform(1, 2));
    // (A (.) V) B = (A B) (.) V with A in M_{n,m}(p,p'), B in M_{m,k}(p',q'), V in M_{n,*}(r,0).
    const SymMatrix a = rng.sym(n, m, p, pp), b = rng.sym(m, k, pp, qp), v = rng.sym(n, 0, r, 0);
    s.check(odot(a, v.rebased(n, m)) * b == odot(a * b, v.rebased(n, k)), "(A (.) V) B = (AB) (.) V");
    // A (B (.) H) = (A B) (.) H with H in M_{*,k}(0,r).
    const SymMatrix h = rng.sym(0, k, 0, r);
    s.check(a * odot(b, h.rebased(m, k)) == odot(a * b, h.rebased(n, k)), "A (B (.) H) = (AB) (.) H");
  });
  return s;
}

inline SuiteResult odot_power_identities(std::uint64_t seed) {
  SuiteResult s{"odot_power_identities", 8};
  Rng rng(detail::suite_seed(seed, s.name));
  detail::repeat(s, 60, [&](int) {
    const int n = static_cast<int>(rng.uniform(1, 3)), m = static_cast<int>(rng.uniform(0, 4));
    const Vector x = rng.vector(n);
    const SymMatrix vm = odot_power(SymMatrix::column(x), m), hm = odot_power(SymMatrix::row(x), m);
    for (const auto& alpha : enumerate_stratum(n, m)) {
      Rational xa = 1;
      for (int i = 0; i < n; ++i) xa *= pow(x[static_cast<std::size_t>(i)], alpha[i]);
      s.check(vm.at(alpha, MultiIndex::zero(0)) == Rational(multinomial(alpha)) * xa, "v^(m) multinomial");
      s.check(hm.at(MultiIndex::zero(0), alpha) == Rational(factorial(m)) * xa, "h^(m) = m! h^alpha");
    }
  });
  detail::repeat(s, 60, [&](int) {
    const int n = static_cast<int>(rng.uniform(1, 3)), np = static_cast<int>(rng.uniform(1, 3));
    const int p = static_cast<int>(rng.uniform(0, 2)), q = static_cast<int>(rng.uniform(0, 2));
    const int pp = static_cast<int>(rng.uniform(0, 2)), qp = static_cast<int>(rng.uniform(0, 2));
    const SymMatrix a = rng.sym(n, np, pp, p), b = rng.sym(n, np, qp, q);
    const SymMatrix h = SymMatrix::row(rng.vector(n));
    auto hs = [&](int k) { return sym_power(h, k); };
    // (h^(p)/p! A) (.) (h^(q)/q! B) with A in M(p, *), B in M(q, *).
    const SymMatrix a1 = rng.sym(n, np, p, pp), b1 = rng.sym(n, np, q, qp);
    s.check(odot(hs(p) * a1, hs(q) * b1) == hs(p + q) * odot(a1, b1), "row scaled powers");
    const SymMatrix v = SymMatrix::column(rng.vector(np));
    auto vs = [&](int k) { return sym_power(v, k); };
    s.check(odot(a * vs(p), b * vs(q)) == odot(a, b) * vs(p + q), "column scaled powers");
  });
  detail::repeat(s, 60, [&](int) {
    const int n = static_cast<int>(rng.uniform(1, 3)), m = static_cast<int>(rng.uniform(1, 3));
    const DenseMatrix a = rng.matrix(n, n);
    const SymMatrix am = SymMatrix::from_linear(a);
    std::vector<SymMatrix> av, v;
    for (int i = 0; i < m; ++i) {
      const Vector x = rng.vector(n);
      v.push_back(SymMatrix::column(x));
      av.push_back(am * SymMatrix::column(x));
    }
    s.check(odot_all(av) == sym_power(am, m) * odot_all(v), "A v^1 (.) ... (.) A v^m");
  });
  detail::repeat(s, 60, [&](int) {
    // Common eigenvector v of A_1..A_k: A_i = V diag(lambda_i) V^{-1}, v = first column of V.
    const int n = static_cast<int>(rng.uniform(1, 3)), k = static_cast<int>(rng.uniform(1, 3));
    const DenseMatrix vm = rng.invertible(n), vinv = inverse(vm);
    std::vector<SymMatrix> as;
    Rational mu(factorial(k));
    for (int i = 0; i < k; ++i) {
      const Vector lambda = rng.vector(n);
      as.push_back(SymMatrix::from_linear(vm * DenseMatrix::diagonal(lambda) * vinv));
      mu *= lambda[0];
    }
    Vector col;
    for (int r = 0; r < n; ++r) col.push_back(vm(static_cast<std::size_t>(r), 0));
    const SymMatrix vk = odot_power(SymMatrix::column(col), k);
    s.check(odot_all(as) * vk == vk * mu, "common eigenvector");
  });
  return s;
}

inline SuiteResult shuffle_bijections(std::uint64_t) {
  SuiteResult s{"shuffle_bijections", 8};
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q)
      for (int r = 0; r <= 3; ++r) {
        const auto all = block_shuffles({p, q, r});
        s.check(all.size() == choose(p + q + r, p) * choose(q + r, q), "count");
        std::set<std::pair<std::vector<int>, std::vector<int>>> head, tail;
        for (const auto& s0 : all) {
          auto [sigma, tau] = shuffle_decompose(s0, p, q, r);
          s.check(is_block_shuffle(sigma, {p, q + r}) && is_block_shuffle(tau, {p, q, r}, {true, false, false}) &&
                      sigma * tau == s0 && sigma.sign() * tau.sign() == s0.sign(),
                  "head decomposition");
          head.insert({sigma.images(), tau.images()});
          auto [sigma2, tau2] = shuffle_decompose_tail(s0, p, q, r);
          s.check(is_block_shuffle(sigma2, {p + q, r}) && is_block_shuffle(tau2, {p, q, r}, {false, false, true}) &&
                      sigma2 * tau2 == s0 && sigma2.sign() * tau2.sign() == s0.sign(),
                  "tail decomposition");
          tail.insert({sigma2.images(), tau2.images()});
        }
        // Injective, and onto the product of the two shuffle sets.
        s.check(head.size() == all.size() && head.size() == block_shuffles({p, q + r}).size() * block_shuffles({q, r}).size(),
                "head bijection");
        s.check(tail.size() == all.size() && tail.size() == block_shuffles({p + q, r}).size() * block_shuffles({p, q}).size(),
                "tail bijection");
        // Shuffle signs agree with an independent enumeration.
        const auto brute = oracle::block_monotone_perms({p, q, r});
        bool same = brute.size() == all.size();
        for (std::size_t i = 0; same && i < all.size(); ++i) {
          std::vector<int> img;
          for (int x : brute[i]) img.push_back(x + 1);
          same = img == all[i].images() && oracle::inversion_sign(brute[i]) == all[i].sign();
        }
        s.check(same, "shuffle enumeration");
      }
  return s;
}

inline SuiteResult wedge_algebra_laws(std::uint64_t seed) {
  SuiteResult s{"wedge_algebra_laws", 8};
  Rng rng(detail::suite_seed(seed, s.name));
  auto w = [&] { return static_cast<int>(rng.uniform(0, 2)); };
  auto dim = [&] { return static_cast<int>(rng.uniform(1, 4)); };
  detail::repeat(s, 60, [&](int) {
    const int n = dim(), np = dim();
    const int p = w(), pp = w(), q = w(), qp = w(), r = w(), rp = w();
    const AltMatrix a = rng.alt(n, np, p, pp), a2 = rng.alt(n, np, p, pp), b = rng.alt(n, np, q, qp),
                    c = rng.alt(n, np, r, rp);
    const Rational lambda = rng.rational();
    s.check(wedge(a, b) == oracle::wedge_direct(a, b), "definition");
    const Rational sign = (p * q + pp * qp) % 2 ? -1 : 1;
    s.check(wedge(a, b) == wedge(b, a) * sign, "graded anticommutativity");
    s.check(wedge(a + a2, b) == wedge(a, b) + wedge(a2, b), "additivity");
    s.check(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)), "associativity");
    s.check(wedge(a * lambda, b) == wedge(a, b) * lambda, "scalar pull-out");
    s.check(multi_wedge({a, b, c}) == oracle::multi_wedge_direct({a, b, c}), "fold vs multi-factor sum");
    s.check(multi_wedge({a}) == a, "single factor");
  });
  detail::repeat(s, 60, [&](int) {
    const int n = dim(), p = static_cast<int>(rng.uniform(1, 2)), q = static_cast<int>(rng.uniform(0, 2));
    auto triangular = [&](int weight) {
      const auto size = choose(n, weight);
      DenseMatrix f(size, size);
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i; j < size; ++j) f(i, j) = rng.rational();
      return AltMatrix(n, n, weight, weight, std::move(f));
    };
    s.check(is_upper_triangular(wedge(triangular(p), triangular(q)).flat()), "triangular closure");
  });
  detail::repeat(s, 60, [&](int) {
    const int n = dim();
    const Vector x = rng.vector(n), y = rng.vector(n);
    const AltMatrix cx = AltMatrix::column(x), cy = AltMatrix::column(y);
    s.check(wedge(cx, cx).is_zero(), "x ^ x = 0");
    s.check(wedge(cx, cy) == wedge(cy, cx) * Rational(-1), "x ^ y = -y ^ x");
    // x^1 ^ ... ^ x^n is the determinant of the column matrix.
    DenseMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    std::vector<AltMatrix> cols;
    for (int j = 0; j < n; ++j) {
      const Vector v = rng.vector(n);
      for (int i = 0; i < n; ++i) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v[static_cast<std::size_t>(i)];
      cols.push_back(AltMatrix::column(v));
    }
    s.check(multi_wedge(cols).flat()(0, 0) == oracle::leibniz_det(m), "full wedge is the determinant");
  });
  return s;
}

inline SuiteResult index_combinatorics(std::uint64_t seed) {
  SuiteResult s{"index_combinatorics", 8};
  Rng rng(detail::suite_seed(seed, s.name));
  for (int n = 0; n <= 4; ++n)
    for (int p = 0; p <= 4; ++p) {
      const auto stratum = enumerate_stratum(n, p);
      bool ok = stratum.size() == stratum_size(n, p);
      for (std::size_t i = 0; ok && i < stratum.size(); ++i) {
        ok = rank_index(stratum[i]) == i && unrank_index(n, p, i) == stratum[i] &&
             (i == 0 || compare_graded(stratum[i - 1], stratum[i]) < 0);
      }
      s.check(ok, "graded ranking");
      const auto strict = enumerate_strict(n, p);
      ok = strict.size() == choose(n, p);
      for (std::size_t i = 0; ok && i < strict.size(); ++i) ok = rank_strict(strict[i]) == i && unrank_strict(n, p, i).entries() == strict[i].entries();
      s.check(ok, "strict ranking");
    }
  detail::repeat(s, 100, [&](int) {
    const int n = static_cast<int>(rng.uniform(1, 4));
    auto random_index = [&] {
      std::vector<int> e;
      for (int i = 0; i < n; ++i) e.push_back(static_cast<int>(rng.uniform(0, 3)));
      return MultiIndex(e);
    };
    const MultiIndex a = random_index(), b = random_index(), c = random_index();
    s.check((compare_graded(a, b) < 0) == (compare_graded(a + c, b + c) < 0), "translation compatibility");
    const int p = static_cast<int>(rng.uniform(0, a.weight()));
    Integer sum = 0;
    for (const auto& beta : enumerate_stratum(n, p)) sum += multi_binomial(a, beta);
    s.check(sum == binomial(a.weight(), p), "Vandermonde");
  });
  return s;
}

// ---------------------------------------------------------------------------
// Criterion 9

inline SuiteResult norm_laws(std::uint64_t seed) {
  SuiteResult s{"norm_laws", 9};
  Rng rng(detail::suite_seed(seed, s.name));
  for (double rho : {1.0, 1.5, 2.0, 3.0}) {
    const NormParams params(rho);
    detail::repeat(s, 200, [&](int) {
      const int n = static_cast<int>(rng.uniform(1, 4)), np = static_cast<int>(rng.uniform(1, 4));
      const int p = static_cast<int>(rng.uniform(0, 2)), pp = static_cast<int>(rng.uniform(0, 2));
      const int q = static_cast<int>(rng.uniform(0, 2)), qp = static_cast<int>(rng.uniform(0, 2));
      const AltMatrix a = rng.alt(n, np, p, pp), a2 = rng.alt(n, np, p, pp), b = rng.alt(n, np, q, qp);
      const double na = holder_norm(a, params), na2 = holder_norm(a2, params), nb = holder_norm(b, params);
      s.check(detail::leq(holder_norm(a + a2, params), na + na2), "triangle inequality");
      s.check(detail::leq(holder_norm(wedge(a, b), params), na * nb), "submultiplicativity");
      const Rational lambda = rng.rational();
      s.check(detail::close(holder_norm(a * lambda, params), std::fabs(to_double(lambda)) * na), "homogeneity");
      s.check((na == 0.0) == a.is_zero() && holder_norm(AltMatrix(n, np, p, pp), params) == 0.0, "definiteness");
    });
  }
  return s;
}

// ---------------------------------------------------------------------------
// Criterion 10

inline SuiteResult json_roundtrip(std::uint64_t seed) {
  SuiteResult s{"json_roundtrip", 10};
  Rng rng(detail::suite_seed(seed, s.name));
  auto again = [](const io::Json& j) { return io::Json::parse(j.dump()); };
  detail::repeat(s, 100, [&](int) {
    const int n = static_cast<int>(rng.uniform(0, 3)), np = static_cast<int>(rng.uniform(0, 3));
    const int p = static_cast<int>(rng.uniform(0, 3)), pp = static_cast<int>(rng.uniform(0, 3));
    const SymMatrix a = rng.sym(n, np, p, pp);
    s.check(io::sym_from_json(again(io::to_json(a))) == a, "SymMatrix");
    const AltMatrix b = rng.alt(n, np, p, pp);
    s.check(io::alt_from_json(again(io::to_json(b))) == b, "AltMatrix");
    const DenseMatrix d = rng.matrix(n, np);
    s.check(io::dense_from_json(again(io::to_json(d))) == d, "DenseMatrix");
    const PolyMap m = rng.polymap(std::max(n, 1), std::max(np, 1), static_cast<int>(rng.uniform(0, 3)));
    s.check(io::polymap_from_json(again(io::to_json(m))) == m, "PolyMap");
    const Rational r(Integer(rng.uniform(-1'000'000'000L, 1'000'000'000L)) * Integer(rng.uniform(1, 1'000'000'000L)),
                     Integer(rng.uniform(1, 1'000'000'000L)));
    s.check(io::rational_from_json(again(io::to_json(r))) == r, "Rational");
    const SymMultiMap sm(rng.sym(std::max(n, 1), np, 1, pp));
    s.check(io::sym_multimap_from_json(again(io::to_json(sm))) == sm, "SymMultiMap");
    const AltMultiMap am(rng.alt(std::max(n, 1), np, 1, pp));
    s.check(io::alt_multimap_from_json(again(io::to_json(am))) == am, "AltMultiMap");
    // Serialization is canonical: re-emitting gives the same bytes.
    s.check(io::to_json(io::sym_from_json(io::to_json(a))).dump() == io::to_json(a).dump(), "canonical bytes");
  });
  return s;
}

// ---------------------------------------------------------------------------

using SuiteFn = SuiteResult (*)(std::uint64_t);

struct SuiteEntry {
  int criterion;
  SuiteFn run;
};

inline const std::vector<SuiteEntry>& all_suites() {
  static const std::vector<SuiteEntry> suites = {
      {1, odot_pattern},        {2, gl_action_quadratic},        {3, wedge_minor_sums},
      {4, sym_power_laws},   {5, compound_laws},         {6, composition_oracle},
      {7, multilinear_products}, {8, odot_algebra_laws},           {8, odot_power_identities},
      {8, shuffle_bijections}, {8, wedge_algebra_laws},    {8, index_combinatorics},
      {9, norm_laws},            {10, json_roundtrip}};
  return suites;
}

/// Runs the suites backing one criterion, or all of them for criterion 0.
inline std::vector<SuiteResult> run_criterion(int criterion, std::uint64_t seed) {
  std::vector<SuiteResult> out;
  for (const auto& e : all_suites()) {
    if (criterion == 0 || e.criterion == criterion) out.push_back(e.run(seed));
  }
  return out;
}

inline std::string format_report(const std::vector<SuiteResult>& results, std::uint64_t seed) {
  std::ostringstream os;
  os << "multilin verify seed=" << seed << "\n";
  int ok = 0;
  for (const auto& r : results) {
    os << "[criterion " << r.criterion << "] " << r.name << ": " << r.passed << "/" << r.total << " "
       << (r.ok() ? "PASS" : "FAIL");
    if (!r.first_failure.empty()) os << " (first failure: " << r.first_failure << ")";
    os << "\n";
    ok += r.ok();
  }
  os << "suites passed: " << ok << "/" << results.size() << "\n";
  return os.str();
}

}  // namespace multilin::verify
