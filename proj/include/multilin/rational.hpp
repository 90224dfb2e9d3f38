#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars backed by GMP.
 *
 * Every value is kept in canonical form: gcd(num, den) = 1, den > 0, and
 * zero is 0/1. Equality is therefore structural.
 */

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include "multilin/errors.hpp"

namespace multilin {

using Integer = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  /// Parses "p/q" or "p" (optional leading sign, decimal digits only).
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    auto num_part = text.substr(0, slash);
    auto den_part = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    Integer num, den;
    if (!parse_integer(num_part, num) || !parse_integer(den_part, den) || den_part.front() == '-' ||
        den_part.front() == '+') {
      throw SchemaError("malformed rational \"" + std::string(text) + "\"");
    }
    if (den == 0) throw SchemaError("rational \"" + std::string(text) + "\" has zero denominator");
    return Rational(num, den);
  }

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Always "num/den", e.g. "-3/7", "0/1", "5/1".
  std::string str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

  Rational operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
  }
  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  const mpq_class& raw() const { return q_; }

 private:
  static bool parse_integer(std::string_view s, Integer& out) {
    if (s.empty()) return false;
    std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') return false;
    }
    std::string digits(s.substr(s.front() == '+' ? 1 : 0));
    return out.set_str(digits, 10) == 0;
  }

  mpq_class q_;
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

/// x^e for any integer e; negative exponents invert.
inline Rational pow(const Rational& x, long e) {
  if (e < 0) {
    if (x.is_zero()) throw DomainError("zero raised to a negative power");
    return pow(Rational(1) / x, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), x.numerator().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), x.denominator().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);
}

inline Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// C(n, k), zero outside 0 <= k <= n.
inline Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// Nearest binary64 (round half to even). Throws OverflowError when the
/// magnitude rounds beyond the largest finite double.
inline double to_double(const Rational& x) {
  if (x.is_zero()) return 0.0;
  Integer a = abs(x.numerator());
  Integer b = x.denominator();
  long bits_a = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
  long bits_b = static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2));

  // Choose a scale 2^s so that q = floor(|x| 2^s) has 53 significant bits, but
  // never finer than the subnormal unit 2^-1074.
  auto divide = [&](long s, Integer& q, Integer& r) {
    Integer num = a, den = b;
    if (s >= 0) {
      mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(s));
    } else {
      mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(-s));
    }
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return den;
  };
  long s = 53 - (bits_a - bits_b);
  Integer q, r;
  Integer den = divide(s, q, r);
  if (mpz_sizeinbase(q.get_mpz_t(), 2) > 53) {
    --s;
    den = divide(s, q, r);
  }
  if (s > 1074) {
    s = 1074;
    den = divide(s, q, r);
  }
  Integer twice_r = 2 * r;
  int c = cmp(twice_r, den);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

  if (s < -1100) throw OverflowError("rational " + x.str() + " exceeds binary64 range");
  double mant = q.get_d();  // exact: q <= 2^53
  double out = std::ldexp(mant, static_cast<int>(-s));
  if (std::isinf(out)) throw OverflowError("rational " + x.str() + " exceeds binary64 range");
  return x.sign() < 0 ? -out : out;
}

}  // namespace multilin
