#pragma once

/**
 * @file norms.hpp
 * @brief The rho-norm on antisymmetric matrix spaces, evaluated in binary64.
 *
 * ||A||_rho = ( sum |A[a,a']|^rho / (p! p'!)^(rho-1) )^(1/rho), rho >= 1.
 * It is submultiplicative under the wedge product. This is the only place
 * the library leaves exact arithmetic.
 */

#include <cmath>
#include <limits>

#include "multilin/alt_matrix.hpp"

namespace multilin {

class NormParams {
 public:
  explicit NormParams(double rho) : rho_(rho) {
    if (!(rho >= 1.0) || std::isinf(rho)) throw DomainError("norm exponent rho must be a finite real >= 1");
  }
  double rho() const { return rho_; }
  /// The conjugate exponent: 1/rho + 1/conj = 1; infinite for rho = 1.
  double conjugate() const {
    return rho_ == 1.0 ? std::numeric_limits<double>::infinity() : rho_ / (rho_ - 1.0);
  }

 private:
  double rho_;
};

inline double holder_norm(const AltMatrix& a, const NormParams& params) {
  const double rho = params.rho();
  double sum = 0.0;
  if (rho == 1.0) {
    for (const auto& x : a.flat().entries()) sum += std::fabs(to_double(x));
    return sum;
  }
  for (const auto& x : a.flat().entries()) sum += std::pow(std::fabs(to_double(x)), rho);
  const double fact = to_double(Rational(factorial(a.p()) * factorial(a.p_prime())));
  // (sum / fact^(rho-1))^(1/rho), split to keep the divisor out of pow(sum).
  return std::pow(sum, 1.0 / rho) / std::pow(fact, (rho - 1.0) / rho);
}

}  // namespace multilin
