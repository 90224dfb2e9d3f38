#pragma once

#include <stdexcept>
#include <string>

namespace multilin {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input violates a documented schema (JSON field, index validity).
struct SchemaError : Error {
  using Error::Error;
};

/// Operand shapes or base dimensions do not fit together.
struct DimensionError : Error {
  using Error::Error;
};

struct SingularMatrixError : Error {
  using Error::Error;
};

/// Argument outside the domain of an operation (negative power, division by
/// zero, index out of range, rho < 1, ...).
struct DomainError : Error {
  using Error::Error;
};

struct OverflowError : Error {
  using Error::Error;
};

}  // namespace multilin
