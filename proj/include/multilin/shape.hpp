#pragma once

#include <string>

#include "multilin/errors.hpp"

namespace multilin::detail {

// A side of weight zero has a single index whatever its base dimension, so
// the base only has to agree between two operands when both weights are
// positive.
inline int resolve_base(int base_a, int weight_a, int base_b, int weight_b, const char* what) {
  if (weight_a == 0) return weight_b == 0 ? base_a : base_b;
  if (weight_b == 0 || base_a == base_b) return base_a;
  throw DimensionError(std::string(what) + " base dimension mismatch: " + std::to_string(base_a) + " vs " +
                       std::to_string(base_b));
}

inline bool same_base(int base_a, int base_b, int weight) { return weight == 0 || base_a == base_b; }

}  // namespace multilin::detail
