#pragma once

#include <cstddef>
#include <vector>

#include "novikov/exponent.hpp"

namespace novikov {

/// Dense row-major integer matrix.
using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix int_identity(std::size_t n);
IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b);

/// Column-style Hermite reduction: `form = input * transform` with `transform`
/// unimodular and `form` in column echelon shape (pivots positive, entries
/// left of a pivot reduced into [0, pivot)). The first `rank` columns of
/// `form` are nonzero, the remaining ones vanish.
struct ColumnHermite {
  IntMatrix form;
  IntMatrix transform;
  std::size_t rank = 0;
};

ColumnHermite column_hermite(const IntMatrix& input, std::size_t columns);

/// Basis of the integer kernel {v : input * v = 0}, one vector per entry.
std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& input, std::size_t columns);

/// Inverse of a unimodular matrix (exact; throws if not unimodular).
IntMatrix unimodular_inverse(const IntMatrix& u);

}  // namespace novikov
