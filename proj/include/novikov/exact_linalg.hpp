#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "novikov/valued.hpp"

namespace novikov {

// Exact linear algebra over Lambda_K(G) for matrices whose entries are exact
// (finite) series. Rational exponents make G cyclic, G = g0*Z, so the entries
// are Laurent polynomials in s = T^g0 and ranks over Lambda equal ranks over
// K(s); these are computed by fraction-free (Bareiss) elimination over K[s].
// Every function returns std::nullopt when some entry is not exact.

struct ExactPivots {
  std::size_t rank = 0;
  std::vector<std::size_t> rows;  // a nonsingular rank x rank minor
  std::vector<std::size_t> cols;
};

std::optional<ExactPivots> exact_pivots(const ValuedMatrix& a);
std::optional<std::size_t> exact_rank(const ValuedMatrix& a);
/// Square matrices only (DimensionError otherwise).
std::optional<NovikovSeries> exact_determinant(const ValuedMatrix& a);
/// Basis of ker(a) over Lambda with exact entries (Cramer cofactors of a
/// nonsingular maximal minor).
std::optional<std::vector<ValuedVector>> exact_kernel_basis(const ValuedMatrix& a);

/// Rank by elimination with minimum-valuation pivots, all entries read modulo
/// T^precision. std::nullopt when the remaining block is indistinguishable
/// from zero without being exactly zero (rank undecided at this precision).
std::optional<std::size_t> rank_at_precision(const ValuedMatrix& a, const Exponent& precision);

}  // namespace novikov
