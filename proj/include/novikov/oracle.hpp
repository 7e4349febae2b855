#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "novikov/errors.hpp"
#include "novikov/valued.hpp"

namespace novikov {

// Brute-force reference for best approximation over truncated Novikov rings.
// Uses only series arithmetic and plain linear algebra over F_p; nothing from
// the reduction engine.

struct OracleConfig {
  Field field = Field::prime(2);
  long denominator = 1;   // group (1/denominator) Z
  Exponent bound = 2;     // instance exponents and weights lie in [-bound, bound]
  Exponent precision = 4;
  std::size_t max_dimension = 3;
  std::uint64_t max_enumeration = std::uint64_t{1} << 22;
  std::ostream* log = nullptr;

  /// Throws NovikovError when the configuration itself is out of range.
  void validate() const;
};

/// Search window for x: support on `columns`, exponents of x_j on the group
/// lattice in [lower, upper[j]).
struct OracleWindow {
  std::size_t rank = 0;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> columns;
  Exponent lower;
  std::vector<Exponent> upper;
  std::vector<std::vector<Exponent>> slots;  // per selected column
  std::size_t variables = 0;
  long double log2_space = 0;  // variables * log2(p)
};

struct OracleResult {
  /// Finite value below the precision, Valuation::at_least(precision) when
  /// every residual below the precision can be cleared, +infinity when w = 0.
  Valuation value = Valuation::infinity();
  OracleWindow window;
  std::uint64_t visited = 0;
};

class SearchSpaceOverflow : public NovikovError {
 public:
  using NovikovError::NovikovError;
};

/// Throws NovikovError when (A, t, w) violate the configured bounds.
void check_oracle_bounds(const ValuedMatrix& a, const WeightVector& t, const ValuedVector& w,
                         const OracleConfig& cfg);

OracleWindow oracle_window(const ValuedMatrix& a, const WeightVector& t, const ValuedVector& w,
                           const OracleConfig& cfg);

/// Literal enumeration of every coefficient assignment in the window.
/// Throws SearchSpaceOverflow beyond cfg.max_enumeration assignments.
OracleResult oracle_best_approx(const ValuedMatrix& a, const WeightVector& t,
                                const ValuedVector& w, const OracleConfig& cfg);

/// Same quantity by feasibility of the coefficient equations, level by level.
OracleResult oracle_best_approx_linear(const ValuedMatrix& a, const WeightVector& t,
                                       const ValuedVector& w, const OracleConfig& cfg);

/// True when the enumeration space of the window fits cfg.max_enumeration.
bool enumeration_fits(const OracleWindow& window, const OracleConfig& cfg);

}  // namespace novikov
