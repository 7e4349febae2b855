#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "novikov/complex.hpp"

namespace novikov {

/// A weighted best-approximation problem.
struct Instance {
  Field field;
  long denominator = 1;  // instance data lives in (1/denominator) Z
  ValuedMatrix a;
  WeightVector t;
  ValuedVector w;
  Exponent precision = 4;
};

struct GeneratorParams {
  std::size_t max_terms = 2;
  long bound = 2;         // exponent window [-bound, bound]
  double density = 0.6;   // probability that an entry is nonzero
  std::size_t max_dim = 3;
  long max_precision = 6;
};

/// Seeded source of random exponents, coefficients and series.
class InstanceGenerator {
 public:
  using Params = GeneratorParams;

  explicit InstanceGenerator(std::uint64_t seed, Params params = {});

  std::uint64_t seed() const noexcept { return seed_; }
  const Params& params() const noexcept { return params_; }
  std::mt19937_64& engine() noexcept { return rng_; }

  long uniform(long lo, long hi);  // inclusive
  bool chance(double p);
  Rational coefficient(const Field& field);  // nonzero
  /// Random lattice point k/denominator in [lo, hi].
  Exponent lattice(long denominator, const Rational& lo, const Rational& hi);
  /// Series with 1..max_terms terms on the lattice inside [lo, hi].
  NovikovSeries series(const Field& field, long denominator, const Rational& lo,
                       const Rational& hi);

 private:
  std::uint64_t seed_;
  Params params_;
  std::mt19937_64 rng_;
};

/// Instance inside the oracle bounds: F2 or F3, G = Z or (1/2)Z, n, m <= 3,
/// exponents in [-2, 2], precision at most 6.
Instance random_instance(InstanceGenerator& gen);

/// Two-degree complex (degrees 1 and 0) whose boundary strictly lowers the
/// action; some degree-1 cycles are planted by making boundaries proportional.
FilteredComplex random_complex(InstanceGenerator& gen);

/// Random Lambda-combination of a basis of the cycles of c.
Chain random_cycle(InstanceGenerator& gen, const FilteredComplex& c);
/// Random chain with monomial-sum entries.
Chain random_chain(InstanceGenerator& gen, const FilteredComplex& c);

std::vector<std::string> fixture_names();
/// morse_circle, novikov_circle, torus_morse or two_generator_cancel.
FilteredComplex fixture(std::string_view name);

}  // namespace novikov
