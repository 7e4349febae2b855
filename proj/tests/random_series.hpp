#pragma once

#include <random>

#include "novikov/series.hpp"

namespace novikov::testing {

/// Random series with exponents k/den, k in [-8, 8], up to 4 terms; with
/// probability `inexact` it carries a finite precision above its terms.
inline NovikovSeries random_series(std::mt19937_64& rng, const Field& f, long den = 2,
                                   double inexact = 0.0, bool allow_zero = true) {
  std::uniform_int_distribution<long> k(-8, 8), count(allow_zero ? 0 : 1, 4), c(-4, 4),
      extra(0, 6);
  std::bernoulli_distribution imprecise(inexact);
  std::vector<Term> terms;
  const long n = count(rng);
  for (long i = 0; i < n; ++i) {
    long coeff = 0;
    while (coeff == 0 || (!f.is_rationals() && coeff % static_cast<long>(f.characteristic()) == 0))
      coeff = c(rng);
    Rational e(k(rng), den);
    e.canonicalize();
    terms.push_back(Term{Exponent(e), Rational(coeff)});
  }
  NovikovSeries s(f, terms);
  if (!allow_zero && s.is_exact_zero()) s = NovikovSeries::constant(f, 1);
  if (imprecise(rng)) {
    Exponent top = s.terms().empty() ? Exponent(0) : s.terms().back().exponent;
    Rational p = top.value() + Rational(extra(rng) + 1, den);
    p.canonicalize();
    s = s.truncated(Exponent(p));
  }
  return s;
}

}  // namespace novikov::testing
