#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "novikov/io.hpp"
#include "novikov/reduction.hpp"

namespace novikov::testing {

inline Rational Q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Exponent E(long num, long den = 1) { return Exponent(Q(num, den)); }

inline NovikovSeries S(const std::string& text, const Field& f = Field::rationals()) {
  return parse_series(text, f);
}

inline ValuedVector V(std::initializer_list<const char*> entries, const Field& f = Field::rationals()) {
  std::vector<NovikovSeries> out;
  for (const char* e : entries) out.push_back(parse_series(e, f));
  return ValuedVector(f, std::move(out));
}

/// Matrix from its columns.
inline ValuedMatrix M(std::initializer_list<std::initializer_list<const char*>> columns,
                      const Field& f = Field::rationals()) {
  std::vector<ValuedVector> cols;
  for (const auto& c : columns) cols.push_back(V(c, f));
  return ValuedMatrix::from_columns(f, cols, cols.empty() ? 0 : cols.front().size());
}

inline WeightVector W(std::initializer_list<Exponent> t) { return WeightVector(t); }

}  // namespace novikov::testing
