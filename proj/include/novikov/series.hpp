#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "novikov/exponent.hpp"
#include "novikov/field.hpp"

namespace novikov {

struct Term {
  Exponent exponent;
  Rational coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.exponent == b.exponent && a.coeff == b.coeff;
  }
};

/// An element of the Novikov ring Lambda_K(G), known modulo T^precision.
///
/// Normal form: terms strictly increasing in exponent, no zero coefficient,
/// every exponent below the precision. A missing precision means the series
/// is exact (a finite sum). Equality is equality of normal forms.
class NovikovSeries {
 public:
  /// Exact zero over `field`.
  explicit NovikovSeries(Field field = Field::rationals()) : field_(field) {}
  NovikovSeries(Field field, std::vector<Term> terms,
                std::optional<Exponent> precision = std::nullopt);

  static NovikovSeries constant(Field field, const Rational& c);
  static NovikovSeries monomial(Field field, const Rational& c, const Exponent& e);
  /// O(T^precision): indistinguishable from zero below `precision`.
  static NovikovSeries unknown_zero(Field field, const Exponent& precision);

  const Field& field() const noexcept { return field_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const std::optional<Exponent>& precision() const noexcept { return precision_; }
  bool is_exact() const noexcept { return !precision_.has_value(); }
  bool is_exact_zero() const noexcept { return terms_.empty() && !precision_; }
  /// No terms but finite precision.
  bool is_indistinguishable_from_zero() const noexcept { return terms_.empty() && precision_; }

  Valuation valuation() const;
  /// Coefficient of T^at; throws PrecisionError if at >= precision.
  Rational coefficient_at(const Exponent& at) const;

  /// Lowers the precision to min(precision, p).
  NovikovSeries truncated(const Exponent& p) const;

  NovikovSeries operator-() const;
  friend NovikovSeries operator+(const NovikovSeries& a, const NovikovSeries& b);
  friend NovikovSeries operator-(const NovikovSeries& a, const NovikovSeries& b);
  friend NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b);
  NovikovSeries& operator+=(const NovikovSeries& b) { return *this = *this + b; }
  NovikovSeries& operator-=(const NovikovSeries& b) { return *this = *this - b; }

  /// c * this for c in K.
  NovikovSeries scaled(const Rational& c) const;

  friend bool operator==(const NovikovSeries& a, const NovikovSeries& b);

  /// "3/1*T^(0) + 1/1*T^(5/2) + O(T^(4))"; exact zero prints "0".
  std::string str() const;

 private:
  void normalize();

  Field field_;
  std::vector<Term> terms_;
  std::optional<Exponent> precision_;
};

NovikovSeries add(const NovikovSeries& a, const NovikovSeries& b);
NovikovSeries multiply(const NovikovSeries& a, const NovikovSeries& b);

/// T^g * s: every exponent and the precision move by g.
NovikovSeries monomial_shift(const NovikovSeries& s, const Exponent& g);

/// t with s*t = 1 modulo T^target_precision, by geometric expansion of the
/// unit part. Exact when s is a monomial. Throws PrecisionError when s is
/// indistinguishable from zero.
NovikovSeries invert(const NovikovSeries& s, const Exponent& target_precision);

/// Parses the literal syntax produced by NovikovSeries::str(). Also accepts
/// bare rationals ("1", "-2/3"), "T", "T^2", "c*T^(e)", " - " separators and
/// a trailing "O(T^(p))". Throws ParseError with the offending position.
NovikovSeries parse_series(std::string_view text, const Field& field = Field::rationals());

}  // namespace novikov
