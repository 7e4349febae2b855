#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace novikov {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "num/den", "num" or "-num/den". Throws ParseError.
Rational parse_rational(std::string_view text);

/// Always "num/den", e.g. "3/1".
std::string format_rational(const Rational& q);

/// Lowest terms, integers without denominator: "5/2", "3", "-1".
std::string format_exponent(const Rational& q);

/// An element of the valuation group G <= R. Exact rational, totally ordered.
class Exponent {
 public:
  Exponent() = default;
  Exponent(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Exponent(long num, long den);
  explicit Exponent(Rational value);

  const Rational& value() const noexcept { return value_; }
  std::string str() const { return format_exponent(value_); }

  Exponent operator-() const { return Exponent(Rational(-value_)); }
  Exponent& operator+=(const Exponent& o);
  Exponent& operator-=(const Exponent& o);

  friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }
  friend Exponent operator-(Exponent a, const Exponent& b) { return a -= b; }
  friend Exponent operator*(const Integer& k, const Exponent& e);

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Rational value_{0};
};

/// Minimum of two precisions where std::nullopt stands for +infinity.
std::optional<Exponent> min_precision(const std::optional<Exponent>& a,
                                      const std::optional<Exponent>& b);

/// Value of a valuation: a finite exponent, +infinity (exact zero), or
/// "unknown, at least `bound`" (indistinguishable from zero at precision).
class Valuation {
 public:
  enum class Kind { finite, infinite, unknown };

  static Valuation of(Exponent value) { return Valuation(Kind::finite, std::move(value)); }
  static Valuation infinity() { return Valuation(Kind::infinite, Exponent()); }
  static Valuation at_least(Exponent bound) { return Valuation(Kind::unknown, std::move(bound)); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  bool is_infinite() const noexcept { return kind_ == Kind::infinite; }
  bool is_unknown() const noexcept { return kind_ == Kind::unknown; }

  /// The exponent for finite values, the lower bound for unknown ones.
  const Exponent& value() const;
  const Exponent& bound() const { return value(); }

  Valuation shifted(const Exponent& by) const;

  /// "3/2", "inf" or ">=4".
  std::string str() const;

  friend bool operator==(const Valuation& a, const Valuation& b);

 private:
  Valuation(Kind kind, Exponent value) : kind_(kind), value_(std::move(value)) {}

  Kind kind_;
  Exponent value_;
};

/// Filtration level of a chain: finite, -infinity (the zero chain), or
/// "unknown, at most `bound`".
class FiltrationLevel {
 public:
  enum class Kind { finite, minus_infinity, unknown };

  static FiltrationLevel of(Exponent value) { return FiltrationLevel(Kind::finite, std::move(value)); }
  static FiltrationLevel minus_infinity() { return FiltrationLevel(Kind::minus_infinity, Exponent()); }
  static FiltrationLevel at_most(Exponent bound) { return FiltrationLevel(Kind::unknown, std::move(bound)); }
  /// ell = -nu_t.
  static FiltrationLevel negated(const Valuation& v);

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  bool is_minus_infinity() const noexcept { return kind_ == Kind::minus_infinity; }
  bool is_unknown() const noexcept { return kind_ == Kind::unknown; }
  const Exponent& value() const;

  std::string str() const;

  friend bool operator==(const FiltrationLevel& a, const FiltrationLevel& b);

 private:
  FiltrationLevel(Kind kind, Exponent value) : kind_(kind), value_(std::move(value)) {}

  Kind kind_;
  Exponent value_;
};

/// Nonnegative generator of the subgroup of Q generated by a and b.
Rational rational_gcd(const Rational& a, const Rational& b);

/// A finitely generated subgroup of Q. Such a group is always cyclic, so it is
/// stored as its nonnegative generator (0 for the trivial group).
class ValueGroup {
 public:
  ValueGroup() = default;
  explicit ValueGroup(const Rational& generator);

  static ValueGroup generated_by(std::span<const Rational> values);
  static ValueGroup generated_by(std::span<const Exponent> values);

  const Rational& generator() const noexcept { return generator_; }
  bool is_trivial() const { return sgn(generator_) == 0; }
  bool contains(const Rational& x) const;
  bool contains(const Exponent& x) const { return contains(x.value()); }
  bool contains(const ValueGroup& sub) const { return contains(sub.generator_); }
  ValueGroup join(const ValueGroup& other) const;

  std::string str() const;

  friend bool operator==(const ValueGroup& a, const ValueGroup& b) {
    return a.generator_ == b.generator_;
  }

 private:
  Rational generator_{0};
};

}  // namespace novikov
