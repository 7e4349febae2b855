#pragma once

#include <string>
#include <string_view>

#include "novikov/exponent.hpp"

namespace novikov {

/// Coefficient field K: the rationals or a prime field F_p. Elements are
/// carried as `Rational`; for F_p the canonical representative is an integer
/// in [0, p).
class Field {
 public:
  Field() = default;  // Q
  static Field rationals() { return Field(); }
  /// Throws NovikovError unless p is prime.
  static Field prime(unsigned long p);
  /// "Q", "F2", "F_3", "GF(5)".
  static Field parse(std::string_view name);

  unsigned long characteristic() const noexcept { return p_; }
  bool is_rationals() const noexcept { return p_ == 0; }
  std::string name() const;

  /// Canonical representative; throws if the denominator vanishes mod p.
  Rational element(const Rational& x) const;
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  Rational mul(const Rational& a, const Rational& b) const;
  /// Throws NovikovError on zero.
  Rational inv(const Rational& a) const;
  bool is_zero(const Rational& a) const { return sgn(a) == 0; }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(unsigned long p) : p_(p) {}

  unsigned long p_ = 0;
};

}  // namespace novikov
