#include "novikov/field.hpp"

#include <cctype>

#include "novikov/errors.hpp"

namespace novikov {

Field Field::prime(unsigned long p) {
  const Integer z(p);
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    throw NovikovError("F_p requires a prime p, got " + std::to_string(p));
  return Field(p);
}

Field Field::parse(std::string_view name) {
  std::string s;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '_') s.push_back(c);
  if (s == "Q" || s == "QQ") return rationals();
  std::string digits;
  if (s.size() > 1 && (s[0] == 'F' || s[0] == 'f')) {
    digits = s.substr(1);
  } else if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')') {
    digits = s.substr(3, s.size() - 4);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("unknown coefficient field '" + std::string(name) + "'", 0);
  return prime(std::stoul(digits));
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

Rational Field::element(const Rational& x) const {
  if (p_ == 0) {
    Rational y = x;
    y.canonicalize();
    return y;
  }
  const Integer p(p_);
  Integer den;
  mpz_fdiv_r(den.get_mpz_t(), x.get_den().get_mpz_t(), p.get_mpz_t());
  if (sgn(den) == 0) throw NovikovError("coefficient has denominator divisible by " + p.get_str());
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  Integer r = x.get_num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
  return Rational(r);
}

Rational Field::add(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a + b;
  Integer r = a.get_num() + b.get_num();
  if (r >= p_) r -= p_;
  return Rational(r);
}

Rational Field::sub(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a - b;
  Integer r = a.get_num() - b.get_num();
  if (sgn(r) < 0) r += p_;
  return Rational(r);
}

Rational Field::neg(const Rational& a) const {
  if (p_ == 0) return -a;
  if (sgn(a) == 0) return a;
  return Rational(Integer(p_) - a.get_num());
}

Rational Field::mul(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a * b;
  Integer r = a.get_num() * b.get_num();
  mpz_fdiv_r_ui(r.get_mpz_t(), r.get_mpz_t(), p_);
  return Rational(r);
}

Rational Field::inv(const Rational& a) const {
  if (sgn(a) == 0) throw NovikovError("division by zero in " + name());
  if (p_ == 0) return 1 / a;
  Integer r;
  const Integer p(p_);
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t());
  return Rational(r);
}

}  // namespace novikov
