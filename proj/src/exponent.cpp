#include "novikov/exponent.hpp"

#include <cctype>
#include <stdexcept>

#include "novikov/errors.hpp"

namespace novikov {

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t end = text.size();
  while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  const std::string body(text.substr(i, end - i));
  if (body.empty()) throw ParseError("empty rational", i);

  std::size_t k = 0;
  if (body[k] == '-' || body[k] == '+') ++k;
  const std::size_t num_start = k;
  while (k < body.size() && std::isdigit(static_cast<unsigned char>(body[k]))) ++k;
  if (k == num_start) throw ParseError("expected digits in rational '" + body + "'", i + k);
  if (k < body.size()) {
    if (body[k] != '/') throw ParseError("unexpected character in rational '" + body + "'", i + k);
    ++k;
    const std::size_t den_start = k;
    while (k < body.size() && std::isdigit(static_cast<unsigned char>(body[k]))) ++k;
    if (k == den_start || k != body.size())
      throw ParseError("malformed denominator in rational '" + body + "'", i + k);
  }
  std::string normalized = body[0] == '+' ? body.substr(1) : body;
  Rational q;
  if (q.set_str(normalized, 10) != 0) throw ParseError("malformed rational '" + body + "'", i);
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + body + "'", i);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_exponent(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

Exponent::Exponent(long num, long den) : value_(num, den) {
  if (den == 0) throw std::invalid_argument("Exponent: zero denominator");
  value_.canonicalize();
}

Exponent::Exponent(Rational value) : value_(std::move(value)) { value_.canonicalize(); }

Exponent& Exponent::operator+=(const Exponent& o) {
  value_ += o.value_;
  return *this;
}

Exponent& Exponent::operator-=(const Exponent& o) {
  value_ -= o.value_;
  return *this;
}

Exponent operator*(const Integer& k, const Exponent& e) {
  return Exponent(Rational(Rational(k) * e.value_));
}

std::optional<Exponent> min_precision(const std::optional<Exponent>& a,
                                      const std::optional<Exponent>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

const Exponent& Valuation::value() const {
  if (kind_ == Kind::infinite) throw std::logic_error("Valuation::value on +infinity");
  return value_;
}

Valuation Valuation::shifted(const Exponent& by) const {
  if (kind_ == Kind::infinite) return *this;
  return Valuation(kind_, value_ + by);
}

std::string Valuation::str() const {
  switch (kind_) {
    case Kind::finite:
      return value_.str();
    case Kind::infinite:
      return "inf";
    case Kind::unknown:
      return ">=" + value_.str();
  }
  return {};
}

bool operator==(const Valuation& a, const Valuation& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ == Valuation::Kind::infinite || a.value_ == b.value_;
}

FiltrationLevel FiltrationLevel::negated(const Valuation& v) {
  switch (v.kind()) {
    case Valuation::Kind::finite:
      return of(-v.value());
    case Valuation::Kind::infinite:
      return minus_infinity();
    case Valuation::Kind::unknown:
      return at_most(-v.bound());
  }
  return minus_infinity();
}

const Exponent& FiltrationLevel::value() const {
  if (kind_ == Kind::minus_infinity) throw std::logic_error("FiltrationLevel::value on -infinity");
  return value_;
}

std::string FiltrationLevel::str() const {
  switch (kind_) {
    case Kind::finite:
      return format_rational(value_.value());
    case Kind::minus_infinity:
      return "-inf";
    case Kind::unknown:
      return "<=" + format_rational(value_.value());
  }
  return {};
}

bool operator==(const FiltrationLevel& a, const FiltrationLevel& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ == FiltrationLevel::Kind::minus_infinity || a.value_ == b.value_;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  // gcd(p/q, r/s) = gcd(p*s, r*q) / (q*s)
  Integer num;
  const Integer ps = a.get_num() * b.get_den();
  const Integer rq = b.get_num() * a.get_den();
  mpz_gcd(num.get_mpz_t(), ps.get_mpz_t(), rq.get_mpz_t());
  Rational g(num, a.get_den() * b.get_den());
  g.canonicalize();
  return g;
}

ValueGroup::ValueGroup(const Rational& generator) : generator_(abs(generator)) {
  generator_.canonicalize();
}

ValueGroup ValueGroup::generated_by(std::span<const Rational> values) {
  Rational g(0);
  for (const auto& v : values) g = rational_gcd(g, v);
  return ValueGroup(g);
}

ValueGroup ValueGroup::generated_by(std::span<const Exponent> values) {
  Rational g(0);
  for (const auto& v : values) g = rational_gcd(g, v.value());
  return ValueGroup(g);
}

bool ValueGroup::contains(const Rational& x) const {
  if (is_trivial()) return sgn(x) == 0;
  const Rational q = x / generator_;
  return q.get_den() == 1;
}

ValueGroup ValueGroup::join(const ValueGroup& other) const {
  return ValueGroup(rational_gcd(generator_, other.generator_));
}

std::string ValueGroup::str() const {
  if (is_trivial()) return "{0}";
  return "(" + format_exponent(generator_) + ")Z";
}

}  // namespace novikov
