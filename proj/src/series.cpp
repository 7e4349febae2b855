#include "novikov/series.hpp"

#include <algorithm>
#include <cctype>

#include "novikov/errors.hpp"

namespace novikov {

namespace {

void require_same_field(const NovikovSeries& a, const NovikovSeries& b) {
  if (!(a.field() == b.field()))
    throw DimensionError("series over different fields: " + a.field().name() + " vs " +
                         b.field().name());
}

}  // namespace

NovikovSeries::NovikovSeries(Field field, std::vector<Term> terms,
                             std::optional<Exponent> precision)
    : field_(field), terms_(std::move(terms)), precision_(std::move(precision)) {
  normalize();
}

NovikovSeries NovikovSeries::constant(Field field, const Rational& c) {
  return NovikovSeries(field, {Term{Exponent(0), c}});
}

NovikovSeries NovikovSeries::monomial(Field field, const Rational& c, const Exponent& e) {
  return NovikovSeries(field, {Term{e, c}});
}

NovikovSeries NovikovSeries::unknown_zero(Field field, const Exponent& precision) {
  return NovikovSeries(field, {}, precision);
}

void NovikovSeries::normalize() {
  for (auto& t : terms_) t.coeff = field_.element(t.coeff);
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (precision_ && t.exponent >= *precision_) break;
    if (!merged.empty() && merged.back().exponent == t.exponent) {
      merged.back().coeff = field_.add(merged.back().coeff, t.coeff);
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return sgn(t.coeff) == 0; });
  terms_ = std::move(merged);
}

Valuation NovikovSeries::valuation() const {
  if (!terms_.empty()) return Valuation::of(terms_.front().exponent);
  if (precision_) return Valuation::at_least(*precision_);
  return Valuation::infinity();
}

Rational NovikovSeries::coefficient_at(const Exponent& at) const {
  if (precision_ && at >= *precision_)
    throw PrecisionError("coefficient of T^" + at.str() + " is beyond precision " +
                         precision_->str());
  auto it = std::lower_bound(terms_.begin(), terms_.end(), at,
                             [](const Term& t, const Exponent& e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == at) return it->coeff;
  return Rational(0);
}

NovikovSeries NovikovSeries::truncated(const Exponent& p) const {
  return NovikovSeries(field_, terms_, min_precision(precision_, p));
}

NovikovSeries NovikovSeries::operator-() const {
  NovikovSeries out(*this);
  for (auto& t : out.terms_) t.coeff = field_.neg(t.coeff);
  return out;
}

NovikovSeries operator+(const NovikovSeries& a, const NovikovSeries& b) {
  require_same_field(a, b);
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() + b.terms_.size());
  std::merge(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
             std::back_inserter(terms),
             [](const Term& x, const Term& y) { return x.exponent < y.exponent; });
  return NovikovSeries(a.field_, std::move(terms), min_precision(a.precision_, b.precision_));
}

NovikovSeries operator-(const NovikovSeries& a, const NovikovSeries& b) { return a + (-b); }

NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b) {
  require_same_field(a, b);
  if (a.is_exact_zero() || b.is_exact_zero()) return NovikovSeries(a.field_);
  // Effective lower bound on each valuation: the leading exponent if known,
  // otherwise the precision.
  const Exponent va = a.terms_.empty() ? *a.precision_ : a.terms_.front().exponent;
  const Exponent vb = b.terms_.empty() ? *b.precision_ : b.terms_.front().exponent;
  std::optional<Exponent> precision;
  if (b.precision_) precision = va + *b.precision_;
  if (a.precision_) precision = min_precision(precision, vb + *a.precision_);

  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  const Field& f = a.field_;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      Exponent e = x.exponent + y.exponent;
      if (precision && e >= *precision) continue;
      terms.push_back(Term{std::move(e), f.mul(x.coeff, y.coeff)});
    }
  return NovikovSeries(f, std::move(terms), std::move(precision));
}

NovikovSeries NovikovSeries::scaled(const Rational& c) const {
  const Rational k = field_.element(c);
  if (sgn(k) == 0) {
    return precision_ ? NovikovSeries(field_, {}, precision_) : NovikovSeries(field_);
  }
  NovikovSeries out(*this);
  for (auto& t : out.terms_) t.coeff = field_.mul(t.coeff, k);
  return out;
}

bool operator==(const NovikovSeries& a, const NovikovSeries& b) {
  return a.field_ == b.field_ && a.precision_ == b.precision_ && a.terms_ == b.terms_;
}

std::string NovikovSeries::str() const {
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += format_rational(t.coeff) + "*T^(" + t.exponent.str() + ")";
  }
  if (precision_) {
    if (!out.empty()) out += " + ";
    out += "O(T^(" + precision_->str() + "))";
  }
  return out.empty() ? "0" : out;
}

NovikovSeries add(const NovikovSeries& a, const NovikovSeries& b) { return a + b; }
NovikovSeries multiply(const NovikovSeries& a, const NovikovSeries& b) { return a * b; }

NovikovSeries monomial_shift(const NovikovSeries& s, const Exponent& g) {
  std::vector<Term> terms = s.terms();
  for (auto& t : terms) t.exponent += g;
  std::optional<Exponent> p = s.precision();
  if (p) *p += g;
  return NovikovSeries(s.field(), std::move(terms), std::move(p));
}

NovikovSeries invert(const NovikovSeries& s, const Exponent& target_precision) {
  const Valuation v = s.valuation();
  if (v.is_infinite()) throw NovikovError("invert: division by exact zero");
  if (v.is_unknown())
    throw PrecisionError("invert: series is indistinguishable from zero below T^" +
                         v.bound().str());
  const Field& f = s.field();
  const Rational lead_inv = f.inv(s.terms().front().coeff);
  // s = c T^v (1 + r) with nu(r) > 0.
  const NovikovSeries unit = monomial_shift(s, -v.value()).scaled(lead_inv);
  const NovikovSeries one = NovikovSeries::constant(f, 1);
  const NovikovSeries r = unit - one;
  if (r.is_exact_zero()) return NovikovSeries::monomial(f, lead_inv, -v.value());

  const std::optional<Exponent> q = min_precision(Exponent(target_precision), unit.precision());
  const NovikovSeries minus_r = (-r).truncated(*q);
  NovikovSeries sum = one.truncated(*q);
  NovikovSeries power = one.truncated(*q);
  for (;;) {
    power = (power * minus_r).truncated(*q);
    if (power.terms().empty()) break;
    sum += power;
  }
  return monomial_shift(sum, -v.value()).scaled(lead_inv);
}

namespace {

class SeriesParser {
 public:
  SeriesParser(std::string_view text, const Field& field) : text_(text), field_(field) {}

  NovikovSeries parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty series literal", pos_);
    std::vector<Term> terms;
    std::optional<Exponent> precision;
    bool first = true;
    while (true) {
      skip_ws();
      bool negative = false;
      if (!first) {
        if (peek() == '+') {
          ++pos_;
        } else if (peek() == '-') {
          negative = true;
          ++pos_;
        } else {
          throw ParseError("expected '+' or '-' between terms", pos_);
        }
        skip_ws();
      }
      while (peek() == '-' || peek() == '+') {
        if (peek() == '-') negative = !negative;
        ++pos_;
        skip_ws();
      }
      if (peek() == 'O') {
        if (negative) throw ParseError("O(...) term cannot be negated", pos_);
        precision = parse_big_o();
        skip_ws();
        if (!at_end()) throw ParseError("O(...) must be the last term", pos_);
        break;
      }
      Term t = parse_term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return NovikovSeries(field_, std::move(terms), std::move(precision));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  Rational parse_number(bool allow_sign) {
    const std::size_t start = pos_;
    if (allow_sign && (peek() == '-' || peek() == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) throw ParseError("expected a number", pos_);
    if (peek() == '/') {
      ++pos_;
      const std::size_t den = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == den) throw ParseError("expected a denominator", pos_);
    }
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      throw ParseError("malformed number", start);
    }
  }

  Exponent parse_exponent_after_T() {
    skip_ws();
    if (peek() != '^') return Exponent(1);
    ++pos_;
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      skip_ws();
      Rational e = parse_number(true);
      expect(')');
      return Exponent(e);
    }
    return Exponent(parse_number(true));
  }

  Term parse_term() {
    skip_ws();
    if (peek() == 'T') {
      ++pos_;
      return Term{parse_exponent_after_T(), Rational(1)};
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected a coefficient or 'T'", pos_);
    Rational c = parse_number(false);
    const std::size_t save = pos_;
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      skip_ws();
      if (peek() != 'T') throw ParseError("expected 'T' after '*'", pos_);
      ++pos_;
      return Term{parse_exponent_after_T(), std::move(c)};
    }
    pos_ = save;
    return Term{Exponent(0), std::move(c)};
  }

  Exponent parse_big_o() {
    ++pos_;  // 'O'
    expect('(');
    skip_ws();
    if (peek() != 'T') throw ParseError("expected 'T' inside O(...)", pos_);
    ++pos_;
    Exponent p = parse_exponent_after_T();
    expect(')');
    return p;
  }

  std::string_view text_;
  const Field& field_;
  std::size_t pos_ = 0;
};

}  // namespace

NovikovSeries parse_series(std::string_view text, const Field& field) {
  return SeriesParser(text, field).parse();
}

}  // namespace novikov
