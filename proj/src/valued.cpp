#include "novikov/valued.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "novikov/errors.hpp"

namespace novikov {

ValuedVector::ValuedVector(Field field, std::vector<NovikovSeries> entries)
    : field_(field), entries_(std::move(entries)) {
  for (const auto& e : entries_)
    if (!(e.field() == field_)) throw DimensionError("vector entries over mixed fields");
}

ValuedVector ValuedVector::zeros(Field field, std::size_t n) {
  return ValuedVector(field, std::vector<NovikovSeries>(n, NovikovSeries(field)));
}

ValuedVector ValuedVector::unit(Field field, std::size_t n, std::size_t i) {
  ValuedVector v = zeros(field, n);
  v.entries_.at(i) = NovikovSeries::constant(field, 1);
  return v;
}

bool ValuedVector::is_exact() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_exact(); });
}

bool ValuedVector::is_exact_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& e) { return e.is_exact_zero(); });
}

namespace {

void require_compatible(const ValuedVector& a, const ValuedVector& b) {
  if (a.size() != b.size())
    throw DimensionError("vector lengths differ: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  if (!(a.field() == b.field())) throw DimensionError("vectors over different fields");
}

}  // namespace

ValuedVector ValuedVector::operator-() const {
  ValuedVector out(*this);
  for (auto& e : out.entries_) e = -e;
  return out;
}

ValuedVector operator+(const ValuedVector& a, const ValuedVector& b) {
  require_compatible(a, b);
  ValuedVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out.entries_[i] = a.entries_[i] + b.entries_[i];
  return out;
}

ValuedVector operator-(const ValuedVector& a, const ValuedVector& b) {
  require_compatible(a, b);
  ValuedVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out.entries_[i] = a.entries_[i] - b.entries_[i];
  return out;
}

ValuedVector operator*(const NovikovSeries& s, const ValuedVector& v) {
  ValuedVector out(v);
  for (auto& e : out.entries_) e = s * e;
  return out;
}

ValuedVector ValuedVector::scaled(const Rational& c) const {
  ValuedVector out(*this);
  for (auto& e : out.entries_) e = e.scaled(c);
  return out;
}

ValuedVector ValuedVector::shifted(const Exponent& g) const {
  ValuedVector out(*this);
  for (auto& e : out.entries_) e = monomial_shift(e, g);
  return out;
}

ValuedVector ValuedVector::truncated(const Exponent& p) const {
  ValuedVector out(*this);
  for (auto& e : out.entries_) e = e.truncated(p);
  return out;
}

std::string ValuedVector::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + entries_[i].str() + "\"";
  }
  return out + "]";
}

ValuedMatrix::ValuedMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, NovikovSeries(field)) {}

ValuedMatrix ValuedMatrix::identity(Field field, std::size_t n) {
  ValuedMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = NovikovSeries::constant(field, 1);
  return m;
}

ValuedMatrix ValuedMatrix::from_columns(Field field, std::span<const ValuedVector> columns,
                                        std::size_t rows) {
  ValuedMatrix m(field, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows)
      throw DimensionError("column " + std::to_string(j) + " has length " +
                           std::to_string(columns[j].size()) + ", expected " +
                           std::to_string(rows));
    if (!(columns[j].field() == field)) throw DimensionError("column over a different field");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

ValuedVector ValuedMatrix::column(std::size_t j) const {
  std::vector<NovikovSeries> c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
  return ValuedVector(field_, std::move(c));
}

std::vector<ValuedVector> ValuedMatrix::columns() const {
  std::vector<ValuedVector> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

bool ValuedMatrix::is_exact() const {
  return std::all_of(data_.begin(), data_.end(), [](const auto& e) { return e.is_exact(); });
}

bool ValuedMatrix::is_exact_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const auto& e) { return e.is_exact_zero(); });
}

ValuedVector ValuedMatrix::apply(const ValuedVector& x) const {
  if (x.size() != cols_)
    throw DimensionError("matrix with " + std::to_string(cols_) + " columns applied to vector of length " +
                         std::to_string(x.size()));
  if (!(x.field() == field_)) throw DimensionError("matrix and vector over different fields");
  ValuedVector out = ValuedVector::zeros(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    NovikovSeries acc(field_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j).is_exact_zero() || x[j].is_exact_zero()) continue;
      acc += at(i, j) * x[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

ValuedMatrix operator*(const ValuedMatrix& a, const ValuedMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
  ValuedMatrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      NovikovSeries acc(a.field_);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a.at(i, k).is_exact_zero() || b.at(k, j).is_exact_zero()) continue;
        acc += a.at(i, k) * b.at(k, j);
      }
      out.at(i, j) = std::move(acc);
    }
  return out;
}

ValuedMatrix ValuedMatrix::rows_shifted(std::span<const Exponent> shifts) const {
  if (shifts.size() != rows_) throw DimensionError("rows_shifted: wrong number of shifts");
  ValuedMatrix out(*this);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = monomial_shift(at(i, j), shifts[i]);
  return out;
}

ValuedMatrix ValuedMatrix::with_column(const ValuedVector& c) const {
  if (c.size() != rows_) throw DimensionError("with_column: wrong length");
  ValuedMatrix out(field_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    out.at(i, cols_) = c[i];
  }
  return out;
}

ValuedMatrix ValuedMatrix::select(std::span<const std::size_t> rows,
                                  std::span<const std::size_t> cols) const {
  ValuedMatrix out(field_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(rows[i], cols[j]);
  return out;
}

namespace {

Valuation min_valuation(const ValuedVector& v, std::span<const Exponent> t) {
  std::optional<Exponent> known;
  std::optional<Exponent> unknown;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Valuation vi = v[i].valuation();
    if (vi.is_infinite()) continue;
    const Exponent x = t.empty() ? vi.value() : vi.value() - t[i];
    auto& slot = vi.is_finite() ? known : unknown;
    if (!slot || x < *slot) slot = x;
  }
  if (!known && !unknown) return Valuation::infinity();
  if (known && (!unknown || *known <= *unknown)) return Valuation::of(*known);
  return Valuation::at_least(*unknown);
}

}  // namespace

Valuation vec_valuation(const ValuedVector& v) { return min_valuation(v, {}); }

Valuation weighted_valuation(const ValuedVector& v, std::span<const Exponent> t) {
  if (t.size() != v.size())
    throw DimensionError("weighted_valuation: " + std::to_string(t.size()) + " weights for " +
                         std::to_string(v.size()) + " entries");
  if (v.size() == 0) return Valuation::infinity();
  return min_valuation(v, t);
}

double Distance::approximate() const {
  if (exponent.is_infinite()) return 0.0;
  if (exponent.is_unknown()) return std::numeric_limits<double>::quiet_NaN();
  return std::exp(-exponent.value().value().get_d());
}

std::string Distance::str() const {
  if (exponent.is_infinite()) return "0";
  if (exponent.is_unknown()) return "<= e^(-(" + exponent.bound().str() + "))";
  return "e^(-(" + exponent.value().str() + "))";
}

Distance distance(const ValuedVector& v, const ValuedVector& w) {
  return Distance{vec_valuation(v - w)};
}

std::optional<Exponent> precision_floor(const ValuedVector& v) {
  std::optional<Exponent> p;
  for (const auto& e : v.entries()) p = min_precision(p, e.precision());
  return p;
}

std::vector<Rational> leading_coefficients(const ValuedVector& v, const Exponent& at) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& e : v.entries()) out.push_back(e.coefficient_at(at));
  return out;
}

std::vector<Exponent> support(const ValuedVector& v) {
  std::vector<Exponent> out;
  for (const auto& e : v.entries())
    for (const auto& t : e.terms()) out.push_back(t.exponent);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace novikov
