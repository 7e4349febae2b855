#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "novikov/series.hpp"

namespace novikov {

/// A vector in Lambda_K(G)^n.
class ValuedVector {
 public:
  ValuedVector() = default;
  explicit ValuedVector(Field field, std::vector<NovikovSeries> entries = {});

  static ValuedVector zeros(Field field, std::size_t n);
  /// The i-th standard basis vector.
  static ValuedVector unit(Field field, std::size_t n, std::size_t i);

  const Field& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const NovikovSeries& operator[](std::size_t i) const { return entries_[i]; }
  NovikovSeries& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<NovikovSeries>& entries() const noexcept { return entries_; }

  bool is_exact() const;
  bool is_exact_zero() const;

  ValuedVector operator-() const;
  friend ValuedVector operator+(const ValuedVector& a, const ValuedVector& b);
  friend ValuedVector operator-(const ValuedVector& a, const ValuedVector& b);
  ValuedVector& operator+=(const ValuedVector& b) { return *this = *this + b; }
  ValuedVector& operator-=(const ValuedVector& b) { return *this = *this - b; }
  /// s * v for a scalar s in Lambda.
  friend ValuedVector operator*(const NovikovSeries& s, const ValuedVector& v);
  ValuedVector scaled(const Rational& c) const;
  /// T^g * v.
  ValuedVector shifted(const Exponent& g) const;
  ValuedVector truncated(const Exponent& p) const;

  friend bool operator==(const ValuedVector& a, const ValuedVector& b) {
    return a.field_ == b.field_ && a.entries_ == b.entries_;
  }

  /// "[s_1, s_2, ...]" with quoted series literals.
  std::string str() const;

 private:
  Field field_;
  std::vector<NovikovSeries> entries_;
};

/// Weights t = (t_1, ..., t_n) of the weighted valuation.
using WeightVector = std::vector<Exponent>;

/// An n x m matrix over Lambda_K(G), stored row-major.
class ValuedMatrix {
 public:
  ValuedMatrix() = default;
  ValuedMatrix(Field field, std::size_t rows, std::size_t cols);

  static ValuedMatrix identity(Field field, std::size_t n);
  /// Throws DimensionError on ragged input.
  static ValuedMatrix from_columns(Field field, std::span<const ValuedVector> columns,
                                   std::size_t rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const NovikovSeries& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  NovikovSeries& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  ValuedVector column(std::size_t j) const;
  std::vector<ValuedVector> columns() const;
  bool is_exact() const;
  bool is_exact_zero() const;

  /// A * x.
  ValuedVector apply(const ValuedVector& x) const;
  friend ValuedMatrix operator*(const ValuedMatrix& a, const ValuedMatrix& b);

  /// Row i multiplied by T^{shifts[i]}.
  ValuedMatrix rows_shifted(std::span<const Exponent> shifts) const;
  /// Appends a column.
  ValuedMatrix with_column(const ValuedVector& c) const;
  /// Sub-matrix on the given rows and columns (in that order).
  ValuedMatrix select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  friend bool operator==(const ValuedMatrix& a, const ValuedMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<NovikovSeries> data_;
};

/// min_i nu(a_i), tri-state: unknown when an undetermined entry could be
/// smaller than every known one.
Valuation vec_valuation(const ValuedVector& v);

/// min_i (nu(a_i) - t_i). Throws DimensionError on length mismatch.
Valuation weighted_valuation(const ValuedVector& v, std::span<const Exponent> t);

/// d(v, w) = exp(-nu(v - w)), kept exact as its exponent.
struct Distance {
  Valuation exponent;

  bool is_zero() const { return exponent.is_infinite(); }
  /// Floating value for display only; NaN when unknown.
  double approximate() const;
  std::string str() const;
};

Distance distance(const ValuedVector& v, const ValuedVector& w);

/// Minimum precision over the entries (nullopt if all exact).
std::optional<Exponent> precision_floor(const ValuedVector& v);

/// Coefficient vector of T^at across the entries. Throws PrecisionError if
/// `at` is not below every entry's precision.
std::vector<Rational> leading_coefficients(const ValuedVector& v, const Exponent& at);

/// All exponents carrying a nonzero coefficient in some entry (sorted, unique).
std::vector<Exponent> support(const ValuedVector& v);

}  // namespace novikov
