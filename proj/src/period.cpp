#include "novikov/period.hpp"

#include "novikov/errors.hpp"

namespace novikov {

void PeriodData::validate() const {
  if (weights.size() != rank)
    throw DimensionError("period data: " + std::to_string(weights.size()) +
                         " weights for rank " + std::to_string(rank));
  for (const auto& t : torsion)
    if (sgn(t) <= 0) throw NovikovError("period data: torsion orders must be positive");
}

Rational PeriodData::omega(std::span<const Integer> element) const {
  if (element.size() != dimension()) throw DimensionError("omega: element has wrong length");
  Rational total(0);
  for (std::size_t j = 0; j < rank; ++j) total += weights[j] * Rational(element[j]);
  return total;
}

ValueGroup PeriodData::image() const { return ValueGroup::generated_by(std::span(weights)); }

namespace {

std::vector<Integer> padded(const IntMatrix& m, std::size_t column, std::size_t torsion) {
  std::vector<Integer> v;
  v.reserve(m.size() + torsion);
  for (const auto& row : m) v.push_back(row[column]);
  v.resize(m.size() + torsion, 0);
  return v;
}

}  // namespace

Splitting::Splitting(PeriodData period, IntMatrix transform, std::size_t image_rank,
                     Rational generator)
    : period_(std::move(period)),
      transform_(std::move(transform)),
      inverse_(unimodular_inverse(transform_)),
      image_rank_(image_rank),
      generator_(std::move(generator)) {
  const std::size_t t = period_.torsion.size();
  for (std::size_t c = 0; c < image_rank_; ++c)
    complement_basis_.push_back(padded(transform_, c, t));
  for (std::size_t c = image_rank_; c < period_.rank; ++c)
    kernel_basis_.push_back(padded(transform_, c, t));
  for (std::size_t k = 0; k < t; ++k) {
    std::vector<Integer> v(period_.dimension(), 0);
    v[period_.rank + k] = 1;
    kernel_basis_.push_back(std::move(v));
  }
}

Splitting::Parts Splitting::decompose(std::span<const Integer> element) const {
  if (element.size() != period_.dimension())
    throw DimensionError("decompose: element has wrong length");
  Parts parts;
  parts.complement_coordinate = 0;
  std::vector<Integer> y(period_.rank, 0);
  for (std::size_t i = 0; i < period_.rank; ++i)
    for (std::size_t j = 0; j < period_.rank; ++j) y[i] += inverse_[i][j] * element[j];
  if (image_rank_ == 1) parts.complement_coordinate = y[0];
  for (std::size_t i = image_rank_; i < period_.rank; ++i) parts.kernel_coordinates.push_back(y[i]);
  for (std::size_t k = 0; k < period_.torsion.size(); ++k) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), element[period_.rank + k].get_mpz_t(),
               period_.torsion[k].get_mpz_t());
    parts.kernel_coordinates.push_back(r);
  }
  return parts;
}

std::vector<Integer> Splitting::reassemble(const Parts& parts) const {
  if (parts.kernel_coordinates.size() != kernel_basis_.size())
    throw DimensionError("reassemble: wrong number of kernel coordinates");
  std::vector<Integer> out(period_.dimension(), 0);
  if (image_rank_ == 1)
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] += parts.complement_coordinate * complement_basis_[0][i];
  for (std::size_t b = 0; b < kernel_basis_.size(); ++b)
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] += parts.kernel_coordinates[b] * kernel_basis_[b][i];
  for (std::size_t k = 0; k < period_.torsion.size(); ++k) {
    Integer& x = out[period_.rank + k];
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), period_.torsion[k].get_mpz_t());
  }
  return out;
}

Splitting compute_splitting(const PeriodData& period) {
  period.validate();
  Integer denominator = 1;
  for (const auto& w : period.weights)
    mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), w.get_den().get_mpz_t());
  IntMatrix row(1, std::vector<Integer>(period.rank));
  for (std::size_t j = 0; j < period.rank; ++j) {
    const Rational scaled = period.weights[j] * Rational(denominator);
    row[0][j] = scaled.get_num();
  }
  ColumnHermite h = column_hermite(row, period.rank);
  Rational generator(0);
  if (h.rank == 1) {
    generator = Rational(h.form[0][0], denominator);
    generator.canonicalize();
  }
  return Splitting(period, std::move(h.transform), h.rank, generator);
}

PeriodData extend_group(std::span<const Rational> g_weights, std::span<const Rational> extra) {
  PeriodData p;
  p.weights.assign(g_weights.begin(), g_weights.end());
  p.weights.insert(p.weights.end(), extra.begin(), extra.end());
  p.rank = p.weights.size();
  return p;
}

}  // namespace novikov
