#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "novikov/valued.hpp"

namespace novikov {

/// Solves target = sum_i c_i * vectors[i] over the field by Gaussian
/// elimination, taking the first usable pivot in the given vector order.
/// Returns std::nullopt when target is outside the K-span.
std::optional<std::vector<Rational>> solve_in_span(const Field& field,
                                                   std::span<const std::vector<Rational>> vectors,
                                                   std::span<const Rational> target);

/// Generators u_1..u_k of the valuation-nonnegative part of the column space
/// of `source`, normalized so that each u_i has valuation exactly 0 and their
/// leading vectors are K-independent, with preimages source * x_i = u_i.
struct AdaptedBasis {
  std::vector<ValuedVector> basis;
  std::vector<ValuedVector> preimages;
  std::vector<std::vector<Rational>> leading;  // leading vector of each u_i at level 0
  Exponent gamma;                              // -min_i vec_valuation(x_i), 0 if empty
  ValuedMatrix source;
  Exponent precision;
  /// False when some column was discarded only because it became
  /// indistinguishable from zero at the working precision.
  bool certified = true;
  std::vector<std::size_t> dropped_columns;

  std::size_t size() const { return basis.size(); }
  std::size_t rows() const { return source.rows(); }
};

enum class ApproxStatus { optimal, precision_exhausted };

std::string to_string(ApproxStatus s);

struct ReductionStep {
  Exponent level;
  std::vector<Rational> coefficients;  // one per basis vector, applied at T^level
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  std::vector<Exponent> source_support;  // N({v})
  std::vector<Exponent> basis_support;   // N({u_1, ..., u_k})

  /// True when `level` lies in N({v}) + (sums of elements of N({u_i})).
  bool level_in_witness(const Exponent& level) const;
  std::string to_log() const;
};

struct FixedPointResult {
  ValuedVector fixed;
  std::vector<NovikovSeries> combination;  // v - fixed = sum_i combination[i] * u_i
  ReductionTrace trace;
  ApproxStatus status = ApproxStatus::optimal;
};

/// Repeatedly subtracts T^level * (K-combination of basis vectors) matching
/// the leading vector of v. Stops at a fixed point, at exact zero, or when the
/// level reaches `precision` (defaults to the basis precision).
FixedPointResult reduce_to_fixed_point(const ValuedVector& v, const AdaptedBasis& basis,
                                       std::optional<Exponent> precision = std::nullopt);

/// Valuation-graded column elimination. With `optimize_preimages` and exact
/// input, every preimage is replaced by its best approximation modulo ker(A),
/// which makes gamma independent of column order.
AdaptedBasis adapted_basis(const ValuedMatrix& a, const Exponent& precision,
                           bool optimize_preimages = true);

Exponent gamma_constant(const AdaptedBasis& basis);

/// Drops every term whose exponent is outside `group`.
ValuedVector project_exponents(const ValuedVector& x, const ValueGroup& group);

struct GammaCertificate {
  Valuation x0_valuation;
  std::optional<Exponent> bound;  // weighted valuation of w minus gamma; nullopt if w = 0
  bool holds = true;
};

struct ApproxResult {
  ValuedVector x0;
  ValuedVector residual;
  Valuation distance = Valuation::infinity();
  GammaCertificate gamma_certificate{Valuation::infinity(), std::nullopt, true};
  ApproxStatus status = ApproxStatus::optimal;
  /// Distance +infinity was certified by an exact rank computation although
  /// the residual is only known to vanish modulo the working precision.
  bool membership_certified = false;
  Exponent gamma;
  ReductionTrace trace;
};

/// Best approximation of targets by the column space of a fixed matrix under
/// a fixed weight vector; the adapted basis is computed once and shared.
class Approximator {
 public:
  Approximator(ValuedMatrix a, WeightVector t, Exponent precision,
               std::optional<ValueGroup> group = std::nullopt);

  ApproxResult operator()(const ValuedVector& w) const;

  const AdaptedBasis& basis() const { return basis_; }
  const ValuedMatrix& matrix() const { return a_; }
  const WeightVector& weights() const { return t_; }
  const Exponent& precision() const { return precision_; }
  const Exponent& gamma() const { return basis_.gamma; }

 private:
  ValuedMatrix a_;
  WeightVector t_;
  Exponent precision_;
  std::optional<ValueGroup> group_;
  ValuedMatrix rescaled_;
  AdaptedBasis basis_;
  std::optional<std::size_t> exact_rank_;
};

ApproxResult best_approx(const ValuedMatrix& a, const WeightVector& t, const ValuedVector& w,
                         const Exponent& precision,
                         std::optional<ValueGroup> group = std::nullopt);

}  // namespace novikov
