#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "novikov/period.hpp"
#include "novikov/reduction.hpp"

namespace novikov {

struct Generator {
  std::string label;
  Exponent action;  // action of the chosen lift
  std::optional<int> degree;
};

/// A free chain complex over Lambda_K(G) with one basis element per chosen
/// lift p_i. Column i of `boundary` is the boundary of p_i.
class FilteredComplex {
 public:
  FilteredComplex(Field field, std::vector<Generator> generators, PeriodData period,
                  ValuedMatrix boundary);

  const Field& field() const noexcept { return field_; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  const PeriodData& period() const noexcept { return period_; }
  const ValuedMatrix& boundary() const noexcept { return boundary_; }
  std::size_t size() const noexcept { return generators_.size(); }

  WeightVector actions() const;
  Exponent max_action() const;
  ValueGroup value_group() const { return period_.image(); }
  bool is_graded() const;
  std::optional<std::size_t> index_of(const std::string& label) const;

 private:
  Field field_;
  std::vector<Generator> generators_;
  PeriodData period_;
  ValuedMatrix boundary_;
};

using Chain = ValuedVector;

struct Violation {
  enum class Kind { shape, period, exponent_outside_group, filtration, grading, boundary_squared };
  Kind kind;
  std::size_t row = 0;
  std::size_t column = 0;
  std::string message;
};

std::string to_string(Violation::Kind k);

struct ValidationReport {
  std::optional<Violation> violation;  // the first one found
  std::vector<std::string> notes;

  bool valid() const { return !violation.has_value(); }
  std::string str() const;
};

ValidationReport validate(const FilteredComplex& c);

/// ell(x) = max_i (action_i - nu(x_i)); minus infinity for x = 0.
FiltrationLevel filtration_level(const FilteredComplex& c, const Chain& x);

enum class Tristate { yes, no, unknown };

std::string to_string(Tristate t);

Tristate is_cycle(const FilteredComplex& c, const Chain& x);

struct BoundaryWitness {
  Chain h;                  // d h = c modulo the working precision
  FiltrationLevel level_h = FiltrationLevel::minus_infinity();  // ell(h)
  FiltrationLevel level_c = FiltrationLevel::minus_infinity();  // ell(c)
  Exponent depth;           // M
  bool bound_holds = false; // ell(h) <= ell(c) + M
  bool solves = false;      // residual c - d h vanishes at precision
};

struct SpectralResult {
  FiltrationLevel rho = FiltrationLevel::minus_infinity();
  Chain representative;  // homologous to the input, with ell = rho when finite
  std::optional<BoundaryWitness> witness;
  ApproxStatus status = ApproxStatus::optimal;
  Exponent precision;
  ReductionTrace trace;
};

struct BoundarySolution {
  Tristate is_boundary = Tristate::unknown;
  std::optional<BoundaryWitness> witness;
  ApproxStatus status = ApproxStatus::optimal;
};

/// Working precision 4*s + 1 where s is the spread of the set
/// {0} and {e - action_j : T^e occurs in row j of the boundary or the chain}.
Exponent default_precision(const FilteredComplex& c, const Chain* chain = nullptr);

/// Spectral queries against one complex at one precision; the adapted basis
/// of the rescaled boundary is computed once.
class ComplexSolver {
 public:
  ComplexSolver(const FilteredComplex& c, Exponent precision);

  SpectralResult spectral(const Chain& x) const;
  BoundarySolution solve(const Chain& target) const;
  Exponent depth() const;
  const Exponent& precision() const { return approx_.precision(); }
  const FilteredComplex& complex() const { return complex_; }

 private:
  BoundaryWitness make_witness(const Chain& target, const ApproxResult& r) const;

  FilteredComplex complex_;
  Approximator approx_;
};

SpectralResult spectral_number(const FilteredComplex& c, const Chain& x,
                               std::optional<Exponent> precision = std::nullopt);

BoundarySolution boundary_solve(const FilteredComplex& c, const Chain& target,
                                std::optional<Exponent> precision = std::nullopt);

/// M = gamma + max_i action_i, gamma taken from the adapted basis of the
/// boundary under the action weights.
Exponent boundary_depth(const FilteredComplex& c, std::optional<Exponent> precision = std::nullopt);

/// True when rho is finite and action_i - rho lies in G for some i.
bool spectrality_check(const FilteredComplex& c, const SpectralResult& r);

struct HomologyRank {
  std::optional<std::size_t> total;
  std::map<int, std::optional<std::size_t>> by_degree;  // graded complexes only
};

HomologyRank homology_rank(const FilteredComplex& c,
                           std::optional<Exponent> precision = std::nullopt);

}  // namespace novikov
