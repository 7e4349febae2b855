#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "novikov/exponent.hpp"
#include "novikov/integer_matrix.hpp"

namespace novikov {

/// The group Gamma = Z^rank (+) Z/torsion[0] (+) ... together with the period
/// homomorphism omega, given by its values on the free generators. Elements of
/// Gamma are integer vectors of length rank + torsion.size().
struct PeriodData {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
  std::vector<Rational> weights;

  /// Throws DimensionError / NovikovError on malformed data.
  void validate() const;
  std::size_t dimension() const { return rank + torsion.size(); }
  /// omega(element); torsion coordinates contribute nothing.
  Rational omega(std::span<const Integer> element) const;
  /// G = omega(Gamma).
  ValueGroup image() const;
};

/// Gamma = ker(omega) (+) C, where C is generated by complement_basis and maps
/// isomorphically onto G.
class Splitting {
 public:
  struct Parts {
    std::vector<Integer> kernel_coordinates;  // w.r.t. kernel_basis
    Integer complement_coordinate;            // multiple of complement_basis[0]
  };

  Splitting(PeriodData period, IntMatrix transform, std::size_t image_rank, Rational generator);

  const PeriodData& period() const { return period_; }
  const std::vector<std::vector<Integer>>& kernel_basis() const { return kernel_basis_; }
  const std::vector<std::vector<Integer>>& complement_basis() const { return complement_basis_; }
  /// omega(complement_basis[0]), the positive generator of G (0 if G trivial).
  const Rational& generator() const { return generator_; }
  std::size_t kernel_rank() const { return period_.rank - image_rank_; }

  Parts decompose(std::span<const Integer> element) const;
  std::vector<Integer> reassemble(const Parts& parts) const;

 private:
  PeriodData period_;
  IntMatrix transform_;
  IntMatrix inverse_;
  std::size_t image_rank_;
  Rational generator_;
  std::vector<std::vector<Integer>> kernel_basis_;
  std::vector<std::vector<Integer>> complement_basis_;
};

Splitting compute_splitting(const PeriodData& period);

/// Period data of the subgroup G' <= R generated by G's generators and `extra`.
PeriodData extend_group(std::span<const Rational> g_weights, std::span<const Rational> extra);

}  // namespace novikov
