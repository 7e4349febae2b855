#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "novikov/errors.hpp"
#include "novikov/exact_linalg.hpp"
#include "novikov/generators.hpp"
#include "novikov/oracle.hpp"
#include "support.hpp"

using namespace novikov;
using namespace novikov::testing;

namespace {

const Field F2 = Field::prime(2);

Valuation oracle_value(const ValuedMatrix& a, const WeightVector& t, const ValuedVector& w,
                       const Exponent& precision, long den = 1) {
  OracleConfig cfg;
  cfg.field = a.field();
  cfg.denominator = den;
  cfg.precision = precision;
  const Valuation lin = oracle_best_approx_linear(a, t, w, cfg).value;
  EXPECT_EQ(oracle_best_approx(a, t, w, cfg).value, lin);
  return lin;
}

}  // namespace

TEST(SolveInSpan, FirstPivotAndInconsistency) {
  const Field q = Field::rationals();
  const std::vector<std::vector<Rational>> vs{{Q(1), Q(1)}, {Q(0), Q(1)}};
  const std::vector<Rational> target{Q(2), Q(5)};
  EXPECT_EQ(*solve_in_span(q, vs, target), (std::vector<Rational>{Q(2), Q(3)}));
  const std::vector<std::vector<Rational>> one{{Q(1), Q(0)}};
  const std::vector<Rational> off{Q(0), Q(1)};
  EXPECT_FALSE(solve_in_span(q, one, off).has_value());
}

TEST(ReduceToFixedPoint, AlreadyFixed) {
  const AdaptedBasis b = adapted_basis(M({{"1", "0"}}), 6);
  const ValuedVector v = V({"0", "1 + T"});
  const FixedPointResult r = reduce_to_fixed_point(v, b);
  EXPECT_EQ(r.status, ApproxStatus::optimal);
  EXPECT_EQ(r.fixed, v);
  EXPECT_TRUE(r.trace.steps.empty());
  EXPECT_TRUE(r.combination[0].is_exact_zero());
}

TEST(ReduceToFixedPoint, BasisVectorReducesInOnePass) {
  const AdaptedBasis b = adapted_basis(M({{"1", "T"}, {"0", "1"}}), 6);
  ASSERT_EQ(b.size(), 2u);
  const FixedPointResult r = reduce_to_fixed_point(b.basis[0], b);
  EXPECT_TRUE(r.fixed.is_exact_zero());
  EXPECT_EQ(r.combination[0], S("1"));
  EXPECT_TRUE(r.combination[1].is_exact_zero());
  EXPECT_EQ(r.trace.steps.size(), 1u);
}

TEST(ReduceToFixedPoint, TwoStepTraceOverF2) {
  const AdaptedBasis b = adapted_basis(M({{"1", "1"}, {"0", "1"}}, F2), 6);
  ASSERT_EQ(b.size(), 2u);
  const FixedPointResult r = reduce_to_fixed_point(V({"1", "1 + T"}, F2), b);
  ASSERT_EQ(r.trace.steps.size(), 2u);
  EXPECT_EQ(r.trace.steps[0].level, E(0));
  EXPECT_EQ(r.trace.steps[0].coefficients, (std::vector<Rational>{Q(1), Q(0)}));
  EXPECT_EQ(r.trace.steps[1].level, E(1));
  EXPECT_EQ(r.trace.steps[1].coefficients, (std::vector<Rational>{Q(0), Q(1)}));
  EXPECT_TRUE(r.fixed.is_exact_zero());
  EXPECT_EQ(r.combination[1], S("T", F2));
  for (const auto& s : r.trace.steps) EXPECT_TRUE(r.trace.level_in_witness(s.level));
  EXPECT_NE(r.trace.to_log().find("step 2: level 1"), std::string::npos);
}

TEST(ReduceToFixedPoint, RejectsUnnormalizedBasis) {
  AdaptedBasis b = adapted_basis(M({{"1"}}), 4);
  b.basis[0] = V({"T"});
  EXPECT_THROW(reduce_to_fixed_point(V({"1"}), b), NovikovError);
}

TEST(ReduceToFixedPoint, StopsAtPrecision) {
  const AdaptedBasis b = adapted_basis(M({{"1", "1"}}), 3);
  // (1, 1 + T^5): the second coordinate is beyond the working precision.
  const FixedPointResult r = reduce_to_fixed_point(V({"1", "1 + T^5"}), b);
  EXPECT_EQ(r.status, ApproxStatus::precision_exhausted);
}

TEST(AdaptedBasis, Identity) {
  const AdaptedBasis b = adapted_basis(ValuedMatrix::identity(Field::rationals(), 3), 4);
  ASSERT_EQ(b.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(b.basis[i], ValuedVector::unit(Field::rationals(), 3, i));
    EXPECT_EQ(b.preimages[i], ValuedVector::unit(Field::rationals(), 3, i));
  }
  EXPECT_EQ(gamma_constant(b), E(0));
}

TEST(AdaptedBasis, SingleColumnNormalized) {
  const AdaptedBasis b = adapted_basis(M({{"1", "T^(-1)"}}), 4);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b.basis[0], V({"T", "1"}));
  EXPECT_EQ(b.preimages[0], V({"T"}));
  EXPECT_EQ(gamma_constant(b), E(-1));
}

TEST(AdaptedBasis, ColumnEliminationOverF2) {
  const ValuedMatrix a = M({{"1", "1"}, {"1", "1 + T"}}, F2);
  const AdaptedBasis b = adapted_basis(a, 4);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b.basis[0], V({"1", "1"}, F2));
  EXPECT_EQ(b.basis[1], V({"0", "1"}, F2));
  EXPECT_EQ(b.preimages[0], V({"1", "0"}, F2));
  EXPECT_EQ(b.preimages[1], V({"T^(-1)", "T^(-1)"}, F2));
  EXPECT_EQ(gamma_constant(b), E(1));
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(a.apply(b.preimages[i]), b.basis[i]);
}

TEST(AdaptedBasis, ZeroMatrixAndDependentColumns) {
  const AdaptedBasis z = adapted_basis(M({{"0", "0"}}), 4);
  EXPECT_EQ(z.size(), 0u);
  EXPECT_EQ(z.gamma, E(0));
  const AdaptedBasis d = adapted_basis(M({{"1", "T"}, {"1 - T", "T - T^2"}}), 4);
  EXPECT_EQ(d.size(), 1u);
  EXPECT_EQ(d.dropped_columns, std::vector<std::size_t>{1});
  EXPECT_TRUE(d.certified);
}

TEST(AdaptedBasis, InexactColumnsMayBeUncertified) {
  const AdaptedBasis b = adapted_basis(M({{"1", "0"}, {"1", "O(T^2)"}}), 4);
  EXPECT_EQ(b.size(), 1u);
  EXPECT_FALSE(b.certified);
}

TEST(BestApprox, ExactMemberHasInfiniteDistance) {
  const ValuedMatrix a = M({{"1", "T"}, {"0", "1 - T"}});
  const ValuedVector x = V({"2", "T^(-1)"});
  const ApproxResult r = best_approx(a, W({0, 0}), a.apply(x), 6);
  EXPECT_TRUE(r.distance.is_infinite());
  EXPECT_EQ(r.status, ApproxStatus::optimal);
  EXPECT_TRUE(r.residual.is_exact_zero());
}

TEST(BestApprox, ColumnWithNegativeExponent) {
  const ValuedMatrix a = M({{"1", "T^(-1)"}});
  const ApproxResult r = best_approx(a, W({0, 0}), V({"0", "1"}), 6);
  EXPECT_EQ(r.status, ApproxStatus::optimal);
  EXPECT_EQ(r.x0, V({"T"}));
  EXPECT_EQ(r.residual, V({"-T", "0"}));
  EXPECT_EQ(r.distance, Valuation::of(1));
  EXPECT_EQ(oracle_value(M({{"1", "T^(-1)"}}, F2), W({0, 0}), V({"0", "1"}, F2), 4),
            Valuation::of(1));
}

TEST(BestApprox, UntouchableCoordinate) {
  const ApproxResult r = best_approx(M({{"0", "1"}}), W({0, 2}), V({"1", "0"}), 6);
  EXPECT_TRUE(r.x0.is_exact_zero());
  EXPECT_EQ(r.distance, Valuation::of(0));
  EXPECT_EQ(oracle_value(M({{"0", "1"}}, F2), W({0, 2}), V({"1", "0"}, F2), 4), Valuation::of(0));
}

TEST(BestApprox, ZeroMatrix) {
  const ApproxResult r = best_approx(M({{"0", "0"}}), W({1, 0}), V({"T^3", "T"}), 6);
  EXPECT_TRUE(r.x0.is_exact_zero());
  EXPECT_EQ(r.distance, Valuation::of(1));
  EXPECT_EQ(r.gamma, E(0));
}

TEST(BestApprox, CertifiedMembershipBeyondPrecision) {
  // (1) = (1 - T) * (1 + T + T^2 + ...): never exact, but certified by rank.
  const ApproxResult r = best_approx(M({{"1 - T"}}), W({0}), V({"1"}), 4);
  EXPECT_EQ(r.status, ApproxStatus::optimal);
  EXPECT_TRUE(r.membership_certified);
  EXPECT_TRUE(r.distance.is_infinite());
  EXPECT_EQ(r.x0, V({"1 + T + T^2 + T^3"}));
  EXPECT_TRUE(r.residual[0].is_indistinguishable_from_zero());
}

TEST(BestApprox, NonMemberBeyondPrecisionIsExhausted) {
  const ApproxResult r = best_approx(M({{"1", "1"}}), W({0, 0}), V({"1", "1 + T^10"}), 3);
  EXPECT_EQ(r.status, ApproxStatus::precision_exhausted);
  EXPECT_EQ(r.distance, Valuation::at_least(3));
  const ApproxResult more = best_approx(M({{"1", "1"}}), W({0, 0}), V({"1", "1 + T^10"}), 12);
  EXPECT_EQ(more.status, ApproxStatus::optimal);
  EXPECT_EQ(more.distance, Valuation::of(10));
}

TEST(BestApprox, ApproximatorSharesBasis) {
  const Approximator approx(M({{"1", "T^(-1)"}}), W({0, 0}), 6);
  EXPECT_EQ(approx.gamma(), E(-1));
  EXPECT_EQ(approx(V({"0", "1"})).distance, Valuation::of(1));
  EXPECT_TRUE(approx(V({"T^2", "T"})).distance.is_infinite());
}

TEST(ProjectExponents, Examples) {
  const ValueGroup z(Q(1));
  EXPECT_EQ(project_exponents(V({"1 + T^2", "T^(-3)"}), z), V({"1 + T^2", "T^(-3)"}));
  EXPECT_TRUE(project_exponents(V({"T^(1/2)"}), z).is_exact_zero());
  EXPECT_EQ(project_exponents(V({"T^(1/2) + T + O(T^3)"}), z), V({"T + O(T^3)"}));
}

TEST(ProjectExponents, NeverWorsensTheResidual) {
  InstanceGenerator gen(31);
  const ValueGroup z(Q(1));
  for (int i = 0; i < 300; ++i) {
    Instance inst = random_instance(gen);
    if (inst.denominator != 1) continue;
    ValuedVector x = ValuedVector::zeros(inst.field, inst.a.cols());
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = gen.series(inst.field, 2, Rational(-2), Rational(2));
    const Valuation before = weighted_valuation(inst.w - inst.a.apply(x), inst.t);
    const Valuation after = weighted_valuation(inst.w - inst.a.apply(project_exponents(x, z)), inst.t);
    if (after.is_infinite()) continue;
    ASSERT_FALSE(before.is_infinite());
    EXPECT_GE(after.value(), before.value());
  }
}

TEST(GammaConstant, InvariantUnderColumnOrder) {
  InstanceGenerator gen(41);
  for (int i = 0; i < 200; ++i) {
    const Instance inst = random_instance(gen);
    std::vector<std::size_t> rows(inst.a.rows()), cols(inst.a.cols());
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    const Exponent g = adapted_basis(inst.a, 8).gamma;
    std::reverse(cols.begin(), cols.end());
    EXPECT_EQ(adapted_basis(inst.a.select(rows, cols), 8).gamma, g);
    std::rotate(cols.begin(), cols.begin() + 1, cols.end());
    EXPECT_EQ(adapted_basis(inst.a.select(rows, cols), 8).gamma, g);
  }
}

TEST(AdaptedBasisProperty, PreimagesAndNormalization) {
  InstanceGenerator gen(51);
  for (int i = 0; i < 200; ++i) {
    const Instance inst = random_instance(gen);
    const AdaptedBasis b = adapted_basis(inst.a, 8);
    for (std::size_t k = 0; k < b.size(); ++k) {
      EXPECT_EQ(vec_valuation(b.basis[k]), Valuation::of(0));
      EXPECT_EQ(inst.a.apply(b.preimages[k]), b.basis[k]);
    }
    const auto r = *exact_rank(inst.a);
    EXPECT_EQ(b.size(), r);
  }
}

TEST(ReductionProperty, MembershipSoundness) {
  InstanceGenerator gen(61);
  for (int i = 0; i < 200; ++i) {
    const Instance inst = random_instance(gen);
    const AdaptedBasis b = adapted_basis(inst.a, 6);
    if (b.size() == 0) continue;
    ValuedVector v = ValuedVector::zeros(inst.field, inst.a.rows());
    for (std::size_t k = 0; k < b.size(); ++k)
      v += gen.series(inst.field, inst.denominator, Rational(0), Rational(3)) * b.basis[k];
    const FixedPointResult r = reduce_to_fixed_point(v, b);
    const Valuation left = vec_valuation(r.fixed);
    EXPECT_TRUE(left.is_infinite() || left.value() >= b.precision);
    for (const auto& c : r.combination) {
      const Valuation cv = c.valuation();
      EXPECT_TRUE(cv.is_infinite() || cv.value() >= Exponent(0));
    }
    for (std::size_t s = 1; s < r.trace.steps.size(); ++s)
      EXPECT_LT(r.trace.steps[s - 1].level, r.trace.steps[s].level);
  }
}

TEST(ReductionProperty, OptimalityCertificateAndGammaBound) {
  InstanceGenerator gen(71);
  int finite = 0;
  for (int i = 0; i < 300; ++i) {
    const Instance inst = random_instance(gen);
    const Approximator approx(inst.a, inst.t, inst.precision);
    const ApproxResult r = approx(inst.w);
    for (std::size_t s = 1; s < r.trace.steps.size(); ++s)
      EXPECT_LT(r.trace.steps[s - 1].level, r.trace.steps[s].level);
    for (const auto& s : r.trace.steps) EXPECT_TRUE(r.trace.level_in_witness(s.level));
    if (r.status != ApproxStatus::optimal) continue;
    EXPECT_TRUE(r.gamma_certificate.holds);
    if (!r.distance.is_finite()) continue;
    ++finite;
    // The leading vector of the rescaled residual is outside the span.
    std::vector<NovikovSeries> rescaled;
    for (std::size_t k = 0; k < inst.t.size(); ++k)
      rescaled.push_back(monomial_shift(r.residual[k], -inst.t[k]));
    const auto lead = leading_coefficients(ValuedVector(inst.field, rescaled), r.distance.value());
    EXPECT_FALSE(solve_in_span(inst.field, approx.basis().leading, lead).has_value());
  }
  EXPECT_GT(finite, 50);
}

TEST(ReductionProperty, AgreesWithOracle) {
  InstanceGenerator gen(81);
  for (int i = 0; i < 150; ++i) {
    const Instance inst = random_instance(gen);
    OracleConfig cfg;
    cfg.field = inst.field;
    cfg.denominator = inst.denominator;
    cfg.precision = inst.precision;
    const Valuation o = oracle_best_approx_linear(inst.a, inst.t, inst.w, cfg).value;
    const ApproxResult r = best_approx(inst.a, inst.t, inst.w, inst.precision);
    if (o.is_finite()) {
      EXPECT_EQ(r.status, ApproxStatus::optimal) << instance_to_json(inst);
      EXPECT_EQ(r.distance, o) << instance_to_json(inst);
    } else {
      EXPECT_TRUE(r.distance.is_infinite() || r.status == ApproxStatus::precision_exhausted)
          << instance_to_json(inst);
    }
  }
}
