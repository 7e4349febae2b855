#include <gtest/gtest.h>

#include <random>

#include "novikov/generators.hpp"
#include "novikov/oracle.hpp"
#include "support.hpp"

using namespace novikov;
using namespace novikov::testing;

namespace {

const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

OracleConfig config(const Field& f, long den = 1, long precision = 4) {
  OracleConfig cfg;
  cfg.field = f;
  cfg.denominator = den;
  cfg.precision = E(precision);
  return cfg;
}

}  // namespace

TEST(Oracle, ZeroMatrixReturnsWeightedValuation) {
  InstanceGenerator gen(3);
  for (int i = 0; i < 50; ++i) {
    const Field f = i % 2 ? F2 : F3;
    ValuedVector w = ValuedVector::zeros(f, 2);
    for (std::size_t k = 0; k < 2; ++k) w[k] = gen.series(f, 1, Rational(-2), Rational(2));
    const WeightVector t{gen.lattice(1, Rational(-2), Rational(2)), gen.lattice(1, Rational(-2), Rational(2))};
    const OracleConfig cfg = config(f);
    const Valuation expected = weighted_valuation(w, t);
    const OracleResult r = oracle_best_approx(M({{"0", "0"}}, f), t, w, cfg);
    if (expected.is_finite() && expected.value() < cfg.precision)
      EXPECT_EQ(r.value, expected);
    else
      EXPECT_FALSE(r.value.is_finite());
  }
}

TEST(Oracle, ColumnWithNegativeExponent) {
  const OracleResult r = oracle_best_approx(M({{"1", "T^(-1)"}}, F2), W({0, 0}), V({"0", "1"}, F2), config(F2));
  EXPECT_EQ(r.value, Valuation::of(1));
  EXPECT_EQ(oracle_best_approx_linear(M({{"1", "T^(-1)"}}, F2), W({0, 0}), V({"0", "1"}, F2), config(F2)).value,
            Valuation::of(1));
}

TEST(Oracle, MembersClearEverythingBelowPrecision) {
  const ValuedMatrix a = M({{"1", "1 + T"}}, F3);
  const ValuedVector w = a.apply(V({"1"}, F3));
  // Residual cleared at precision: reported as at least the precision.
  EXPECT_EQ(oracle_best_approx(a, W({0, 0}), w, config(F3)).value, Valuation::at_least(4));
  EXPECT_EQ(oracle_best_approx(a, W({0, 0}), V({"0", "0"}, F3), config(F3)).value, Valuation::infinity());
}

TEST(Oracle, HalfIntegerGroup) {
  const ValuedMatrix a = M({{"T^(1/2)", "1"}}, F2);
  const OracleConfig cfg = config(F2, 2);
  const Valuation e = oracle_best_approx(a, W({0, 0}), V({"1", "0"}, F2), cfg).value;
  EXPECT_EQ(e, oracle_best_approx_linear(a, W({0, 0}), V({"1", "0"}, F2), cfg).value);
  // Clearing the first coordinate costs T^(-1/2) in the second, so x = 0 is best.
  EXPECT_EQ(e, Valuation::of(0));
}

TEST(Oracle, ConfigurationBounds) {
  OracleConfig cfg = config(Field::rationals());
  EXPECT_THROW(cfg.validate(), NovikovError);
  cfg = config(F2, 3);
  EXPECT_THROW(cfg.validate(), NovikovError);
  cfg = config(F2, 1, 7);
  EXPECT_THROW(cfg.validate(), NovikovError);
  cfg = config(F2);
  EXPECT_THROW(check_oracle_bounds(M({{"T^3"}}, F2), W({0}), V({"1"}, F2), cfg), NovikovError);
  EXPECT_THROW(check_oracle_bounds(M({{"T^(1/2)"}}, F2), W({0}), V({"1"}, F2), cfg), NovikovError);
  EXPECT_THROW(check_oracle_bounds(M({{"1"}}, F2), W({0, 0}), V({"1"}, F2), cfg), NovikovError);
  EXPECT_NO_THROW(check_oracle_bounds(M({{"T^2"}}, F2), W({-2}), V({"T^(-2)"}, F2), cfg));
}

TEST(Oracle, EnumerationGuard) {
  const ValuedMatrix a = M({{"1", "T^(-2)", "T^2"}, {"T", "1", "T^(-1)"}, {"T^(-2)", "T", "1"}}, F3);
  OracleConfig cfg = config(F3, 2, 6);
  cfg.max_enumeration = 16;
  const WeightVector t = W({2, -2, 0});
  const ValuedVector w = V({"T^(-2)", "T^2", "1"}, F3);
  EXPECT_FALSE(enumeration_fits(oracle_window(a, t, w, cfg), cfg));
  EXPECT_THROW(oracle_best_approx(a, t, w, cfg), SearchSpaceOverflow);
  EXPECT_NO_THROW(oracle_best_approx_linear(a, t, w, cfg));
}

TEST(OracleProperty, EvaluatorsAgree) {
  InstanceGenerator gen(97);
  int compared = 0;
  for (int i = 0; i < 250; ++i) {
    const Instance inst = random_instance(gen);
    OracleConfig cfg = config(inst.field, inst.denominator);
    cfg.precision = inst.precision;
    if (!enumeration_fits(oracle_window(inst.a, inst.t, inst.w, cfg), cfg)) continue;
    const OracleResult e = oracle_best_approx(inst.a, inst.t, inst.w, cfg);
    const OracleResult l = oracle_best_approx_linear(inst.a, inst.t, inst.w, cfg);
    EXPECT_EQ(e.value, l.value) << instance_to_json(inst);
    ++compared;
  }
  EXPECT_GT(compared, 200);
}

TEST(OracleProperty, NeverBelowTheTargetValuation) {
  InstanceGenerator gen(98);
  for (int i = 0; i < 200; ++i) {
    const Instance inst = random_instance(gen);
    OracleConfig cfg = config(inst.field, inst.denominator);
    cfg.precision = inst.precision;
    const Valuation o = oracle_best_approx_linear(inst.a, inst.t, inst.w, cfg).value;
    const Valuation base = weighted_valuation(inst.w, inst.t);
    if (o.is_finite() && base.is_finite()) EXPECT_GE(o.value(), base.value());
    if (o.is_finite()) EXPECT_LT(o.value(), inst.precision);
  }
}
