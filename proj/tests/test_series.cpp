#include <gtest/gtest.h>

#include "novikov/errors.hpp"
#include "random_series.hpp"
#include "support.hpp"

using namespace novikov;
using namespace novikov::testing;

namespace {
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);
}  // namespace

TEST(Field, Axioms) {
  EXPECT_EQ(F3.add(Q(2), Q(2)), Q(1));
  EXPECT_EQ(F3.inv(Q(2)), Q(2));
  EXPECT_EQ(F2.neg(Q(1)), Q(1));
  EXPECT_EQ(Field::rationals().inv(Q(-2, 3)), Q(-3, 2));
  EXPECT_EQ(Field::parse("F_3"), F3);
  EXPECT_EQ(Field::parse("GF(2)"), F2);
  EXPECT_THROW(Field::parse("F4"), NovikovError);
  EXPECT_THROW(Field::parse("R"), ParseError);
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    const Field f = Field::prime(p);
    for (long a = 0; a < static_cast<long>(p); ++a) {
      EXPECT_EQ(f.add(Q(a), f.neg(Q(a))), Q(0));
      if (a) EXPECT_EQ(f.mul(Q(a), f.inv(Q(a))), Q(1));
      for (long b = 0; b < static_cast<long>(p); ++b) {
        EXPECT_EQ(f.mul(Q(a), Q(b)), f.mul(Q(b), Q(a)));
        for (long c = 0; c < static_cast<long>(p); ++c)
          EXPECT_EQ(f.mul(Q(a), f.add(Q(b), Q(c))), f.add(f.mul(Q(a), Q(b)), f.mul(Q(a), Q(c))));
      }
    }
  }
}

TEST(Series, ValuationExamples) {
  EXPECT_TRUE(NovikovSeries().valuation().is_infinite());
  EXPECT_EQ(S("T^(3/2) + 2*T^(5/2)").valuation(), Valuation::of(E(3, 2)));
  EXPECT_EQ(NovikovSeries::unknown_zero(Field::rationals(), 4).valuation(), Valuation::at_least(4));
}

TEST(Series, AddExamples) {
  EXPECT_EQ(S("1 + T") + S("-1"), S("T"));
  const NovikovSeries a = NovikovSeries::constant(Field::rationals(), 1).truncated(2);
  const NovikovSeries sum = a + S("T^3");
  EXPECT_EQ(sum, a);
  EXPECT_EQ(*sum.precision(), E(2));
  EXPECT_TRUE((S("1 + T", F2) + S("1 + T", F2)).is_exact_zero());
}

TEST(Series, MultiplyExamples) {
  EXPECT_EQ(S("1 + T") * S("1 - T"), S("1 - T^2"));
  const NovikovSeries x = S("1 + T + O(T^3)");
  const NovikovSeries y = S("T^(1/2)") * x;
  EXPECT_EQ(*y.precision(), E(7, 2));
  const NovikovSeries z = S("T^2") * NovikovSeries::unknown_zero(Field::rationals(), 3);
  EXPECT_TRUE(z.is_indistinguishable_from_zero());
  EXPECT_EQ(*z.precision(), E(5));
}

TEST(Series, MonomialShiftExamples) {
  const NovikovSeries one = NovikovSeries::constant(Field::rationals(), 1);
  EXPECT_EQ(monomial_shift(one, E(3, 2)), S("T^(3/2)"));
  const NovikovSeries s = S("2*T^(-1) + T + O(T^4)");
  EXPECT_EQ(monomial_shift(monomial_shift(s, E(5, 2)), E(-5, 2)), s);
  EXPECT_EQ(monomial_shift(s, E(1, 3)).valuation(), Valuation::of(E(-2, 3)));
}

TEST(Series, InvertExamples) {
  EXPECT_EQ(invert(S("1 - T"), 3), S("1 + T + T^2 + O(T^3)"));
  EXPECT_EQ(invert(S("T^(5/2)"), 3), S("T^(-5/2)"));
  EXPECT_THROW(invert(NovikovSeries::unknown_zero(Field::rationals(), 2), 3), PrecisionError);
  EXPECT_THROW(invert(NovikovSeries(), 3), NovikovError);
}

TEST(Series, NormalFormAndPrinting) {
  const NovikovSeries s = S("3 + T^(5/2)");
  EXPECT_EQ(s.str(), "3/1*T^(0) + 1/1*T^(5/2)");
  EXPECT_EQ(S("3/1*T^(0) + 1/1*T^(5/2)"), s);
  EXPECT_EQ(S("T + 2*T^5 + O(T^(4))").str(), "1/1*T^(1) + O(T^(4))");
  EXPECT_EQ(S("T - T").str(), "0");
  EXPECT_EQ(S("2*T + 2*T", F3).str(), "1/1*T^(1)");
  EXPECT_EQ(parse_series(s.str()), s);
}

TEST(Series, ParseErrorsCarryPosition) {
  try {
    parse_series("1 + T^(1/2 + 3");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_GT(e.position(), 4u);
  }
  EXPECT_THROW(parse_series(""), ParseError);
  EXPECT_THROW(parse_series("1 + + "), ParseError);
  EXPECT_THROW(parse_series("1 + x"), ParseError);
}

TEST(Series, CoefficientBeyondPrecisionThrows) {
  const NovikovSeries s = S("1 + O(T^2)");
  EXPECT_EQ(s.coefficient_at(0), Q(1));
  EXPECT_EQ(s.coefficient_at(1), Q(0));
  EXPECT_THROW(s.coefficient_at(2), PrecisionError);
}

TEST(SeriesProperty, ValuationIsMultiplicative) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const NovikovSeries a = random_series(rng, Field::rationals(), 2, 0.0, false);
    const NovikovSeries b = random_series(rng, Field::rationals(), 2, 0.0, false);
    EXPECT_EQ((a * b).valuation().value(), a.valuation().value() + b.valuation().value());
  }
}

TEST(SeriesProperty, InverseIsInverseModPrecision) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const Field f = i % 3 == 0 ? Field::rationals() : (i % 3 == 1 ? F2 : F3);
    const NovikovSeries s = random_series(rng, f, 2, 0.0, false);
    const Exponent p = E(static_cast<long>(i % 7) + 1, 2);
    const NovikovSeries prod = s * invert(s, p);
    if (prod.precision()) EXPECT_GE(*prod.precision(), p);
    EXPECT_EQ(prod.truncated(p), NovikovSeries::constant(f, 1).truncated(p)) << s.str();
  }
}

TEST(SeriesProperty, RingAxiomsModuloPrecision) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const Field f = i % 2 ? F3 : Field::rationals();
    const auto a = random_series(rng, f, 2, 0.3);
    const auto b = random_series(rng, f, 2, 0.3);
    const auto c = random_series(rng, f, 2, 0.3);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    const auto lhs = a * (b + c);
    const auto rhs = a * b + a * c;
    const auto p = min_precision(lhs.precision(), rhs.precision());
    if (p) {
      EXPECT_EQ(lhs.truncated(*p), rhs.truncated(*p));
    } else {
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(SeriesProperty, NonArchimedeanRule) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 500; ++i) {
    const auto a = random_series(rng, F2, 2, 0.2);
    const auto b = random_series(rng, F2, 2, 0.2);
    const Valuation va = a.valuation(), vb = b.valuation(), vs = (a + b).valuation();
    if (!va.is_finite() || !vb.is_finite()) continue;
    const Exponent m = std::min(va.value(), vb.value());
    if (vs.is_finite()) EXPECT_GE(vs.value(), m);
    if (va.value() != vb.value()) EXPECT_EQ(vs, Valuation::of(m));
  }
}
