#include "novikov/generators.hpp"

#include <algorithm>

#include "novikov/errors.hpp"
#include "novikov/exact_linalg.hpp"

namespace novikov {

InstanceGenerator::InstanceGenerator(std::uint64_t seed, Params params)
    : seed_(seed), params_(params), rng_(seed) {}

long InstanceGenerator::uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

bool InstanceGenerator::chance(double p) { return std::bernoulli_distribution(p)(rng_); }

Rational InstanceGenerator::coefficient(const Field& field) {
  if (field.is_rationals()) {
    long num = 0;
    while (num == 0) num = uniform(-5, 5);
    Rational c(num, uniform(1, 3));
    c.canonicalize();
    return c;
  }
  return Rational(uniform(1, static_cast<long>(field.characteristic()) - 1));
}

namespace {

Integer floor_int(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil_int(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

Exponent InstanceGenerator::lattice(long denominator, const Rational& lo, const Rational& hi) {
  const long k_lo = ceil_int(lo * Rational(denominator)).get_si();
  const long k_hi = floor_int(hi * Rational(denominator)).get_si();
  if (k_lo > k_hi) throw NovikovError("lattice: empty range");
  return Exponent(frac(uniform(k_lo, k_hi), denominator));
}

NovikovSeries InstanceGenerator::series(const Field& field, long denominator, const Rational& lo,
                                        const Rational& hi) {
  const long terms = uniform(1, static_cast<long>(params_.max_terms));
  std::vector<Term> out;
  for (long k = 0; k < terms; ++k) out.push_back(Term{lattice(denominator, lo, hi), coefficient(field)});
  return NovikovSeries(field, std::move(out));
}

Instance random_instance(InstanceGenerator& gen) {
  const auto& prm = gen.params();
  Instance inst;
  inst.field = gen.chance(0.5) ? Field::prime(2) : Field::prime(3);
  inst.denominator = gen.chance(0.5) ? 1 : 2;
  inst.precision = gen.uniform(1, prm.max_precision);
  const std::size_t n = gen.uniform(1, static_cast<long>(prm.max_dim));
  const std::size_t m = gen.uniform(1, static_cast<long>(prm.max_dim));
  const Rational lo(-prm.bound), hi(prm.bound);
  const Field& f = inst.field;
  const long d = inst.denominator;

  inst.a = ValuedMatrix(f, n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (gen.chance(prm.density)) inst.a.at(i, j) = gen.series(f, d, lo, hi);

  const bool zero_weights = gen.chance(0.3);
  for (std::size_t i = 0; i < n; ++i)
    inst.t.push_back(zero_weights ? Exponent(0) : gen.lattice(2, lo, hi));

  std::vector<NovikovSeries> w(n, NovikovSeries(f));
  if (gen.chance(0.35)) {
    // Near the column space: A x for a random x, clipped to the window.
    ValuedVector x = ValuedVector::zeros(f, m);
    for (std::size_t j = 0; j < m; ++j)
      if (gen.chance(0.7)) x[j] = gen.series(f, d, Rational(-1), Rational(1));
    const ValuedVector ax = inst.a.apply(x);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Term> kept;
      for (const auto& term : ax[i].terms())
        if (term.exponent >= Exponent(-prm.bound) && term.exponent <= Exponent(prm.bound))
          kept.push_back(term);
      w[i] = NovikovSeries(f, std::move(kept));
      if (gen.chance(0.25)) w[i] += gen.series(f, d, lo, hi);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      if (gen.chance(prm.density)) w[i] = gen.series(f, d, lo, hi);
  }
  inst.w = ValuedVector(f, std::move(w));
  return inst;
}

FilteredComplex random_complex(InstanceGenerator& gen) {
  const Field field = std::vector<Field>{Field::rationals(), Field::prime(2),
                                         Field::prime(3)}[gen.uniform(0, 2)];
  PeriodData period;
  switch (gen.uniform(0, 4)) {
    case 0: period = {0, {}, {}}; break;
    case 1: period = {1, {}, {Rational(1)}}; break;
    case 2: period = {1, {}, {frac(1, 2)}}; break;
    case 3: period = {2, {}, {Rational(1), Rational(1)}}; break;
    default: period = {2, {}, {Rational(1), frac(1, 2)}}; break;
  }
  const ValueGroup g = period.image();
  const std::size_t n0 = gen.uniform(1, 3);
  const std::size_t n1 = gen.uniform(1, 3);
  const std::size_t n = n0 + n1;

  std::vector<Generator> gens;
  for (std::size_t i = 0; i < n0; ++i)
    gens.push_back({"q" + std::to_string(i), Exponent(frac(gen.uniform(-12, 12), 6)), 0});
  for (std::size_t i = 0; i < n1; ++i)
    gens.push_back({"p" + std::to_string(i), Exponent(frac(gen.uniform(-12, 12), 6)), 1});

  ValuedMatrix d(field, n, n);
  for (std::size_t i = n0; i < n; ++i) {
    for (std::size_t j = 0; j < n0; ++j) {
      if (!gen.chance(0.7)) continue;
      // Every term T^e needs action_j - e < action_i.
      const Rational gap = gens[j].action.value() - gens[i].action.value();
      if (g.is_trivial()) {
        if (sgn(gap) < 0) d.at(j, i) = NovikovSeries::constant(field, gen.coefficient(field));
        continue;
      }
      const Rational step = g.generator();
      const Integer k_min = floor_int(gap / step) + 1;
      std::vector<Term> terms;
      const long count = gen.uniform(1, 2);
      for (long c = 0; c < count; ++c) {
        const Integer k = k_min + gen.uniform(0, 3);
        terms.push_back(Term{Exponent(Rational(k) * step), gen.coefficient(field)});
      }
      d.at(j, i) = NovikovSeries(field, std::move(terms));
    }
  }
  // Planted cycle: the boundary of p_k is T^e times the boundary of p_i.
  if (n1 >= 2 && gen.chance(0.6)) {
    const std::size_t i = n0 + gen.uniform(0, static_cast<long>(n1) - 1);
    std::size_t k = n0 + gen.uniform(0, static_cast<long>(n1) - 2);
    if (k >= i) ++k;
    const Rational need = gens[i].action.value() - gens[k].action.value();
    std::optional<Exponent> e;
    if (g.is_trivial()) {
      if (sgn(need) <= 0) e = Exponent(0);
    } else {
      const Integer kk = ceil_int(need / g.generator()) + gen.uniform(0, 1);
      e = Exponent(Rational(kk) * g.generator());
    }
    if (e) {
      const NovikovSeries scale = NovikovSeries::monomial(field, gen.coefficient(field), *e);
      for (std::size_t j = 0; j < n0; ++j) d.at(j, k) = scale * d.at(j, i);
    }
  }
  return FilteredComplex(field, std::move(gens), std::move(period), std::move(d));
}

namespace {

NovikovSeries random_monomial_sum(InstanceGenerator& gen, const Field& field, const ValueGroup& g) {
  const long terms = gen.uniform(1, 2);
  std::vector<Term> out;
  for (long k = 0; k < terms; ++k) {
    const Exponent e = g.is_trivial() ? Exponent(0) : Exponent(Rational(gen.uniform(-3, 3)) * g.generator());
    out.push_back(Term{e, gen.coefficient(field)});
  }
  return NovikovSeries(field, std::move(out));
}

}  // namespace

Chain random_chain(InstanceGenerator& gen, const FilteredComplex& c) {
  Chain x = ValuedVector::zeros(c.field(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (gen.chance(0.7)) x[i] = random_monomial_sum(gen, c.field(), c.value_group());
  if (x.is_exact_zero() && c.size() > 0)
    x[gen.uniform(0, static_cast<long>(c.size()) - 1)] = NovikovSeries::constant(c.field(), 1);
  return x;
}

Chain random_cycle(InstanceGenerator& gen, const FilteredComplex& c) {
  const auto kernel = exact_kernel_basis(c.boundary());
  if (!kernel) throw NovikovError("random_cycle: boundary is not exact");
  Chain x = ValuedVector::zeros(c.field(), c.size());
  if (kernel->empty()) return x;
  for (const auto& k : *kernel)
    if (gen.chance(0.6)) x += random_monomial_sum(gen, c.field(), c.value_group()) * k;
  if (x.is_exact_zero())
    x = random_monomial_sum(gen, c.field(), c.value_group()) *
        (*kernel)[gen.uniform(0, static_cast<long>(kernel->size()) - 1)];
  return x;
}

std::vector<std::string> fixture_names() {
  return {"morse_circle", "novikov_circle", "torus_morse", "two_generator_cancel"};
}

FilteredComplex fixture(std::string_view name) {
  const Field q = Field::rationals();
  if (name == "morse_circle") {
    // Height function on the circle: the two flowlines from max to min cancel.
    return FilteredComplex(q, {{"q", 0, 0}, {"p", 1, 1}}, PeriodData{0, {}, {}},
                           ValuedMatrix(q, 2, 2));
  }
  if (name == "novikov_circle") {
    // d theta on the circle with one zero pair; flowlines contribute 1 and -T.
    ValuedMatrix d(q, 2, 2);
    d.at(0, 1) = parse_series("1 - T", q);
    return FilteredComplex(q, {{"q", 0, 0}, {"p", 1, 1}}, PeriodData{1, {}, {Rational(1)}},
                           std::move(d));
  }
  if (name == "torus_morse") {
    // Standard height function on the torus: all boundary counts cancel.
    return FilteredComplex(q, {{"min", 0, 0}, {"s1", 1, 1}, {"s2", 2, 1}, {"max", 3, 2}},
                           PeriodData{0, {}, {}}, ValuedMatrix(q, 4, 4));
  }
  if (name == "two_generator_cancel") {
    ValuedMatrix d(q, 2, 2);
    d.at(0, 1) = parse_series("T^(1/2)", q);
    return FilteredComplex(q, {{"q", 0, 0}, {"p", 1, 1}},
                           PeriodData{1, {}, {frac(1, 2)}}, std::move(d));
  }
  throw NovikovError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace novikov
