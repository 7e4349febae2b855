#include "novikov/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "novikov/errors.hpp"
#include "novikov/exact_linalg.hpp"

namespace novikov {

std::string to_string(ApproxStatus s) {
  return s == ApproxStatus::optimal ? "optimal" : "precision_exhausted";
}

std::optional<std::vector<Rational>> solve_in_span(const Field& field,
                                                   std::span<const std::vector<Rational>> vectors,
                                                   std::span<const Rational> target) {
  const std::size_t n = target.size();
  const std::size_t k = vectors.size();
  // Augmented n x (k+1) system, eliminated column by column in vector order.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (vectors[j].size() != n) throw DimensionError("solve_in_span: length mismatch");
      m[i][j] = field.element(vectors[j][i]);
    }
    m[i][k] = field.element(target[i]);
  }
  std::vector<std::optional<std::size_t>> pivot_row(k);
  std::size_t row = 0;
  for (std::size_t j = 0; j < k && row < n; ++j) {
    std::size_t p = row;
    while (p < n && field.is_zero(m[p][j])) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    const Rational inv = field.inv(m[row][j]);
    for (auto& e : m[row]) e = field.mul(e, inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || field.is_zero(m[i][j])) continue;
      const Rational f = m[i][j];
      for (std::size_t c = 0; c <= k; ++c) m[i][c] = field.sub(m[i][c], field.mul(f, m[row][c]));
    }
    pivot_row[j] = row++;
  }
  for (std::size_t i = row; i < n; ++i)
    if (!field.is_zero(m[i][k])) return std::nullopt;
  std::vector<Rational> c(k, Rational(0));
  for (std::size_t j = 0; j < k; ++j)
    if (pivot_row[j]) c[j] = m[*pivot_row[j]][k];
  return c;
}

namespace {

// Is target a sum of (positive) elements of `items`? Exact via an unbounded
// knapsack over the common denominator.
bool in_monoid(const Rational& target, const std::vector<Exponent>& items) {
  if (sgn(target) < 0) return false;
  if (sgn(target) == 0) return true;
  Integer den = target.get_den();
  std::vector<Rational> pos;
  for (const auto& e : items)
    if (sgn(e.value()) > 0) pos.push_back(e.value());
  for (const auto& q : pos) den = lcm(den, Integer(q.get_den()));
  const Rational scaled_target = target * Rational(den);
  const Integer big = scaled_target.get_num();
  if (big > 50'000'000) throw NovikovError("witness check: level too large to enumerate");
  const std::size_t limit = big.get_ui();
  std::vector<std::size_t> steps;
  for (const auto& q : pos) {
    const Integer s = Rational(q * Rational(den)).get_num();
    if (s <= big) steps.push_back(s.get_ui());
  }
  std::vector<char> reach(limit + 1, 0);
  reach[0] = 1;
  for (std::size_t x = 1; x <= limit; ++x)
    for (std::size_t s : steps)
      if (s <= x && reach[x - s]) {
        reach[x] = 1;
        break;
      }
  return reach[limit] != 0;
}

}  // namespace

bool ReductionTrace::level_in_witness(const Exponent& level) const {
  return std::any_of(source_support.begin(), source_support.end(), [&](const Exponent& a) {
    return in_monoid(level.value() - a.value(), basis_support);
  });
}

std::string ReductionTrace::to_log() const {
  std::ostringstream out;
  if (steps.empty()) out << "no reduction steps\n";
  for (std::size_t j = 0; j < steps.size(); ++j) {
    out << "step " << j + 1 << ": level " << steps[j].level.str() << ", coefficients [";
    for (std::size_t i = 0; i < steps[j].coefficients.size(); ++i)
      out << (i ? ", " : "") << format_rational(steps[j].coefficients[i]);
    out << "]\n";
  }
  return out.str();
}

FixedPointResult reduce_to_fixed_point(const ValuedVector& v, const AdaptedBasis& basis,
                                       std::optional<Exponent> precision) {
  const Exponent cap = precision.value_or(basis.precision);
  const Field& f = v.field();
  for (const auto& u : basis.basis) {
    if (u.size() != v.size()) throw DimensionError("reduce_to_fixed_point: length mismatch");
    if (!(vec_valuation(u) == Valuation::of(0)))
      throw NovikovError("reduce_to_fixed_point: basis vector " + u.str() +
                         " does not have valuation 0");
  }

  FixedPointResult out;
  out.trace.source_support = support(v);
  for (const auto& u : basis.basis)
    for (const auto& e : support(u)) out.trace.basis_support.push_back(e);
  std::sort(out.trace.basis_support.begin(), out.trace.basis_support.end());
  out.trace.basis_support.erase(
      std::unique(out.trace.basis_support.begin(), out.trace.basis_support.end()),
      out.trace.basis_support.end());
  out.combination.assign(basis.size(), NovikovSeries(f));

  ValuedVector cur = v;
  for (;;) {
    const Valuation val = vec_valuation(cur);
    if (val.is_infinite()) {
      out.status = ApproxStatus::optimal;
      break;
    }
    if (val.is_unknown() || val.value() >= cap) {
      out.status = ApproxStatus::precision_exhausted;
      break;
    }
    const Exponent level = val.value();
    const auto floor = precision_floor(cur);
    if (floor && *floor <= level) {
      out.status = ApproxStatus::precision_exhausted;
      break;
    }
    const std::vector<Rational> lead = leading_coefficients(cur, level);
    const auto c = solve_in_span(f, basis.leading, lead);
    if (!c) {
      out.status = ApproxStatus::optimal;
      break;
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (f.is_zero((*c)[i])) continue;
      cur -= basis.basis[i].shifted(level).scaled((*c)[i]);
      out.combination[i] += NovikovSeries::monomial(f, (*c)[i], level);
    }
    out.trace.steps.push_back(ReductionStep{level, *c});
  }
  out.fixed = std::move(cur);
  return out;
}

namespace {

Exponent exponent_spread(const ValuedMatrix& a) {
  Exponent lo = 0, hi = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (const auto& t : a.at(i, j).terms()) {
        lo = std::min(lo, t.exponent);
        hi = std::max(hi, t.exponent);
      }
  return hi - lo;
}

constexpr std::size_t kMaxColumnSteps = 100000;

}  // namespace

AdaptedBasis adapted_basis(const ValuedMatrix& a, const Exponent& precision,
                           bool optimize_preimages) {
  const Field& f = a.field();
  AdaptedBasis out;
  out.source = a;
  out.precision = precision;
  const bool exact = a.is_exact();

  std::vector<std::size_t> prefix;
  std::size_t prefix_rank = 0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    prefix.push_back(j);
    if (exact) {
      std::vector<std::size_t> all_rows(a.rows());
      std::iota(all_rows.begin(), all_rows.end(), 0);
      const std::size_t r = *exact_rank(a.select(all_rows, prefix));
      if (r == prefix_rank) {
        out.dropped_columns.push_back(j);
        continue;
      }
      prefix_rank = r;
    }

    ValuedVector v = a.column(j);
    ValuedVector x = ValuedVector::unit(f, a.cols(), j);
    bool accepted = false;
    for (std::size_t step = 0; step < kMaxColumnSteps; ++step) {
      const Valuation val = vec_valuation(v);
      if (!val.is_finite()) break;
      if (!exact) {
        const auto floor = precision_floor(v);
        if (val.value() >= precision || (floor && *floor <= val.value())) break;
      }
      v = v.shifted(-val.value());
      x = x.shifted(-val.value());
      const std::vector<Rational> lead = leading_coefficients(v, 0);
      const auto c = solve_in_span(f, out.leading, lead);
      if (!c) {
        out.basis.push_back(v);
        out.preimages.push_back(x);
        out.leading.push_back(lead);
        accepted = true;
        break;
      }
      for (std::size_t i = 0; i < out.basis.size(); ++i) {
        if (f.is_zero((*c)[i])) continue;
        v -= out.basis[i].scaled((*c)[i]);
        x -= out.preimages[i].scaled((*c)[i]);
      }
    }
    if (!accepted) {
      if (exact) throw PrecisionError("adapted_basis: column elimination did not terminate");
      out.dropped_columns.push_back(j);
      if (!v.is_exact_zero()) out.certified = false;
    }
  }

  if (exact && optimize_preimages && !out.basis.empty()) {
    const auto kernel = exact_kernel_basis(a);
    if (kernel && !kernel->empty()) {
      const ValuedMatrix kmat = ValuedMatrix::from_columns(f, *kernel, a.cols());
      const Exponent cap = precision + exponent_spread(a) + exponent_spread(a) + 1;
      const AdaptedBasis kbasis = adapted_basis(kmat, cap, false);
      for (auto& x : out.preimages) x = reduce_to_fixed_point(x, kbasis, cap).fixed;
    }
  }

  std::optional<Exponent> min_val;
  for (const auto& x : out.preimages) {
    const Valuation v = vec_valuation(x);
    if (v.is_finite() && (!min_val || v.value() < *min_val)) min_val = v.value();
  }
  out.gamma = min_val ? -*min_val : Exponent(0);
  return out;
}

Exponent gamma_constant(const AdaptedBasis& basis) { return basis.gamma; }

ValuedVector project_exponents(const ValuedVector& x, const ValueGroup& group) {
  std::vector<NovikovSeries> entries;
  entries.reserve(x.size());
  for (const auto& e : x.entries()) {
    std::vector<Term> kept;
    for (const auto& t : e.terms())
      if (group.contains(t.exponent)) kept.push_back(t);
    entries.emplace_back(x.field(), std::move(kept), e.precision());
  }
  return ValuedVector(x.field(), std::move(entries));
}

namespace {

std::vector<Exponent> negated(const WeightVector& t) {
  std::vector<Exponent> out;
  out.reserve(t.size());
  for (const auto& e : t) out.push_back(-e);
  return out;
}

ValuedVector rows_rescaled(const ValuedVector& w, const WeightVector& t) {
  std::vector<NovikovSeries> entries;
  for (std::size_t i = 0; i < w.size(); ++i) entries.push_back(monomial_shift(w[i], -t[i]));
  return ValuedVector(w.field(), std::move(entries));
}

ValueGroup group_of_matrix(const ValuedMatrix& a) {
  std::vector<Exponent> exps;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (const auto& t : a.at(i, j).terms()) exps.push_back(t.exponent);
  return ValueGroup::generated_by(std::span<const Exponent>(exps));
}

}  // namespace

Approximator::Approximator(ValuedMatrix a, WeightVector t, Exponent precision,
                           std::optional<ValueGroup> group)
    : a_(std::move(a)), t_(std::move(t)), precision_(std::move(precision)), group_(group) {
  if (t_.size() != a_.rows()) throw DimensionError("weight vector length differs from row count");
  const std::vector<Exponent> shifts = negated(t_);
  rescaled_ = a_.rows_shifted(shifts);
  basis_ = adapted_basis(rescaled_, precision_);
  if (rescaled_.is_exact()) exact_rank_ = basis_.size();
}

ApproxResult Approximator::operator()(const ValuedVector& w) const {
  if (w.size() != a_.rows()) throw DimensionError("target length differs from row count");
  const Field& f = a_.field();
  const ValuedVector wr = rows_rescaled(w, t_);
  FixedPointResult fp = reduce_to_fixed_point(wr, basis_, precision_);

  ApproxResult out;
  out.gamma = basis_.gamma;
  out.x0 = ValuedVector::zeros(f, a_.cols());
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (!fp.combination[i].is_exact_zero()) out.x0 += fp.combination[i] * basis_.preimages[i];

  ValueGroup g;
  if (group_) {
    g = *group_;
  } else {
    const std::vector<Exponent> ws = support(w);
    g = group_of_matrix(a_).join(ValueGroup::generated_by(std::span<const Exponent>(ws)));
  }
  out.x0 = project_exponents(out.x0, g);
  out.residual = w - a_.apply(out.x0);
  out.status = fp.status;
  out.trace = std::move(fp.trace);

  if (fp.status == ApproxStatus::optimal) {
    out.distance = weighted_valuation(out.residual, t_);
  } else {
    bool member = false;
    if (exact_rank_ && wr.is_exact()) member = *exact_rank(rescaled_.with_column(wr)) == *exact_rank_;
    if (member) {
      out.status = ApproxStatus::optimal;
      out.membership_certified = true;
      out.distance = Valuation::infinity();
      std::vector<NovikovSeries> entries;
      for (std::size_t i = 0; i < w.size(); ++i)
        entries.push_back(out.residual[i].truncated(precision_ + t_[i]));
      out.residual = ValuedVector(f, std::move(entries));
    } else {
      Exponent reached = precision_;
      const Valuation v = vec_valuation(fp.fixed);
      if (v.is_finite() || v.is_unknown()) reached = std::min(reached, v.value());
      out.distance = Valuation::at_least(reached);
    }
  }

  out.gamma_certificate.x0_valuation = vec_valuation(out.x0);
  const Valuation wv = weighted_valuation(w, t_);
  if (wv.is_finite()) {
    out.gamma_certificate.bound = wv.value() - basis_.gamma;
    const Valuation& xv = out.gamma_certificate.x0_valuation;
    out.gamma_certificate.holds =
        xv.is_infinite() || (xv.is_finite() && xv.value() >= *out.gamma_certificate.bound);
  } else {
    out.gamma_certificate.holds = wv.is_unknown() || out.x0.is_exact_zero();
  }
  return out;
}

ApproxResult best_approx(const ValuedMatrix& a, const WeightVector& t, const ValuedVector& w,
                         const Exponent& precision, std::optional<ValueGroup> group) {
  return Approximator(a, t, precision, group)(w);
}

}  // namespace novikov
