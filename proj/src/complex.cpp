#include "novikov/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "novikov/errors.hpp"
#include "novikov/exact_linalg.hpp"

namespace novikov {

FilteredComplex::FilteredComplex(Field field, std::vector<Generator> generators,
                                 PeriodData period, ValuedMatrix boundary)
    : field_(field),
      generators_(std::move(generators)),
      period_(std::move(period)),
      boundary_(std::move(boundary)) {
  if (boundary_.rows() != generators_.size() || boundary_.cols() != generators_.size())
    throw DimensionError("boundary matrix must be " + std::to_string(generators_.size()) + "x" +
                         std::to_string(generators_.size()));
  if (!(boundary_.field() == field_)) throw DimensionError("boundary matrix over another field");
}

WeightVector FilteredComplex::actions() const {
  WeightVector t;
  t.reserve(generators_.size());
  for (const auto& g : generators_) t.push_back(g.action);
  return t;
}

Exponent FilteredComplex::max_action() const {
  if (generators_.empty()) return 0;
  Exponent m = generators_.front().action;
  for (const auto& g : generators_) m = std::max(m, g.action);
  return m;
}

bool FilteredComplex::is_graded() const {
  return !generators_.empty() &&
         std::all_of(generators_.begin(), generators_.end(),
                     [](const Generator& g) { return g.degree.has_value(); });
}

std::optional<std::size_t> FilteredComplex::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].label == label) return i;
  return std::nullopt;
}

std::string to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::shape: return "shape";
    case Violation::Kind::period: return "period";
    case Violation::Kind::exponent_outside_group: return "exponent_outside_group";
    case Violation::Kind::filtration: return "filtration";
    case Violation::Kind::grading: return "grading";
    case Violation::Kind::boundary_squared: return "boundary_squared";
  }
  return "unknown";
}

std::string ValidationReport::str() const {
  std::ostringstream out;
  if (valid()) {
    out << "valid";
  } else {
    out << "invalid (" << to_string(violation->kind) << " at row " << violation->row
        << ", column " << violation->column << "): " << violation->message;
  }
  for (const auto& n : notes) out << "\nnote: " << n;
  return out.str();
}

ValidationReport validate(const FilteredComplex& c) {
  ValidationReport report;
  auto fail = [&](Violation::Kind kind, std::size_t row, std::size_t col, std::string msg) {
    report.violation = Violation{kind, row, col, std::move(msg)};
    return report;
  };

  try {
    c.period().validate();
  } catch (const NovikovError& e) {
    return fail(Violation::Kind::period, 0, 0, e.what());
  }
  const Splitting split = compute_splitting(c.period());
  if (split.kernel_rank() > 0 || !c.period().torsion.empty())
    report.notes.push_back("ker(omega) is nontrivial; coefficients are modeled over " +
                           c.field().name() + " with value group " + c.value_group().str());

  const ValueGroup g = c.value_group();
  const ValuedMatrix& d = c.boundary();
  const auto& gens = c.generators();
  const std::size_t n = c.size();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const NovikovSeries& e = d.at(j, i);
      for (const auto& t : e.terms()) {
        if (!g.contains(t.exponent))
          return fail(Violation::Kind::exponent_outside_group, j, i,
                      "exponent " + t.exponent.str() + " is not in G = " + g.str());
        if (!(gens[j].action - t.exponent < gens[i].action))
          return fail(Violation::Kind::filtration, j, i,
                      "term T^(" + t.exponent.str() + ") of the boundary of " + gens[i].label +
                          " has action " + (gens[j].action - t.exponent).str() +
                          ", not below " + gens[i].action.str());
      }
      if (!e.is_exact())
        report.notes.push_back("boundary entry (" + std::to_string(j) + ", " +
                               std::to_string(i) + ") is known only below T^(" +
                               e.precision()->str() + ")");
    }
  }

  const bool any_degree = std::any_of(gens.begin(), gens.end(),
                                      [](const Generator& x) { return x.degree.has_value(); });
  if (any_degree) {
    for (std::size_t i = 0; i < n; ++i)
      if (!gens[i].degree)
        return fail(Violation::Kind::grading, i, i, "generator " + gens[i].label + " has no degree");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!d.at(j, i).is_exact_zero() && *gens[j].degree != *gens[i].degree - 1)
          return fail(Violation::Kind::grading, j, i,
                      "boundary of " + gens[i].label + " (degree " +
                          std::to_string(*gens[i].degree) + ") has a component on " +
                          gens[j].label + " (degree " + std::to_string(*gens[j].degree) + ")");
  }

  const ValuedMatrix dd = d * d;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!dd.at(j, i).terms().empty())
        return fail(Violation::Kind::boundary_squared, j, i,
                    "entry of the squared boundary is " + dd.at(j, i).str());
  return report;
}

FiltrationLevel filtration_level(const FilteredComplex& c, const Chain& x) {
  if (x.size() != c.size()) throw DimensionError("chain length differs from complex size");
  return FiltrationLevel::negated(weighted_valuation(x, c.actions()));
}

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::yes: return "yes";
    case Tristate::no: return "no";
    case Tristate::unknown: return "unknown";
  }
  return "unknown";
}

Tristate is_cycle(const FilteredComplex& c, const Chain& x) {
  if (x.size() != c.size()) throw DimensionError("chain length differs from complex size");
  const ValuedVector dx = c.boundary().apply(x);
  if (dx.is_exact_zero()) return Tristate::yes;
  for (const auto& e : dx.entries())
    if (!e.terms().empty()) return Tristate::no;
  return Tristate::unknown;
}

Exponent default_precision(const FilteredComplex& c, const Chain* chain) {
  const auto& gens = c.generators();
  Exponent lo = 0, hi = 0;
  auto visit = [&](std::size_t row, const NovikovSeries& s) {
    for (const auto& t : s.terms()) {
      const Exponent e = t.exponent - gens[row].action;
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
  };
  for (std::size_t j = 0; j < c.size(); ++j)
    for (std::size_t i = 0; i < c.size(); ++i) visit(j, c.boundary().at(j, i));
  if (chain)
    for (std::size_t j = 0; j < chain->size() && j < c.size(); ++j) visit(j, (*chain)[j]);
  return Integer(4) * (hi - lo) + Exponent(1);
}

ComplexSolver::ComplexSolver(const FilteredComplex& c, Exponent precision)
    : complex_(c), approx_(c.boundary(), c.actions(), std::move(precision), c.value_group()) {}

Exponent ComplexSolver::depth() const { return approx_.gamma() + complex_.max_action(); }

BoundaryWitness ComplexSolver::make_witness(const Chain& target, const ApproxResult& r) const {
  BoundaryWitness w;
  w.h = r.x0;
  w.level_h = filtration_level(complex_, r.x0);
  w.level_c = filtration_level(complex_, target);
  w.depth = depth();
  w.solves = std::all_of(r.residual.entries().begin(), r.residual.entries().end(),
                         [](const NovikovSeries& s) { return s.terms().empty(); });
  if (w.level_h.is_minus_infinity()) {
    w.bound_holds = true;
  } else if (w.level_h.is_finite() && w.level_c.is_finite()) {
    w.bound_holds = w.level_h.value() <= w.level_c.value() + w.depth;
  }
  return w;
}

SpectralResult ComplexSolver::spectral(const Chain& x) const {
  if (is_cycle(complex_, x) == Tristate::no) throw NovikovError("spectral_number: input is not a cycle");
  const ApproxResult r = approx_(x);
  SpectralResult out;
  out.precision = approx_.precision();
  out.status = r.status;
  out.representative = r.residual;
  out.trace = r.trace;
  if (r.status == ApproxStatus::precision_exhausted) {
    out.rho = FiltrationLevel::negated(r.distance);
    return out;
  }
  if (r.distance.is_infinite()) {
    out.rho = FiltrationLevel::minus_infinity();
    out.witness = make_witness(x, r);
    if (!out.witness->solves) out.status = ApproxStatus::precision_exhausted;
  } else {
    out.rho = FiltrationLevel::negated(r.distance);
  }
  return out;
}

BoundarySolution ComplexSolver::solve(const Chain& target) const {
  const ApproxResult r = approx_(target);
  BoundarySolution out;
  out.status = r.status;
  if (r.status == ApproxStatus::precision_exhausted) {
    out.is_boundary = Tristate::unknown;
  } else if (r.distance.is_infinite()) {
    out.is_boundary = Tristate::yes;
    out.witness = make_witness(target, r);
  } else {
    out.is_boundary = Tristate::no;
  }
  return out;
}

SpectralResult spectral_number(const FilteredComplex& c, const Chain& x,
                               std::optional<Exponent> precision) {
  const Exponent p = precision ? *precision : default_precision(c, &x);
  return ComplexSolver(c, p).spectral(x);
}

BoundarySolution boundary_solve(const FilteredComplex& c, const Chain& target,
                                std::optional<Exponent> precision) {
  const Exponent p = precision ? *precision : default_precision(c, &target);
  return ComplexSolver(c, p).solve(target);
}

Exponent boundary_depth(const FilteredComplex& c, std::optional<Exponent> precision) {
  const Exponent p = precision ? *precision : default_precision(c);
  return ComplexSolver(c, p).depth();
}

bool spectrality_check(const FilteredComplex& c, const SpectralResult& r) {
  if (r.status != ApproxStatus::optimal || !r.rho.is_finite()) return false;
  const ValueGroup g = c.value_group();
  return std::any_of(c.generators().begin(), c.generators().end(), [&](const Generator& p) {
    return g.contains(p.action - r.rho.value());
  });
}

namespace {

std::optional<std::size_t> matrix_rank(const ValuedMatrix& m, const Exponent& precision) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.is_exact()) return exact_rank(m);
  return rank_at_precision(m, precision);
}

}  // namespace

HomologyRank homology_rank(const FilteredComplex& c, std::optional<Exponent> precision) {
  const Exponent p = precision ? *precision : default_precision(c);
  HomologyRank out;
  if (const auto r = matrix_rank(c.boundary(), p)) out.total = c.size() - 2 * *r;
  if (!c.is_graded()) return out;

  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < c.size(); ++i) by_degree[*c.generators()[i].degree].push_back(i);
  // rank of the block from degree d to degree d - 1
  auto block_rank = [&](int d) -> std::optional<std::size_t> {
    const auto src = by_degree.find(d);
    const auto dst = by_degree.find(d - 1);
    if (src == by_degree.end() || dst == by_degree.end()) return 0;
    return matrix_rank(c.boundary().select(dst->second, src->second), p);
  };
  for (const auto& [d, idx] : by_degree) {
    const auto out_rank = block_rank(d);
    const auto in_rank = block_rank(d + 1);
    if (out_rank && in_rank)
      out.by_degree[d] = idx.size() - *out_rank - *in_rank;
    else
      out.by_degree[d] = std::nullopt;
  }
  return out;
}

}  // namespace novikov
