#include "novikov/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>

#include "novikov/errors.hpp"

namespace novikov {

void OracleConfig::validate() const {
  if (field.is_rationals() || field.characteristic() > 3)
    throw NovikovError("oracle: field must be F2 or F3, got " + field.name());
  if (denominator < 1 || denominator > 2)
    throw NovikovError("oracle: group must be Z or (1/2)Z");
  if (bound < Exponent(0) || bound > Exponent(2)) throw NovikovError("oracle: window bound must lie in [0, 2]");
  if (precision > Exponent(6)) throw NovikovError("oracle: precision must be at most 6");
  if (max_dimension > 3) throw NovikovError("oracle: dimensions must be at most 3");
}

namespace {

bool on_lattice(const Exponent& e, long d) {
  const Rational scaled = e.value() * Rational(d);
  return scaled.get_den() == 1;
}

long lattice_index(const Exponent& e, long d) {
  const Rational scaled = e.value() * Rational(d);
  if (scaled.get_den() != 1) throw NovikovError("oracle: exponent " + e.str() + " is off the lattice");
  return scaled.get_num().get_si();
}

// Smallest lattice index k with k/d >= x.
long ceil_index(const Rational& x, long d) {
  const Rational scaled = x * Rational(d);
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return q.get_si();
}

Rational index_value(long k, long d) {
  Rational r(k, d);
  r.canonicalize();
  return r;
}

NovikovSeries leibniz(const ValuedMatrix& a, const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols) {
  const Field& f = a.field();
  const std::size_t r = rows.size();
  if (r == 0) return NovikovSeries::constant(f, 1);
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  NovikovSeries total(f);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j)
        if (perm[i] > perm[j]) ++inversions;
    NovikovSeries prod = NovikovSeries::constant(f, inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < r; ++i) prod = prod * a.at(rows[i], cols[perm[i]]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + k, true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) s.push_back(i);
    out.push_back(std::move(s));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

Rational weighted_min(const ValuedVector& w, const WeightVector& t) {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].terms().empty()) continue;
    const Rational v = w[i].terms().front().exponent.value() - t[i].value();
    if (!best || v < *best) best = v;
  }
  return *best;
}

}  // namespace

void check_oracle_bounds(const ValuedMatrix& a, const WeightVector& t, const ValuedVector& w,
                         const OracleConfig& cfg) {
  cfg.validate();
  if (!(a.field() == cfg.field) || !(w.field() == cfg.field))
    throw NovikovError("oracle: instance field differs from configured field");
  if (a.rows() > cfg.max_dimension || a.cols() > cfg.max_dimension)
    throw NovikovError("oracle: matrix larger than configured dimension bound");
  if (t.size() != a.rows() || w.size() != a.rows())
    throw DimensionError("oracle: weight/target length differs from row count");
  if (!a.is_exact() || !w.is_exact()) throw NovikovError("oracle: inputs must be exact");
  auto check = [&](const Exponent& e, bool lattice) {
    if (e < -cfg.bound || e > cfg.bound)
      throw NovikovError("oracle: exponent " + e.str() + " outside the window [-" +
                         cfg.bound.str() + ", " + cfg.bound.str() + "]");
    if (lattice && !on_lattice(e, cfg.denominator))
      throw NovikovError("oracle: exponent " + e.str() + " is not in the configured group");
  };
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (const auto& term : a.at(i, j).terms()) check(term.exponent, true);
    for (const auto& term : w[i].terms()) check(term.exponent, true);
    check(t[i], false);
  }
}

bool enumeration_fits(const OracleWindow& window, const OracleConfig& cfg) {
  const long double limit = std::log2(static_cast<long double>(cfg.max_enumeration));
  return window.log2_space <= limit + 1e-9L;
}

OracleWindow oracle_window(const ValuedMatrix& a, const WeightVector& t, const ValuedVector& w,
                           const OracleConfig& cfg) {
  const long d = cfg.denominator;
  OracleWindow best;
  if (w.is_exact_zero()) return best;
  const Rational wt = weighted_min(w, t);
  const long double bits = std::log2(static_cast<long double>(cfg.field.characteristic()));

  for (std::size_t r = std::min(a.rows(), a.cols()); r >= 1; --r) {
    bool found = false;
    for (const auto& rows : subsets(a.rows(), r)) {
      for (const auto& cols : subsets(a.cols(), r)) {
        const NovikovSeries det = leibniz(a, rows, cols);
        if (det.is_exact_zero()) continue;
        found = true;
        // Smallest valuation among the cofactors of the minor.
        std::optional<Rational> adj_min;
        if (r == 1) {
          adj_min = Rational(0);
        } else {
          for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
              std::vector<std::size_t> rr, cc;
              for (std::size_t k = 0; k < r; ++k) {
                if (k != i) rr.push_back(rows[k]);
                if (k != j) cc.push_back(cols[k]);
              }
              const NovikovSeries cof = leibniz(a, rr, cc);
              if (cof.terms().empty()) continue;
              const Rational v = cof.terms().front().exponent.value();
              if (!adj_min || v < *adj_min) adj_min = v;
            }
        }
        Rational t_min = t[rows[0]].value();
        for (std::size_t i : rows) t_min = std::min(t_min, t[i].value());
        const Rational lo = wt + t_min + *adj_min - det.terms().front().exponent.value();

        OracleWindow cand;
        cand.rank = r;
        cand.rows = rows;
        cand.columns = cols;
        const long lo_idx = ceil_index(lo, d);
        cand.lower = Exponent(index_value(lo_idx, d));
        for (std::size_t j : cols) {
          std::optional<Rational> reach;
          for (std::size_t i = 0; i < a.rows(); ++i) {
            if (a.at(i, j).terms().empty()) continue;
            const Rational v = t[i].value() - a.at(i, j).terms().front().exponent.value();
            if (!reach || v > *reach) reach = v;
          }
          const Rational hi = cfg.precision.value() + *reach;
          cand.upper.emplace_back(hi);
          std::vector<Exponent> slots;
          for (long k = lo_idx; index_value(k, d) < hi; ++k) slots.emplace_back(index_value(k, d));
          cand.variables += slots.size();
          cand.slots.push_back(std::move(slots));
        }
        cand.log2_space = static_cast<long double>(cand.variables) * bits;
        if (best.rank == 0 || cand.variables < best.variables) best = std::move(cand);
      }
    }
    if (found) break;
  }
  return best;
}

namespace {

// Dense mod-p view of one exact series on the lattice.
struct DenseSeries {
  long offset = 0;
  std::vector<int> coeff;

  int at(long k) const {
    const long i = k - offset;
    return (i < 0 || i >= static_cast<long>(coeff.size())) ? 0 : coeff[i];
  }
};

int mod_p(const Rational& c, long p) {
  // Field elements are canonical representatives in [0, p).
  return static_cast<int>(((c.get_num().get_si() % p) + p) % p);
}

DenseSeries dense(const NovikovSeries& s, long d, long p) {
  DenseSeries out;
  if (s.terms().empty()) return out;
  out.offset = lattice_index(s.terms().front().exponent, d);
  const long last = lattice_index(s.terms().back().exponent, d);
  out.coeff.assign(last - out.offset + 1, 0);
  for (const auto& term : s.terms())
    out.coeff[lattice_index(term.exponent, d) - out.offset] = mod_p(term.coeff, p);
  return out;
}

// The coefficient problem shared by both evaluators: residual_i on indices
// [lo[i], hi[i]) and one variable per (column, slot).
struct Problem {
  long p;
  long d;
  std::vector<long> lo, hi;               // per row
  std::vector<std::vector<int>> target;   // w_i on [lo, hi)
  // effect[v][i]: column of A shifted to the slot exponent, on [lo, hi)
  std::vector<std::vector<std::vector<int>>> effect;
};

Problem build_problem(const ValuedMatrix& a, const WeightVector& t, const ValuedVector& w,
                      const OracleConfig& cfg, const OracleWindow& win) {
  Problem pr;
  pr.p = static_cast<long>(cfg.field.characteristic());
  pr.d = cfg.denominator;
  const std::size_t n = a.rows();
  pr.lo.resize(n);
  pr.hi.resize(n);
  const long lo_idx = lattice_index(win.lower, pr.d);
  for (std::size_t i = 0; i < n; ++i) {
    long lo = ceil_index(cfg.precision.value() + t[i].value(), pr.d);
    pr.hi[i] = lo;
    if (!w[i].terms().empty()) lo = std::min(lo, lattice_index(w[i].terms().front().exponent, pr.d));
    for (std::size_t j : win.columns)
      if (!a.at(i, j).terms().empty())
        lo = std::min(lo, lo_idx + lattice_index(a.at(i, j).terms().front().exponent, pr.d));
    pr.lo[i] = lo;
    const DenseSeries ws = dense(w[i], pr.d, pr.p);
    std::vector<int> row(pr.hi[i] - pr.lo[i], 0);
    for (long k = pr.lo[i]; k < pr.hi[i]; ++k) row[k - pr.lo[i]] = ws.at(k);
    pr.target.push_back(std::move(row));
  }
  for (std::size_t c = 0; c < win.columns.size(); ++c) {
    std::vector<DenseSeries> col;
    for (std::size_t i = 0; i < n; ++i) col.push_back(dense(a.at(i, win.columns[c]), pr.d, pr.p));
    for (const auto& e : win.slots[c]) {
      const long s = lattice_index(e, pr.d);
      std::vector<std::vector<int>> eff(n);
      for (std::size_t i = 0; i < n; ++i) {
        eff[i].assign(pr.hi[i] - pr.lo[i], 0);
        for (long k = pr.lo[i]; k < pr.hi[i]; ++k) eff[i][k - pr.lo[i]] = col[i].at(k - s);
      }
      pr.effect.push_back(std::move(eff));
    }
  }
  return pr;
}

Valuation value_of(const Problem& pr, const std::vector<std::vector<int>>& residual,
                   const WeightVector& t, const Exponent& precision) {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < residual.size(); ++i)
    for (std::size_t k = 0; k < residual[i].size(); ++k)
      if (residual[i][k] != 0) {
        const Rational level = index_value(pr.lo[i] + static_cast<long>(k), pr.d) - t[i].value();
        if (!best || level < *best) best = level;
        break;
      }
  if (!best) return Valuation::at_least(precision);
  return Valuation::of(Exponent(*best));
}

bool better(const Valuation& a, const Valuation& b) {
  if (b.is_unknown()) return false;
  if (a.is_unknown()) return true;
  return a.value() > b.value();
}

}  // namespace

OracleResult oracle_best_approx(const ValuedMatrix& a, const WeightVector& t,
                                const ValuedVector& w, const OracleConfig& cfg) {
  check_oracle_bounds(a, t, w, cfg);
  OracleResult out;
  if (w.is_exact_zero()) return out;
  out.window = oracle_window(a, t, w, cfg);
  if (!enumeration_fits(out.window, cfg))
    throw SearchSpaceOverflow("oracle: search space of 2^" +
                              std::to_string(static_cast<double>(out.window.log2_space)) +
                              " assignments exceeds the guard");
  if (cfg.log)
    *cfg.log << "oracle: enumerating " << cfg.field.characteristic() << "^"
             << out.window.variables << " assignments\n";
  const Problem pr = build_problem(a, t, w, cfg, out.window);
  std::vector<std::vector<int>> residual = pr.target;
  std::vector<int> digits(pr.effect.size(), 0);
  out.value = value_of(pr, residual, t, cfg.precision);
  out.visited = 1;
  for (;;) {
    if (out.value.is_unknown()) break;  // nothing beats "at least the precision"
    std::size_t s = 0;
    for (; s < digits.size(); ++s) {
      for (std::size_t i = 0; i < residual.size(); ++i)
        for (std::size_t k = 0; k < residual[i].size(); ++k)
          residual[i][k] = static_cast<int>((residual[i][k] + pr.p - pr.effect[s][i][k]) % pr.p);
      if (++digits[s] < pr.p) break;
      digits[s] = 0;
    }
    if (s == digits.size()) break;
    ++out.visited;
    const Valuation v = value_of(pr, residual, t, cfg.precision);
    if (better(v, out.value)) out.value = v;
  }
  return out;
}

OracleResult oracle_best_approx_linear(const ValuedMatrix& a, const WeightVector& t,
                                       const ValuedVector& w, const OracleConfig& cfg) {
  check_oracle_bounds(a, t, w, cfg);
  OracleResult out;
  if (w.is_exact_zero()) return out;
  out.window = oracle_window(a, t, w, cfg);
  const Problem pr = build_problem(a, t, w, cfg, out.window);
  const std::size_t nv = pr.effect.size();

  struct Equation {
    Rational level;
    std::size_t row;
    std::size_t k;
  };
  std::vector<Equation> eqs;
  for (std::size_t i = 0; i < pr.target.size(); ++i)
    for (std::size_t k = 0; k < pr.target[i].size(); ++k)
      eqs.push_back({index_value(pr.lo[i] + static_cast<long>(k), pr.d) - t[i].value(), i, k});
  std::stable_sort(eqs.begin(), eqs.end(),
                   [](const Equation& x, const Equation& y) { return x.level < y.level; });

  const long p = pr.p;
  auto inv = [p](long x) {
    for (long y = 1; y < p; ++y)
      if ((x * y) % p == 1) return y;
    return 0L;
  };
  // Echelon rows: coefficient vector (nv entries) followed by the right-hand side.
  std::vector<std::vector<long>> echelon;
  std::vector<std::size_t> pivots;
  for (const auto& eq : eqs) {
    std::vector<long> row(nv + 1);
    for (std::size_t v = 0; v < nv; ++v) row[v] = pr.effect[v][eq.row][eq.k];
    row[nv] = pr.target[eq.row][eq.k];
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const long f = row[pivots[e]];
      if (f == 0) continue;
      for (std::size_t v = 0; v <= nv; ++v) row[v] = ((row[v] - f * echelon[e][v]) % p + p) % p;
    }
    std::size_t piv = 0;
    while (piv < nv && row[piv] == 0) ++piv;
    ++out.visited;
    if (piv == nv) {
      if (row[nv] != 0) {
        out.value = Valuation::of(Exponent(eq.level));
        return out;
      }
      continue;
    }
    const long s = inv(row[piv]);
    for (auto& x : row) x = (x * s) % p;
    echelon.push_back(std::move(row));
    pivots.push_back(piv);
  }
  out.value = Valuation::at_least(cfg.precision);
  return out;
}

}  // namespace novikov
