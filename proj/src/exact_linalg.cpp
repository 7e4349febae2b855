#include "novikov/exact_linalg.hpp"

#include <algorithm>
#include <numeric>

#include "novikov/errors.hpp"

namespace novikov {

namespace {

// Dense polynomial in s over a field; c[k] is the coefficient of s^k.
struct Poly {
  std::vector<Rational> c;

  bool is_zero() const { return c.empty(); }
  void trim() {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  }
};

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly out{std::vector<Rational>(a.c.size() + b.c.size() - 1, Rational(0))};
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (sgn(a.c[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] = f.add(out.c[i + j], f.mul(a.c[i], b.c[j]));
  }
  out.trim();
  return out;
}

Poly poly_sub(const Field& f, const Poly& a, const Poly& b) {
  Poly out{a.c};
  if (out.c.size() < b.c.size()) out.c.resize(b.c.size(), Rational(0));
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] = f.sub(out.c[i], b.c[i]);
  out.trim();
  return out;
}

// Exact quotient a / b; the division is known to be exact in Bareiss.
Poly poly_div_exact(const Field& f, Poly a, const Poly& b) {
  if (b.is_zero()) throw NovikovError("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.c.size() < b.c.size()) throw NovikovError("inexact polynomial division");
  const Rational lead_inv = f.inv(b.c.back());
  Poly q{std::vector<Rational>(a.c.size() - b.c.size() + 1, Rational(0))};
  for (std::size_t k = q.c.size(); k-- > 0;) {
    const Rational coef = f.mul(a.c[k + b.c.size() - 1], lead_inv);
    q.c[k] = coef;
    if (sgn(coef) == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      a.c[k + j] = f.sub(a.c[k + j], f.mul(coef, b.c[j]));
  }
  a.trim();
  if (!a.is_zero()) throw NovikovError("inexact polynomial division");
  q.trim();
  return q;
}

// Matrix of polynomials obtained from an exact series matrix by writing each
// exponent as k*g0 and multiplying row i by s^{-row_shift[i]}.
struct PolyMatrix {
  Field field;
  Rational g0;
  std::vector<std::vector<Poly>> m;
  std::vector<Integer> row_shift;
};

std::optional<PolyMatrix> to_poly(const ValuedMatrix& a) {
  if (!a.is_exact()) return std::nullopt;
  std::vector<Exponent> exps;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (const auto& t : a.at(i, j).terms()) exps.push_back(t.exponent);
  const ValueGroup g = ValueGroup::generated_by(std::span<const Exponent>(exps));
  PolyMatrix pm{a.field(), g.generator(), {}, {}};
  pm.m.assign(a.rows(), std::vector<Poly>(a.cols()));
  pm.row_shift.assign(a.rows(), 0);
  auto degree = [&](const Exponent& e) -> Integer {
    if (g.is_trivial()) return 0;
    const Rational k = e.value() / g.generator();
    return k.get_num();
  };
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::optional<Integer> lo;
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (const auto& t : a.at(i, j).terms()) {
        const Integer d = degree(t.exponent);
        if (!lo || d < *lo) lo = d;
      }
    pm.row_shift[i] = lo.value_or(0);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Poly p;
      for (const auto& t : a.at(i, j).terms()) {
        const Integer d = degree(t.exponent) - pm.row_shift[i];
        const std::size_t k = d.get_ui();
        if (p.c.size() <= k) p.c.resize(k + 1, Rational(0));
        p.c[k] = t.coeff;
      }
      p.trim();
      pm.m[i][j] = std::move(p);
    }
  }
  return pm;
}

struct Elimination {
  std::size_t rank = 0;
  std::vector<std::size_t> row_order;
  std::vector<std::size_t> col_order;
  int sign = 1;
  Poly last_pivot;
};

// Fraction-free Bareiss elimination with complete pivoting.
Elimination bareiss(const Field& f, std::vector<std::vector<Poly>> m, std::size_t rows,
                    std::size_t cols) {
  Elimination e;
  e.row_order.resize(rows);
  e.col_order.resize(cols);
  std::iota(e.row_order.begin(), e.row_order.end(), 0);
  std::iota(e.col_order.begin(), e.col_order.end(), 0);
  Poly prev{{Rational(1)}};
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = k; i < rows && !pivot; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (!m[i][j].is_zero()) {
          pivot = {i, j};
          break;
        }
    if (!pivot) break;
    if (pivot->first != k) {
      std::swap(m[pivot->first], m[k]);
      std::swap(e.row_order[pivot->first], e.row_order[k]);
      e.sign = -e.sign;
    }
    if (pivot->second != k) {
      for (auto& row : m) std::swap(row[pivot->second], row[k]);
      std::swap(e.col_order[pivot->second], e.col_order[k]);
      e.sign = -e.sign;
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        const Poly num = poly_sub(f, poly_mul(f, m[k][k], m[i][j]), poly_mul(f, m[i][k], m[k][j]));
        m[i][j] = poly_div_exact(f, num, prev);
      }
      m[i][k] = Poly{};
    }
    prev = m[k][k];
    e.last_pivot = prev;
    ++e.rank;
  }
  return e;
}

NovikovSeries poly_to_series(const Field& f, const Poly& p, const Integer& shift,
                             const Rational& g0) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < p.c.size(); ++k) {
    if (sgn(p.c[k]) == 0) continue;
    const Rational e = Rational(Integer(k) + shift) * g0;
    terms.push_back(Term{Exponent(e), p.c[k]});
  }
  return NovikovSeries(f, std::move(terms));
}

}  // namespace

std::optional<ExactPivots> exact_pivots(const ValuedMatrix& a) {
  auto pm = to_poly(a);
  if (!pm) return std::nullopt;
  const Elimination e = bareiss(pm->field, pm->m, a.rows(), a.cols());
  ExactPivots p;
  p.rank = e.rank;
  p.rows.assign(e.row_order.begin(), e.row_order.begin() + e.rank);
  p.cols.assign(e.col_order.begin(), e.col_order.begin() + e.rank);
  std::sort(p.rows.begin(), p.rows.end());
  std::sort(p.cols.begin(), p.cols.end());
  return p;
}

std::optional<std::size_t> exact_rank(const ValuedMatrix& a) {
  auto p = exact_pivots(a);
  if (!p) return std::nullopt;
  return p->rank;
}

std::optional<NovikovSeries> exact_determinant(const ValuedMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("determinant of a non-square matrix");
  if (a.rows() == 0) return NovikovSeries::constant(a.field(), 1);
  auto pm = to_poly(a);
  if (!pm) return std::nullopt;
  const Elimination e = bareiss(pm->field, pm->m, a.rows(), a.cols());
  if (e.rank < a.rows()) return NovikovSeries(a.field());
  Integer shift = 0;
  for (const auto& s : pm->row_shift) shift += s;
  NovikovSeries det = poly_to_series(pm->field, e.last_pivot, shift, pm->g0);
  return e.sign < 0 ? -det : det;
}

std::optional<std::vector<ValuedVector>> exact_kernel_basis(const ValuedMatrix& a) {
  auto piv = exact_pivots(a);
  if (!piv) return std::nullopt;
  const Field& f = a.field();
  std::vector<ValuedVector> basis;
  const ValuedMatrix minor = a.select(piv->rows, piv->cols);
  const NovikovSeries det = *exact_determinant(minor);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (std::find(piv->cols.begin(), piv->cols.end(), j) != piv->cols.end()) continue;
    ValuedVector k = ValuedVector::zeros(f, a.cols());
    k[j] = det;
    // Cramer: minor * y = -a[R, j], scaled by det(minor).
    for (std::size_t l = 0; l < piv->rank; ++l) {
      ValuedMatrix replaced = minor;
      for (std::size_t i = 0; i < piv->rank; ++i) replaced.at(i, l) = -a.at(piv->rows[i], j);
      k[piv->cols[l]] = *exact_determinant(replaced);
    }
    basis.push_back(std::move(k));
  }
  return basis;
}

std::optional<std::size_t> rank_at_precision(const ValuedMatrix& a, const Exponent& precision) {
  const Field& f = a.field();
  std::vector<std::vector<NovikovSeries>> m(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i].push_back(a.at(i, j).truncated(precision));
  std::vector<bool> row_used(a.rows(), false), col_used(a.cols(), false);
  std::size_t rank = 0;
  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    std::optional<Exponent> best;
    bool undecided = false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (row_used[i]) continue;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (col_used[j]) continue;
        const Valuation v = m[i][j].valuation();
        if (v.is_unknown()) undecided = true;
        if (!v.is_finite()) continue;
        if (!best || v.value() < *best) {
          best = v.value();
          pivot = {i, j};
        }
      }
    }
    if (!pivot) {
      if (undecided) return std::nullopt;
      return rank;
    }
    const auto [pi, pj] = *pivot;
    const NovikovSeries inv = invert(m[pi][pj], precision - *best);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (row_used[i] || i == pi || m[i][pj].is_exact_zero()) continue;
      const NovikovSeries factor = m[i][pj] * inv;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (col_used[j]) continue;
        m[i][j] = m[i][j] - factor * m[pi][j];
      }
      m[i][pj] = NovikovSeries(f);
    }
    row_used[pi] = true;
    col_used[pj] = true;
    ++rank;
  }
}

}  // namespace novikov
