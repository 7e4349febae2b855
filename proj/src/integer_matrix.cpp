#include "novikov/integer_matrix.hpp"

#include <stdexcept>

namespace novikov {

namespace {

// col_a <- s*col_a + t*col_b ; col_b <- u*col_a + v*col_b (simultaneously)
void combine_columns(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s,
                     const Integer& t, const Integer& u, const Integer& v) {
  for (auto& row : m) {
    const Integer x = row[a];
    const Integer y = row[b];
    row[a] = s * x + t * y;
    row[b] = u * x + v * y;
  }
}

void negate_column(IntMatrix& m, std::size_t c) {
  for (auto& row : m) row[c] = -row[c];
}

void swap_columns(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

// col_target -= q * col_source
void subtract_column(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
  for (auto& row : m) row[target] -= q * row[source];
}

}  // namespace

IntMatrix int_identity(std::size_t n) {
  IntMatrix id(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix out(a.size(), std::vector<Integer>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k)
      if (sgn(a[i][k]) != 0)
        for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

ColumnHermite column_hermite(const IntMatrix& input, std::size_t columns) {
  ColumnHermite h{input, int_identity(columns), 0};
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < h.form.size() && pivot < columns; ++r) {
    auto& row = h.form[r];
    for (std::size_t j = pivot + 1; j < columns; ++j) {
      if (sgn(row[j]) == 0) continue;
      if (sgn(row[pivot]) == 0) {
        swap_columns(h.form, pivot, j);
        swap_columns(h.transform, pivot, j);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), row[pivot].get_mpz_t(),
                 row[j].get_mpz_t());
      const Integer a = row[pivot] / g;
      const Integer b = row[j] / g;
      // [[s, -b], [t, a]] has determinant s*a + t*b = 1.
      combine_columns(h.form, pivot, j, s, t, -b, a);
      combine_columns(h.transform, pivot, j, s, t, -b, a);
    }
    if (sgn(row[pivot]) == 0) continue;
    if (sgn(row[pivot]) < 0) {
      negate_column(h.form, pivot);
      negate_column(h.transform, pivot);
    }
    for (std::size_t k = 0; k < pivot; ++k) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), row[k].get_mpz_t(), row[pivot].get_mpz_t());
      if (sgn(q) != 0) {
        subtract_column(h.form, k, pivot, q);
        subtract_column(h.transform, k, pivot, q);
      }
    }
    ++pivot;
  }
  h.rank = pivot;
  return h;
}

std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& input, std::size_t columns) {
  const ColumnHermite h = column_hermite(input, columns);
  std::vector<std::vector<Integer>> kernel;
  for (std::size_t c = h.rank; c < columns; ++c) {
    std::vector<Integer> v(columns);
    for (std::size_t r = 0; r < columns; ++r) v[r] = h.transform[r][c];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  // Gauss-Jordan over Q, then check integrality.
  const std::size_t n = u.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = u[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) throw std::invalid_argument("unimodular_inverse: singular matrix");
    std::swap(a[p], a[c]);
    const Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntMatrix out(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational x = a[i][n + j];
      x.canonicalize();
      if (x.get_den() != 1) throw std::invalid_argument("unimodular_inverse: not unimodular");
      out[i][j] = x.get_num();
    }
  return out;
}

}  // namespace novikov
