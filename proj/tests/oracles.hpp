#pragma once

// Reference implementations used only by the tests. None of them calls the
// library's elimination, kron or braid code: they work on plain nested
// vectors or on explicit index bookkeeping.

#include <cstddef>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "braidkit/matrix.hpp"

namespace oracle {

using braidkit::ExactMatrix;
using braidkit::FieldSpec;
using braidkit::Scalar;
using Rows = std::vector<std::vector<mpq_class>>;

inline Rows to_rows(const ExactMatrix& m) {
  Rows rows(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c).rational();
  return rows;
}

inline ExactMatrix from_rows(const Rows& rows, std::size_t cols) {
  const FieldSpec q = FieldSpec::rationals();
  ExactMatrix m(q, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, Scalar(q, rows[r][c]));
  return m;
}

/// Textbook Gauss–Jordan over Q with division at every step.
inline Rows naive_rref(Rows a, std::vector<std::size_t>* pivots = nullptr) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const mpq_class lead = a[r][c];
    for (auto& x : a[r]) x /= lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const mpq_class f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return a;
}

/// Kernel basis as columns, normalized as the row-reduced form of its
/// transpose (zero rows dropped).
inline ExactMatrix naive_nullspace(const ExactMatrix& m) {
  std::vector<std::size_t> pivots;
  const Rows r = naive_rref(to_rows(m), &pivots);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  Rows basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][f];
    basis.push_back(v);
  }
  Rows canon = naive_rref(basis);
  ExactMatrix out(FieldSpec::rationals(), cols, canon.size());
  for (std::size_t j = 0; j < canon.size(); ++j)
    for (std::size_t i = 0; i < cols; ++i) out.set(i, j, Scalar(FieldSpec::rationals(), canon[j][i]));
  return out;
}

/// Schoolbook product via at()/set().
inline ExactMatrix naive_product(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar s = Scalar::zero(a.field());
      for (std::size_t k = 0; k < a.cols(); ++k) s += a.at(i, k) * b.at(k, j);
      out.set(i, j, s);
    }
  return out;
}

inline ExactMatrix random_matrix(const FieldSpec& f, std::size_t rows, std::size_t cols,
                                 std::mt19937_64& rng, int spread = 3, int zero_bias = 0) {
  ExactMatrix m(f, rows, cols);
  std::uniform_int_distribution<int> dist(-spread, spread + zero_bias);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const int v = dist(rng);
      m.set(i, j, Scalar(f, v > spread ? 0 : v));
    }
  return m;
}

/// Gaussian binomial via [n,k] = [n-1,k-1] + q^k [n-1,k].
inline Scalar gaussian_binomial(std::size_t n, std::size_t k, const Scalar& q) {
  const FieldSpec& f = q.field();
  if (k > n) return Scalar::zero(f);
  std::vector<std::vector<Scalar>> t(n + 1, std::vector<Scalar>(n + 1, Scalar::zero(f)));
  for (std::size_t i = 0; i <= n; ++i) {
    t[i][0] = Scalar::one(f);
    for (std::size_t j = 1; j <= i; ++j) {
      t[i][j] = t[i - 1][j - 1] + q.pow(static_cast<long>(j)) * t[i - 1][j];
    }
  }
  return t[n][k];
}

inline long mobius(long n) {
  long result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

/// Number of Lyndon words of length n over d letters.
inline long witt(long n, long d) {
  long sum = 0;
  for (long e = 1; e <= n; ++e) {
    if (n % e) continue;
    long power = 1;
    for (long i = 0; i < n / e; ++i) power *= d;
    sum += mobius(e) * power;
  }
  return sum / n;
}

/// Signed block transposition V^{⊗m}⊗V^{⊗n} → V^{⊗n}⊗V^{⊗m}, computed from
/// explicit tuples: x = (x_1..x_m, y_1..y_n) ↦ ± (y_1..y_n, x_1..x_m), sign
/// (-1)^{#odd x · #odd y}.
inline ExactMatrix tuple_swap(const FieldSpec& f, std::size_t d, std::size_t m, std::size_t n,
                              const std::vector<int>& parity = {}) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < m + n; ++i) total *= d;
  ExactMatrix out(f, total, total);
  for (std::size_t index = 0; index < total; ++index) {
    std::vector<std::size_t> tuple(m + n);
    std::size_t rest = index;
    for (std::size_t i = m + n; i-- > 0;) {
      tuple[i] = rest % d;
      rest /= d;
    }
    std::vector<std::size_t> swapped(tuple.begin() + static_cast<long>(m), tuple.end());
    swapped.insert(swapped.end(), tuple.begin(), tuple.begin() + static_cast<long>(m));
    std::size_t target = 0;
    for (std::size_t x : swapped) target = target * d + x;
    int odd_x = 0, odd_y = 0;
    if (!parity.empty()) {
      for (std::size_t i = 0; i < m; ++i) odd_x += parity[tuple[i]];
      for (std::size_t i = m; i < m + n; ++i) odd_y += parity[tuple[i]];
    }
    out.set(target, index, Scalar(f, (odd_x * odd_y) % 2 ? -1 : 1));
  }
  return out;
}

}  // namespace oracle
