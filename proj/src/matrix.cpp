#include "braidkit/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "braidkit/errors.hpp"

namespace braidkit {

namespace {

using RationalStorage = ExactMatrix::RationalStorage;
using ResidueStorage = ExactMatrix::ResidueStorage;

bool entry_is_zero(const RationalCell& x) { return x.is_zero(); }
bool entry_is_zero(std::uint64_t x) { return x == 0; }

void require_same_field(const ExactMatrix& a, const ExactMatrix& b, const char* what) {
  if (!(a.field() == b.field())) {
    throw FieldMismatch(std::string(what) + ": operands live over " + a.field().to_string() +
                        " and " + b.field().to_string());
  }
}

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(what) + ": " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
}

}  // namespace

ExactMatrix::ExactMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field.is_rational()) {
    data_ = RationalStorage(rows * cols);
  } else {
    data_ = ResidueStorage(rows * cols, 0);
  }
}

ExactMatrix ExactMatrix::identity(const FieldSpec& field, std::size_t n) {
  ExactMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(field));
  return m;
}

ExactMatrix ExactMatrix::from_ints(const FieldSpec& field,
                                   std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t ncols = rows.size() == 0 ? 0 : rows.begin()->size();
  ExactMatrix m(field, rows.size(), ncols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != ncols) throw ShapeError("ragged matrix literal");
    std::size_t c = 0;
    for (long v : row) m.set(r, c++, Scalar(field, v));
    ++r;
  }
  return m;
}

ExactMatrix ExactMatrix::from_rows(const FieldSpec& field,
                                   const std::vector<std::vector<Scalar>>& rows,
                                   std::size_t cols_if_empty) {
  std::size_t ncols = rows.empty() ? cols_if_empty : rows.front().size();
  ExactMatrix m(field, rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw ShapeError("ragged matrix rows");
    for (std::size_t c = 0; c < ncols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

ExactMatrix ExactMatrix::unit_column(const FieldSpec& field, std::size_t size,
                                     std::size_t index) {
  ExactMatrix m(field, size, 1);
  m.set(index, 0, Scalar::one(field));
  return m;
}

ExactMatrix ExactMatrix::permutation(const FieldSpec& field,
                                     std::span<const std::size_t> image) {
  ExactMatrix m(field, image.size(), image.size());
  for (std::size_t j = 0; j < image.size(); ++j) m.set(image[j], j, Scalar::one(field));
  return m;
}

Scalar ExactMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw ShapeError("matrix index out of range");
  return std::visit(
      [&](const auto& data) -> Scalar {
        using T = std::decay_t<decltype(data[0])>;
        if constexpr (std::is_same_v<T, RationalCell>) {
          return Scalar(field_, data[index(r, c)].value());
        } else {
          return Scalar::residue(field_, data[index(r, c)]);
        }
      },
      data_);
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (r >= rows_ || c >= cols_) throw ShapeError("matrix index out of range");
  if (!(value.field() == field_)) throw FieldMismatch("entry field differs from matrix field");
  if (field_.is_rational()) {
    std::get<RationalStorage>(data_)[index(r, c)] = value.rational();
  } else {
    std::get<ResidueStorage>(data_)[index(r, c)] = value.residue();
  }
}

bool ExactMatrix::is_zero_at(std::size_t r, std::size_t c) const {
  return std::visit([&](const auto& data) { return entry_is_zero(data[index(r, c)]); }, data_);
}

bool ExactMatrix::is_zero() const {
  return std::visit(
      [](const auto& data) {
        return std::all_of(data.begin(), data.end(),
                           [](const auto& x) { return entry_is_zero(x); });
      },
      data_);
}

bool ExactMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      bool z = is_zero_at(r, c);
      if (r == c ? (z || !at(r, c).is_one()) : !z) return false;
    }
  }
  return true;
}

std::size_t ExactMatrix::nonzero_count() const {
  return std::visit(
      [](const auto& data) {
        return static_cast<std::size_t>(std::count_if(
            data.begin(), data.end(), [](const auto& x) { return !entry_is_zero(x); }));
      },
      data_);
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(field_, cols_, rows_);
  std::visit(
      [&](const auto& src) {
        auto& dst = std::get<std::decay_t<decltype(src)>>(t.data_);
        for (std::size_t r = 0; r < rows_; ++r) {
          for (std::size_t c = 0; c < cols_; ++c) dst[c * rows_ + r] = src[index(r, c)];
        }
      },
      data_);
  return t;
}

ExactMatrix ExactMatrix::scaled(const Scalar& s) const {
  if (!(s.field() == field_)) throw FieldMismatch("scaling by a scalar of another field");
  ExactMatrix out = *this;
  if (field_.is_rational()) {
    for (auto& x : std::get<RationalStorage>(out.data_)) {
      if (!x.is_zero()) x = mpq_class(x.value() * s.rational());
    }
  } else {
    std::uint64_t p = field_.modulus();
    for (auto& x : std::get<ResidueStorage>(out.data_)) x = x * s.residue() % p;
  }
  return out;
}

ExactMatrix ExactMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                               std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw ShapeError("block out of range");
  ExactMatrix out(field_, nrows, ncols);
  std::visit(
      [&](const auto& src) {
        auto& dst = std::get<std::decay_t<decltype(src)>>(out.data_);
        for (std::size_t r = 0; r < nrows; ++r) {
          for (std::size_t c = 0; c < ncols; ++c) dst[r * ncols + c] = src[index(row0 + r, col0 + c)];
        }
      },
      data_);
  return out;
}

void ExactMatrix::set_block(std::size_t row0, std::size_t col0, const ExactMatrix& m) {
  require_same_field(*this, m, "set_block");
  if (row0 + m.rows_ > rows_ || col0 + m.cols_ > cols_) throw ShapeError("block out of range");
  std::visit(
      [&](auto& dst) {
        const auto& src = std::get<std::decay_t<decltype(dst)>>(m.data_);
        for (std::size_t r = 0; r < m.rows_; ++r) {
          for (std::size_t c = 0; c < m.cols_; ++c) dst[index(row0 + r, col0 + c)] = src[r * m.cols_ + c];
        }
      },
      data_);
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& other) {
  require_same_field(*this, other, "matrix sum");
  require_same_shape(*this, other, "matrix sum");
  if (field_.is_rational()) {
    auto& dst = std::get<RationalStorage>(data_);
    const auto& src = std::get<RationalStorage>(other.data_);
    for (std::size_t i = 0; i < dst.size(); ++i) {
      if (!src[i].is_zero()) dst[i].add(src[i].value());
    }
  } else {
    std::uint64_t p = field_.modulus();
    auto& dst = std::get<ResidueStorage>(data_);
    const auto& src = std::get<ResidueStorage>(other.data_);
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = (dst[i] + src[i]) % p;
  }
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& other) {
  return *this += other.scaled(-Scalar::one(field_));
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a, b, "matrix product");
  if (a.cols_ != b.rows_) {
    throw ShapeError("matrix product: " + std::to_string(a.rows_) + "x" +
                     std::to_string(a.cols_) + " times " + std::to_string(b.rows_) + "x" +
                     std::to_string(b.cols_));
  }
  ExactMatrix c(a.field_, a.rows_, b.cols_);
  const std::size_t inner = a.cols_;
  const std::size_t ncols = b.cols_;
  // Braiding matrices are mostly zeros, so skip zero factors on both sides.
  if (a.field_.is_rational()) {
    const auto& A = std::get<RationalStorage>(a.data_);
    const auto& B = std::get<RationalStorage>(b.data_);
    auto& C = std::get<RationalStorage>(c.data_);
    mpq_class term;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < inner; ++k) {
        if (A[i * inner + k].is_zero()) continue;
        const mpq_class& aik = A[i * inner + k].value();
        for (std::size_t j = 0; j < ncols; ++j) {
          if (B[k * ncols + j].is_zero()) continue;
          const mpq_class& bkj = B[k * ncols + j].value();
          mpq_mul(term.get_mpq_t(), aik.get_mpq_t(), bkj.get_mpq_t());
          C[i * ncols + j].add(term);
        }
      }
    }
  } else {
    const std::uint64_t p = a.field_.modulus();
    const auto& A = std::get<ResidueStorage>(a.data_);
    const auto& B = std::get<ResidueStorage>(b.data_);
    auto& C = std::get<ResidueStorage>(c.data_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < inner; ++k) {
        std::uint64_t aik = A[i * inner + k];
        if (aik == 0) continue;
        for (std::size_t j = 0; j < ncols; ++j) {
          std::uint64_t bkj = B[k * ncols + j];
          if (bkj == 0) continue;
          C[i * ncols + j] = (C[i * ncols + j] + aik * bkj) % p;
        }
      }
    }
  }
  return c;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::vector<std::string>> ExactMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = at(r, c).to_string();
  }
  return out;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << at(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a, b, "kron");
  const std::size_t rb = b.rows(), cb = b.cols();
  const std::size_t out_cols = a.cols() * cb;
  ExactMatrix out(a.field(), a.rows() * rb, out_cols);
  if (a.field().is_rational()) {
    const auto& A = std::get<RationalStorage>(a.storage());
    const auto& B = std::get<RationalStorage>(b.storage());
    auto& O = std::get<RationalStorage>(out.storage());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (A[i * a.cols() + j].is_zero()) continue;
        const mpq_class& aij = A[i * a.cols() + j].value();
        for (std::size_t k = 0; k < rb; ++k) {
          for (std::size_t l = 0; l < cb; ++l) {
            if (B[k * cb + l].is_zero()) continue;
            O[(i * rb + k) * out_cols + j * cb + l] = mpq_class(aij * B[k * cb + l].value());
          }
        }
      }
    }
  } else {
    const std::uint64_t p = a.field().modulus();
    const auto& A = std::get<ResidueStorage>(a.storage());
    const auto& B = std::get<ResidueStorage>(b.storage());
    auto& O = std::get<ResidueStorage>(out.storage());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        std::uint64_t aij = A[i * a.cols() + j];
        if (aij == 0) continue;
        for (std::size_t k = 0; k < rb; ++k) {
          for (std::size_t l = 0; l < cb; ++l) {
            O[(i * rb + k) * out_cols + j * cb + l] = aij * B[k * cb + l] % p;
          }
        }
      }
    }
  }
  return out;
}

ExactMatrix kron(std::initializer_list<const ExactMatrix*> factors) {
  if (factors.size() == 0) throw ShapeError("kron of an empty list");
  auto it = factors.begin();
  ExactMatrix out = **it;
  for (++it; it != factors.end(); ++it) out = kron(out, **it);
  return out;
}

ExactMatrix kron_power(const ExactMatrix& m, std::size_t n) {
  ExactMatrix out = ExactMatrix::identity(m.field(), 1);
  for (std::size_t i = 0; i < n; ++i) out = kron(out, m);
  return out;
}

ExactMatrix hstack(const ExactMatrix& left, const ExactMatrix& right) {
  require_same_field(left, right, "hstack");
  if (left.rows() != right.rows()) throw ShapeError("hstack: row counts differ");
  ExactMatrix out(left.field(), left.rows(), left.cols() + right.cols());
  out.set_block(0, 0, left);
  out.set_block(0, left.cols(), right);
  return out;
}

ExactMatrix vstack(const ExactMatrix& top, const ExactMatrix& bottom) {
  require_same_field(top, bottom, "vstack");
  if (top.cols() != bottom.cols()) throw ShapeError("vstack: column counts differ");
  ExactMatrix out(top.field(), top.rows() + bottom.rows(), top.cols());
  out.set_block(0, 0, top);
  out.set_block(top.rows(), 0, bottom);
  return out;
}

namespace {

Rref rref_rational(const ExactMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  const auto& src = std::get<RationalStorage>(m.storage());

  // Clear denominators row by row.
  std::vector<mpz_class> a(nr * nc);
  for (std::size_t r = 0; r < nr; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < nc; ++c) {
      if (src[r * nc + c].is_zero()) continue;
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), src[r * nc + c].value().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < nc; ++c) {
      if (src[r * nc + c].is_zero()) continue;
      const mpq_class& q = src[r * nc + c].value();
      a[r * nc + c] = q.get_num() * (l / q.get_den());
    }
  }

  // Fraction-free Gauss–Jordan: after each step every entry is a minor of
  // the scaled input, so the division by the previous pivot is exact.
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  mpz_class lhs, rhs;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < nc && rank < nr; ++col) {
    std::size_t p = rank;
    while (p < nr && a[p * nc + col] == 0) ++p;
    if (p == nr) continue;
    if (p != rank) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(p * nc),
                       a.begin() + static_cast<std::ptrdiff_t>((p + 1) * nc),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * nc));
    }
    const mpz_class piv = a[rank * nc + col];
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == rank) continue;
      const mpz_class factor = a[i * nc + col];
      for (std::size_t j = 0; j < nc; ++j) {
        mpz_class& x = a[i * nc + j];
        lhs = piv * x;
        if (factor != 0) {
          rhs = factor * a[rank * nc + j];
          lhs -= rhs;
        }
        mpz_divexact(x.get_mpz_t(), lhs.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = piv;
    pivots.push_back(col);
    ++rank;
  }

  ExactMatrix out(m.field(), nr, nc);
  auto& dst = std::get<RationalStorage>(out.storage());
  for (std::size_t r = 0; r < rank; ++r) {
    const mpz_class& piv = a[r * nc + pivots[r]];
    for (std::size_t c = 0; c < nc; ++c) {
      if (a[r * nc + c] == 0) continue;
      mpq_class q(a[r * nc + c], piv);
      q.canonicalize();
      dst[r * nc + c] = q;
    }
  }
  return {std::move(out), std::move(pivots)};
}

Rref rref_prime(const ExactMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  const std::uint64_t p = m.field().modulus();
  ExactMatrix out = m;
  auto& a = std::get<ResidueStorage>(out.storage());
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < nc && rank < nr; ++col) {
    std::size_t piv_row = rank;
    while (piv_row < nr && a[piv_row * nc + col] == 0) ++piv_row;
    if (piv_row == nr) continue;
    if (piv_row != rank) {
      for (std::size_t j = 0; j < nc; ++j) std::swap(a[piv_row * nc + j], a[rank * nc + j]);
    }
    const std::uint64_t inv = detail::mod_inverse(a[rank * nc + col], p);
    for (std::size_t j = 0; j < nc; ++j) a[rank * nc + j] = a[rank * nc + j] * inv % p;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == rank) continue;
      const std::uint64_t factor = a[i * nc + col];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < nc; ++j) {
        a[i * nc + j] = (a[i * nc + j] + (p - factor) * a[rank * nc + j]) % p;
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  return {std::move(out), std::move(pivots)};
}

}  // namespace

Rref rref(const ExactMatrix& m) {
  return m.field().is_rational() ? rref_rational(m) : rref_prime(m);
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank(); }

bool is_invertible(const ExactMatrix& m) { return m.is_square() && rank(m) == m.rows(); }

ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Rref r = rref(hstack(m, ExactMatrix::identity(m.field(), n)));
  if (r.rank() < n || r.pivots[n - 1] != n - 1) {
    throw NotInvertible("matrix is singular");
  }
  return r.matrix.block(0, n, n, n);
}

ExactMatrix nullspace(const ExactMatrix& m) {
  const std::size_t n = m.cols();
  Rref r = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  const FieldSpec& f = m.field();
  if (free_cols.empty()) return ExactMatrix(f, n, 0);

  ExactMatrix raw(f, free_cols.size(), n);
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    raw.set(t, free_cols[t], Scalar::one(f));
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      if (!r.matrix.is_zero_at(i, free_cols[t])) {
        raw.set(t, r.pivots[i], -r.matrix.at(i, free_cols[t]));
      }
    }
  }
  return rref(raw).matrix.transpose();
}

std::optional<ExactMatrix> solve_injective(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a, b, "solve");
  if (a.rows() != b.rows()) throw ShapeError("solve: row counts differ");
  const std::size_t n = a.cols();
  Rref r = rref(hstack(a, b));
  std::size_t left_rank = 0;
  while (left_rank < r.rank() && r.pivots[left_rank] < n) ++left_rank;
  if (left_rank != n) throw ShapeError("solve: coefficient matrix is not injective");
  if (r.rank() > n) return std::nullopt;
  return r.matrix.block(0, n, n, b.cols());
}

bool same_column_space(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a, b, "same_column_space");
  if (a.rows() != b.rows()) return false;
  std::size_t ra = rank(a);
  return ra == rank(b) && ra == rank(hstack(a, b));
}

std::optional<Entry> first_difference(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a, b, "compare");
  require_same_shape(a, b, "compare");
  if (a.storage() == b.storage()) return std::nullopt;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      bool za = a.is_zero_at(r, c), zb = b.is_zero_at(r, c);
      if (za && zb) continue;
      if (za != zb || !(a.at(r, c) == b.at(r, c))) return Entry{r, c};
    }
  }
  return std::nullopt;
}

}  // namespace braidkit
