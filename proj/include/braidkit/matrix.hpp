#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "braidkit/scalar.hpp"

namespace braidkit {

/// One rational entry. Zero is a null pointer, so a freshly allocated
/// matrix costs no GMP initialisation; a stored value is never zero.
class RationalCell {
 public:
  RationalCell() = default;
  RationalCell(const RationalCell& o) : v_(o.v_ ? std::make_unique<mpq_class>(*o.v_) : nullptr) {}
  RationalCell(RationalCell&&) noexcept = default;
  RationalCell& operator=(const RationalCell& o) {
    if (this != &o) {
      if (o.v_) *this = *o.v_;
      else v_.reset();
    }
    return *this;
  }
  RationalCell& operator=(RationalCell&&) noexcept = default;
  RationalCell& operator=(const mpq_class& q) {
    if (sgn(q) == 0) v_.reset();
    else if (v_) *v_ = q;
    else v_ = std::make_unique<mpq_class>(q);
    return *this;
  }

  bool is_zero() const { return !v_; }
  const mpq_class& value() const { return v_ ? *v_ : zero(); }
  void add(const mpq_class& t) {
    if (!v_) {
      *this = t;
      return;
    }
    *v_ += t;
    if (sgn(*v_) == 0) v_.reset();
  }

  friend bool operator==(const RationalCell& a, const RationalCell& b) {
    if (!a.v_ || !b.v_) return !a.v_ && !b.v_;
    return *a.v_ == *b.v_;
  }

 private:
  static const mpq_class& zero() {
    static const mpq_class z;
    return z;
  }
  std::unique_ptr<mpq_class> v_;
};

/// Position of an entry; used to report the first place two matrices differ.
struct Entry {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Dense row-major matrix over Q or F_p. Matrices act on column vectors, so
/// the composite g∘f of linear maps is g * f. Basis vector e_i⊗e_j of a
/// tensor product has flat index i·dim(second)+j, which is what kron uses.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

  static ExactMatrix zeros(const FieldSpec& field, std::size_t rows, std::size_t cols) {
    return ExactMatrix(field, rows, cols);
  }
  static ExactMatrix identity(const FieldSpec& field, std::size_t n);
  /// Small-integer literal; every row must have the same length.
  static ExactMatrix from_ints(const FieldSpec& field,
                               std::initializer_list<std::initializer_list<long>> rows);
  static ExactMatrix from_rows(const FieldSpec& field,
                               const std::vector<std::vector<Scalar>>& rows,
                               std::size_t cols_if_empty = 0);
  /// Column vector with a single 1 at `index`.
  static ExactMatrix unit_column(const FieldSpec& field, std::size_t size, std::size_t index);
  /// Permutation matrix sending basis vector j to basis vector image[j].
  static ExactMatrix permutation(const FieldSpec& field, std::span<const std::size_t> image);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);
  bool is_zero_at(std::size_t r, std::size_t c) const;

  bool is_zero() const;
  bool is_identity() const;
  std::size_t nonzero_count() const;

  ExactMatrix transpose() const;
  ExactMatrix scaled(const Scalar& s) const;
  ExactMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows,
                    std::size_t ncols) const;
  ExactMatrix column(std::size_t c) const { return block(0, c, rows_, 1); }
  void set_block(std::size_t row0, std::size_t col0, const ExactMatrix& m);

  ExactMatrix& operator+=(const ExactMatrix& other);
  ExactMatrix& operator-=(const ExactMatrix& other);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

  /// Entries as canonical strings, row-major.
  std::vector<std::vector<std::string>> to_strings() const;
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) {
    return os << m.to_string();
  }

  // Raw storage; exactly one alternative is active, chosen by the field.
  using RationalStorage = std::vector<RationalCell>;
  using ResidueStorage = std::vector<std::uint64_t>;
  const std::variant<RationalStorage, ResidueStorage>& storage() const { return data_; }
  std::variant<RationalStorage, ResidueStorage>& storage() { return data_; }

 private:
  std::size_t index(std::size_t r, std::size_t c) const { return r * cols_ + c; }

  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::variant<RationalStorage, ResidueStorage> data_;
};

/// Kronecker product: (a⊗b)[i·rows_b + k, j·cols_b + l] = a[i,j]·b[k,l].
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
/// kron of a list, left to right.
ExactMatrix kron(std::initializer_list<const ExactMatrix*> factors);
/// m^{⊗n}; the 1×1 identity when n = 0.
ExactMatrix kron_power(const ExactMatrix& m, std::size_t n);
ExactMatrix hstack(const ExactMatrix& left, const ExactMatrix& right);
ExactMatrix vstack(const ExactMatrix& top, const ExactMatrix& bottom);

struct Rref {
  ExactMatrix matrix;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form. Over Q the elimination is fraction-free
/// (Bareiss-style on the row-scaled integer matrix) and only the final
/// normalization divides; over F_p it is plain Gauss–Jordan.
Rref rref(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);
/// Throws ShapeError if not square, NotInvertible if singular.
ExactMatrix inverse(const ExactMatrix& m);
bool is_invertible(const ExactMatrix& m);
/// Canonical kernel basis as columns: the raw basis read off the RREF is
/// transposed, row reduced, and transposed back, so every leading entry is 1
/// and equal kernels give identical matrices.
ExactMatrix nullspace(const ExactMatrix& m);
/// The unique X with a·X = b when a has full column rank and the columns of b
/// lie in the column space of a; nullopt when b is outside that space.
/// Throws ShapeError when a is not injective.
std::optional<ExactMatrix> solve_injective(const ExactMatrix& a, const ExactMatrix& b);
/// True iff the two matrices have the same column space.
bool same_column_space(const ExactMatrix& a, const ExactMatrix& b);
/// First entry (row-major order) where a and b differ; nullopt when equal.
/// Throws ShapeError on shape mismatch.
std::optional<Entry> first_difference(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace braidkit
