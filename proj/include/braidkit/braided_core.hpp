#pragma once

#include <cstddef>
#include <optional>

#include "braidkit/axiom_report.hpp"
#include "braidkit/matrix.hpp"

namespace braidkit {

/// A space V = k^d with a braiding c: V⊗V → V⊗V given as a d²×d² matrix.
///
/// Construction only checks the shape; whether c is invertible and satisfies
/// the Yang–Baxter equation is answered by check_yang_baxter, so that invalid
/// data can still be loaded and diagnosed.
class BraidedObject {
 public:
  BraidedObject() = default;
  /// Throws ShapeError unless c is d²×d² for some d ≥ 1.
  explicit BraidedObject(ExactMatrix c);

  const FieldSpec& field() const { return c_.field(); }
  std::size_t dim() const { return dim_; }
  const ExactMatrix& c() const { return c_; }
  bool invertible() const { return c_inv_.has_value(); }
  /// Throws NotInvertible when c is singular.
  const ExactMatrix& c_inv() const;

 private:
  ExactMatrix c_;
  std::optional<ExactMatrix> c_inv_;
  std::size_t dim_ = 0;
};

/// (A, m, u) with m: A⊗A → A (d×d²) and u: k → A (d×1).
struct AlgebraData {
  ExactMatrix m;
  ExactMatrix u;

  std::size_t dim() const { return u.rows(); }
  const FieldSpec& field() const { return u.field(); }
  /// Throws ShapeError on inconsistent shapes.
  void validate() const;
};

/// (C, Δ, ε) with Δ: C → C⊗C (d²×d) and ε: C → k (1×d).
struct CoalgebraData {
  ExactMatrix delta;
  ExactMatrix eps;

  std::size_t dim() const { return eps.cols(); }
  const FieldSpec& field() const { return eps.field(); }
  void validate() const;
};

struct BraidedAlgebra {
  AlgebraData algebra;
  ExactMatrix c;
};

/// A finite-dimensional candidate braided bialgebra given by its five
/// structure matrices.
struct BialgebraData {
  AlgebraData algebra;
  CoalgebraData coalgebra;
  ExactMatrix c;

  std::size_t dim() const { return algebra.dim(); }
  const FieldSpec& field() const { return algebra.field(); }
  const ExactMatrix& m() const { return algebra.m; }
  const ExactMatrix& u() const { return algebra.u; }
  const ExactMatrix& delta() const { return coalgebra.delta; }
  const ExactMatrix& eps() const { return coalgebra.eps; }
  void validate() const;
};

/// Two algebras with four exchange maps c(i,j): A_i⊗A_j → A_j⊗A_i, indices
/// 1 and 2.
struct ProductAlgebraSpec {
  AlgebraData a1;
  AlgebraData a2;
  ExactMatrix c11, c12, c21, c22;

  const AlgebraData& algebra(int i) const;
  const ExactMatrix& c(int i, int j) const;
};

/// Reports "invertible" and "qybe". Throws ShapeError for a malformed c.
AxiomReport check_yang_baxter(const BraidedObject& v);
/// c_W·(f⊗f) == (f⊗f)·c_V. Throws ShapeError unless f is dim(W)×dim(V).
bool check_braided_morphism(const ExactMatrix& f, const BraidedObject& v,
                            const BraidedObject& w);

/// Associativity, unitality, Br2, Br3 and both halves of Br4.
AxiomReport check_braided_algebra(const AlgebraData& a, const ExactMatrix& c);
/// Coassociativity, counitality, Br5, Br6 and both halves of Br7.
AxiomReport check_braided_coalgebra(const CoalgebraData& co, const ExactMatrix& c);
/// Everything above plus QYBE, invertibility, Br1 and Br8–Br10. The unit
/// object is k, so Δ_1, m_1 and the unit constraints are identities.
AxiomReport check_braided_bialgebra(const BialgebraData& b);

/// Hypotheses of the product construction: invertibility of every c(i,j) and
/// the identities c21, c22, c31 (both halves) and cij for all indices.
AxiomReport check_product_spec(const ProductAlgebraSpec& spec);

/// A_i⊗A_j with m = (m_i⊗m_j)(A_i⊗c(j,i)⊗A_j), u = u_i⊗u_j and braiding
/// (A_i⊗c(i,j)⊗A_j)(c(i,i)⊗c(j,j))(A_i⊗c(j,i)⊗A_j). Throws SpecViolation
/// naming the first failed hypothesis.
BraidedAlgebra product_algebra(const ProductAlgebraSpec& spec, int i, int j);

struct DoubleBraiding {
  ProductAlgebraSpec spec;  // A1 = A, A2 = A⊗A
  BraidedAlgebra square;    // (A⊗A, m_2, u_2, c(2,2))
  BraidedAlgebra triple;    // E = A⊗(A⊗A)
};

/// Builds the exchange maps of A and A⊗A from a braided algebra (A, c) and
/// assembles both A⊗A and E = A⊗(A⊗A) as braided algebras. Throws
/// SpecViolation when (A, c) is not a braided algebra.
DoubleBraiding double_braiding(const AlgebraData& a, const ExactMatrix& c);

}  // namespace braidkit
