#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "braidkit/axiom_report.hpp"
#include "braidkit/braided_core.hpp"
#include "braidkit/primitives.hpp"

namespace braidkit {

enum class FunctorKind { BasisChange, ScalarTwist };

/// A strong monoidal autoequivalence of finite-dimensional vector spaces.
///
/// BasisChange(g) acts on a map f: U^{⊗a} → U^{⊗b} by g^{⊗b}·f·(g^{⊗a})⁻¹
/// with comparison maps φ₂ = Id and φ₀ = Id. ScalarTwist(λ) is the identity
/// functor with φ₂ = λ·Id and φ₀ = λ⁻¹·Id.
class FunctorData {
 public:
  /// Throws NotInvertible for a singular or non-square g.
  static FunctorData basis_change(ExactMatrix g);
  /// Throws NotInvertible when λ = 0.
  static FunctorData scalar_twist(Scalar lambda);

  FunctorKind kind() const { return kind_; }
  const ExactMatrix& g() const { return g_; }
  const ExactMatrix& g_inv() const { return g_inv_; }
  const Scalar& lambda() const { return lambda_; }

  /// F on a map U^{⊗a} → U^{⊗b}; the identity for ScalarTwist.
  ExactMatrix apply(const ExactMatrix& f, std::size_t from_power, std::size_t to_power) const;
  /// Monoidal-functor coherence of (φ₀, φ₂), checked on the given dimension.
  AxiomReport check_coherence(const FieldSpec& field, std::size_t dim) const;

 private:
  FunctorKind kind_ = FunctorKind::BasisChange;
  ExactMatrix g_, g_inv_;
  Scalar lambda_;
};

/// `outer` after `inner`. Both must be of the same kind.
FunctorData compose(const FunctorData& outer, const FunctorData& inner);

/// c_FV = φ₂⁻¹∘F(c)∘φ₂. Throws NotInvertible when c is singular.
BraidedObject transport_braided_object(const FunctorData& functor, const BraidedObject& v);
/// Structure maps m_FA = F(m)φ₂, u_FA = F(u)φ₀, Δ_FB = φ₂⁻¹F(Δ), ε_FB = φ₀⁻¹F(ε)
/// and c_FB, without checking any axiom.
BialgebraData transport_structure(const FunctorData& functor, const BialgebraData& b);
/// transport_structure for a braided bialgebra. Throws SpecViolation when the
/// input fails the axioms and InternalInconsistency when the output does.
BialgebraData transport_bialgebra(const FunctorData& functor, const BialgebraData& b);

/// Primitives of the transported bialgebra versus the transported primitives:
/// equal dimensions, F(ξ) and ξ' span the same subspace, and the two induced
/// braidings are conjugate by the resulting change of basis.
bool check_primfunct_square(const FunctorData& functor, const BialgebraData& b);

enum class BaseKind { Flip, Super };

/// A symmetric braiding of the whole category: the flip, or the super flip
/// with sign (-1)^{|x||y|} for a parity grading of the basis.
struct BaseBraiding {
  BaseKind kind = BaseKind::Flip;
  std::vector<int> grading;  // parities 0/1, one per basis vector (Super only)

  static BaseBraiding flip() { return {}; }
  static BaseBraiding super(std::vector<int> grading) { return {BaseKind::Super, std::move(grading)}; }
  /// Parity of basis vector i of a dim-dimensional space.
  int parity(std::size_t i, std::size_t dim) const;
  void validate(std::size_t dim) const;
};

/// J V = (V, c_{V,V}). Throws ShapeError when the grading length differs
/// from dim.
BraidedObject J_braiding(const BaseBraiding& base, const FieldSpec& field, std::size_t dim);

/// The categorical braiding c_{V^{⊗m},V^{⊗n}} of the base, computed directly
/// as a signed permutation of basis tensors.
ExactMatrix block_transposition(const BaseBraiding& base, const FieldSpec& field, std::size_t dim,
                                std::size_t m, std::size_t n);

/// Δ_{k,n} of the tensor bialgebra in the symmetric base category, computed
/// directly as the signed sum over (k, n-k)-unshuffles.
ExactMatrix symmetric_coproduct_block(const BaseBraiding& base, const FieldSpec& field,
                                      std::size_t dim, std::size_t k, std::size_t n);

/// (a) c_T^{m,n} of J V equals block_transposition for all m + n ≤ N;
/// (b) primitives of each degree ≤ N agree between the braided construction
/// and the unshuffle coproduct. Throws SpecViolation when v is not a symmetry
/// (c² ≠ Id); v is meant to be J_braiding(base, …).
AxiomReport check_J_compatibility(const BraidedObject& v, const BaseBraiding& base,
                                  std::size_t degree);
AxiomReport check_J_compatibility(const BaseBraiding& base, const FieldSpec& field,
                                  std::size_t dim, std::size_t degree);

/// Uniformly drawn invertible d×d matrix over F_p (rejection sampling on the
/// raw engine output, so the stream is reproducible across platforms), or
/// with entries in [-3, 3] over Q.
ExactMatrix random_invertible(const FieldSpec& field, std::size_t dim, std::mt19937_64& rng);

}  // namespace braidkit
