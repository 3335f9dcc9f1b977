#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "braidkit/braided_core.hpp"
#include "braidkit/tensor_bialgebra.hpp"

namespace braidkit {

/// Primitive elements P(B) = {x : Δx = x⊗1 + 1⊗x}, represented by the
/// inclusion ξ: P → B whose columns are the canonical kernel basis, together
/// with the braiding c_P induced by c on P⊗P.
struct PrimitiveSpace {
  ExactMatrix xi;
  ExactMatrix c_p;  // dim P² square; 0×0 when P = 0

  std::size_t dim() const { return xi.cols(); }
};

/// Δ − (B⊗u) − (u⊗B): the map whose kernel is P(B).
ExactMatrix equalizer_matrix(const BialgebraData& b);

/// Throws SpecViolation when b fails the braided-bialgebra axioms and
/// NotClosedUnderBraiding when c does not preserve P⊗P.
PrimitiveSpace primitives(const BialgebraData& b);

/// The unique c_P with (ξ⊗ξ)c_P = c(ξ⊗ξ). Throws NotClosedUnderBraiding if
/// c(ξ⊗ξ) leaves the image of ξ⊗ξ, and InternalInconsistency if the solution
/// is singular or violates QYBE.
ExactMatrix induced_braiding(const ExactMatrix& xi, const ExactMatrix& c);

/// The (a, b) block of the braiding induced on primitives of different
/// degrees: the unique X with (ξ_b⊗ξ_a)X = c^{a,b}(ξ_a⊗ξ_b).
ExactMatrix induced_braiding_block(const ExactMatrix& xi_a, const ExactMatrix& xi_b,
                                   const ExactMatrix& c_ab);

/// Degree-n primitives of the truncated tensor bialgebra: the canonical
/// kernel of the stacked interior blocks Δ_{1,n}, …, Δ_{n-1,n}. Returns the
/// d^n × dim P_n basis matrix. Throws BadDegree outside 1 ≤ n ≤ N.
ExactMatrix primitives_of_tensor(const TruncatedTensorBialgebra& t, std::size_t n);
/// dim P_1, …, dim P_N.
std::vector<std::size_t> primitive_dims(const TruncatedTensorBialgebra& t);

/// Which defining property of a braided-bialgebra morphism fails, if any.
std::optional<std::string> morphism_failure(const ExactMatrix& f, const BialgebraData& b,
                                            const BialgebraData& b2);

/// P(f): the unique map with ξ'·P(f) = f·ξ. Throws NotAMorphism when f is
/// not a braided-bialgebra morphism and NoFactorization when f·ξ leaves the
/// image of ξ'.
ExactMatrix induced_map(const ExactMatrix& f, const BialgebraData& b, const BialgebraData& b2);

}  // namespace braidkit
