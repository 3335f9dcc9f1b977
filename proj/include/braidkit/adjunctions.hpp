#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "braidkit/axiom_report.hpp"
#include "braidkit/braided_core.hpp"
#include "braidkit/primitives.hpp"
#include "braidkit/tensor_bialgebra.hpp"

namespace braidkit {

/// Matrices realizing the units and counits of the free-algebra adjunctions
/// up to degree N.
struct AdjunctionWitness {
  ExactMatrix eta;                         // V → degree-1 piece of T(V)
  std::vector<ExactMatrix> counit_blocks;  // m_A^{n-1}: A^{⊗n} → A, n = 0..N
  ExactMatrix eta_bar;                     // V → P_1(T(V)) in the canonical basis
  std::vector<ExactMatrix> zeta_blocks;    // P(B)^{⊗n} → B, n = 0..N
};

/// Iterated multiplication m_A^{n-1}: A^{⊗n} → A with m^{-1} = u, m^0 = Id
/// and m^{n-1} = m(m^{n-2}⊗A).
ExactMatrix counit_block(const AlgebraData& a, std::size_t n);
std::vector<ExactMatrix> counit_blocks(const AlgebraData& a, std::size_t degree);

/// Triangle identities of the free-algebra adjunction on degrees ≤ N:
/// the counit of T(V) composed with T(η) is the identity on every degree, and
/// on the test algebra the counit composed with η is the identity. Also checks
/// that the supplied counit blocks form an algebra map (and a braided one
/// when the test algebra carries a braiding), and cross-checks them against
/// the right-nested fold m(A⊗m^{n-2}).
AxiomReport check_T_Omega(const TruncatedTensorBialgebra& t, const AlgebraData& test_algebra,
                          const std::vector<ExactMatrix>& test_counit_blocks,
                          const std::optional<ExactMatrix>& test_braiding = std::nullopt);
/// check_T_Omega with the trivial algebra k, or the given braided algebra.
bool check_triangles_T_Omega(const BraidedObject& v, std::size_t degree,
                             const std::optional<BraidedAlgebra>& test = std::nullopt);

/// The factorization of V → T(V) through the degree-1 primitives.
/// Throws NoFactorization only on internal inconsistency.
ExactMatrix eta_bar(const TruncatedTensorBialgebra& t);
ExactMatrix eta_bar(const BraidedObject& v, std::size_t degree);

/// ζ_n = m_B^{n-1}∘ξ^{⊗n}: P(B)^{⊗n} → B for n = 0..N.
std::vector<ExactMatrix> zeta(const BialgebraData& b, std::size_t degree);
std::vector<ExactMatrix> zeta(const BialgebraData& b, const PrimitiveSpace& p, std::size_t degree);

/// Δ_B∘ζ = (ζ⊗ζ)∘Δ_{T(P)} and ε_B∘ζ = ε_{T(P)} blockwise on degrees ≤ N,
/// plus ε_B∘ξ = 0. Errors raised while computing P(B) are reported as a
/// failed "primitives" check.
AxiomReport check_zeta_coalgebra(const BialgebraData& b, std::size_t degree);

/// P(ε̄_B)∘η̄_{P(B)} = Id on P(B), and ε̄_{T(V)}∘T(η̄_V) = Id on every degree
/// of T(V) up to N.
AxiomReport check_triangles_Tbar_P(const BraidedObject& v, const BialgebraData& b,
                                   std::size_t degree);

AdjunctionWitness make_witness(const BraidedObject& v, const BialgebraData& b, std::size_t degree);

}  // namespace braidkit
