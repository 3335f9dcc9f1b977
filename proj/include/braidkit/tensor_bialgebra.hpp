#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <utility>

#include "braidkit/axiom_report.hpp"
#include "braidkit/braid_rep.hpp"

namespace braidkit {

/// The braided tensor bialgebra T(V) = ⊕ V^{⊗n} restricted to degrees ≤ N.
///
/// The product is concatenation, so the product of a degree-a and a degree-b
/// piece is the identity reindexing V^{⊗a}⊗V^{⊗b} = V^{⊗(a+b)}. The braiding
/// of T(V) on the (m, n) block is c_T^{m,n}. The coproduct is the unique
/// algebra map into the braided product T⊗T with generators primitive; its
/// component Δ_{k,n}: V^{⊗n} → V^{⊗k}⊗V^{⊗(n-k)} is a d^n-square matrix.
///
/// All structure maps preserve total degree, so every identity restricted to
/// total degree ≤ N is decided exactly by the stored blocks.
class TruncatedTensorBialgebra {
 public:
  using BlockKey = std::pair<std::size_t, std::size_t>;  // (k, n)

  /// Throws BadTruncation when degree < 1 and SpecViolation for an invalid V.
  static TruncatedTensorBialgebra build(const BraidedObject& v, std::size_t degree);
  /// Wraps externally supplied Δ blocks (e.g. read back from a file) without
  /// recomputing them. Every (k, n) with k ≤ n ≤ degree must be present.
  static TruncatedTensorBialgebra from_blocks(const BraidedObject& v, std::size_t degree,
                                              std::map<BlockKey, ExactMatrix> delta_blocks);

  const BraidedObject& source() const { return braid_->source(); }
  const FieldSpec& field() const { return source().field(); }
  std::size_t dim() const { return source().dim(); }
  std::size_t degree() const { return degree_; }
  /// d^n.
  std::size_t piece_dim(std::size_t n) const;

  /// Δ_{k,n}; throws BadDegree outside 0 ≤ k ≤ n ≤ N.
  const ExactMatrix& delta(std::size_t k, std::size_t n) const;
  const std::map<BlockKey, ExactMatrix>& delta_blocks() const { return delta_; }
  /// Copy with one Δ block replaced.
  TruncatedTensorBialgebra with_delta(std::size_t k, std::size_t n, ExactMatrix block) const;

  /// ε on degree n: the 1×1 identity for n = 0, the zero row otherwise.
  ExactMatrix counit(std::size_t n) const;
  /// Unit 1 ∈ degree 0.
  ExactMatrix unit() const;
  /// Product restricted to degrees (a, b): the d^{a+b}-square identity.
  /// Throws TruncationOverflow when a + b > N.
  ExactMatrix product_block(std::size_t a, std::size_t b) const;
  /// Product of a degree-a column vector and a degree-b column vector.
  ExactMatrix multiply(const ExactMatrix& w1, std::size_t a, const ExactMatrix& w2,
                       std::size_t b) const;
  /// c_T^{m,n}; throws BadDegree when m or n exceeds N.
  ExactMatrix global_braiding_block(std::size_t m, std::size_t n) const;
  const BraidRep& braid() const { return *braid_; }

 private:
  TruncatedTensorBialgebra(std::shared_ptr<const BraidRep> braid, std::size_t degree)
      : braid_(std::move(braid)), degree_(degree) {}

  std::shared_ptr<const BraidRep> braid_;
  std::size_t degree_ = 0;
  std::map<BlockKey, ExactMatrix> delta_;
};

/// Δ_{k,n} for all k ≤ n ≤ N by peeling the last tensor factor:
/// Δ_{k,n} = Δ_{k,n-1}⊗V + (V^{⊗(k-1)}⊗c_T^{n-k,1})(Δ_{k-1,n-1}⊗V).
std::map<TruncatedTensorBialgebra::BlockKey, ExactMatrix> coproduct_blocks(const BraidRep& braid,
                                                                         std::size_t degree);

/// Blockwise braided-bialgebra axioms in total degree ≤ N: QYBE of c_T,
/// Br2–Br4, coassociativity, counitality, Br5–Br7, Br1 and Br8–Br10. Check
/// names carry their degree multi-index, e.g. "Br1[1,2->1]".
AxiomReport check_truncated_axioms(const TruncatedTensorBialgebra& t);

}  // namespace braidkit
