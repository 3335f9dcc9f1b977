#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "braidkit/braided_core.hpp"

namespace braidkit {

/// The block braidings c_T^{m,n}: V^{⊗m}⊗V^{⊗n} → V^{⊗n}⊗V^{⊗m} of a braided
/// object, memoized by (m, n).
///
/// Blocks are assembled strand by strand: c_T^{1,n} peels the leftmost
/// factor of the right block, c_T^{1,n} = (V⊗c_T^{1,n-1})(c⊗V^{⊗(n-1)}),
/// and c_T^{m,n} peels the leftmost strand of the left block,
/// c_T^{m,n} = (c_T^{1,n}⊗V^{⊗(m-1)})(V⊗c_T^{m-1,n}). Blocks with m = 0 or
/// n = 0 are identities and c_T^{1,1} = c.
///
/// Thread-safe: lookups and inserts are serialized, and inserts are
/// insert-once so concurrent computation of the same block is harmless.
class BraidRep {
 public:
  /// Throws SpecViolation unless v is invertible and satisfies QYBE.
  explicit BraidRep(BraidedObject v);

  const BraidedObject& source() const { return v_; }
  /// c_T^{m,n}, a d^{m+n}-square matrix.
  ExactMatrix block(std::size_t m, std::size_t n) const;

 private:
  ExactMatrix compute(std::size_t m, std::size_t n) const;

  BraidedObject v_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::size_t, std::size_t>, ExactMatrix> table_;
};

/// Identity on V^{⊗k}, i.e. the d^k-square identity.
ExactMatrix tensor_identity(const FieldSpec& field, std::size_t dim, std::size_t k);

/// c_T^{m,n} via BraidRep (validates v on every call; reuse a BraidRep for
/// repeated queries).
ExactMatrix cT(std::size_t m, std::size_t n, const BraidedObject& v);

/// c_T^{m,n} built by the mirrored schedule: c_T^{l,1} by peeling the
/// rightmost strand of the left block, c_T^{l,l'} by peeling the rightmost
/// factor of the right block. Shares no code with BraidRep and serves as its
/// cross-check.
ExactMatrix cT_oracle(std::size_t m, std::size_t n, const BraidedObject& v);

/// Both sides of the hexagon relation on V^{⊗l}⊗V^{⊗m}⊗V^{⊗n}:
/// (V^n⊗c^{l,m})(c^{l,n}⊗V^m)(V^l⊗c^{m,n}) = (c^{m,n}⊗V^l)(V^m⊗c^{l,n})(c^{l,m}⊗V^n).
bool check_hexagon(std::size_t l, std::size_t m, std::size_t n, const BraidRep& rep);

}  // namespace braidkit
