#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "braidkit/braided_core.hpp"

namespace braidkit::gallery {

/// c(e_i⊗e_j) = e_j⊗e_i.
BraidedObject flip(const FieldSpec& field, std::size_t dim);
/// c(e_i⊗e_j) = (-1)^{|i||j|} e_j⊗e_i for the given parities.
BraidedObject super(const FieldSpec& field, const std::vector<int>& grading);
/// The 1-dimensional braiding c = q. Throws NotInvertible for q = 0 only
/// through check_yang_baxter; construction accepts any q.
BraidedObject q_scalar(const Scalar& q);
/// The flip on k² with one extra entry: c(e_0⊗e_1) gains a component e_0⊗e_0.
BraidedObject corrupted_flip(const FieldSpec& field);

/// Λ(x) = k[x]/(x²) with x primitive, basis {1, x}, and the super braiding
/// with x odd.
BialgebraData exterior_line(const FieldSpec& field);
/// Λ(x) with the plain flip, which breaks the compatibility Δm.
BialgebraData exterior_line_with_flip(const FieldSpec& field);
/// k[ℤ/2] with basis {e, g}, grouplike coproduct and the flip.
BialgebraData group_algebra_z2(const FieldSpec& field);
/// k[x]/(x^p) over F_p, x primitive, with the flip on the basis 1, x, …, x^{p-1}.
BialgebraData truncated_polynomial(const FieldSpec& field);
/// The ground field as a bialgebra.
BialgebraData trivial(const FieldSpec& field);

struct NamedBraiding {
  std::string name;
  BraidedObject v;
};
struct NamedBialgebra {
  std::string name;
  BialgebraData b;
};

/// flip (d = 1..max_dim), super (all gradings, d = 1..max_dim) and q-scalar
/// braidings for q ∈ {1, 2, -1} over Q and F_5.
std::vector<NamedBraiding> braidings(std::size_t max_dim);
/// Every valid bialgebra above, over Q and F_5 where defined, plus
/// truncated_polynomial over F_2 and F_3.
std::vector<NamedBialgebra> bialgebras();

}  // namespace braidkit::gallery
