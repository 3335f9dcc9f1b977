#include "braidkit/primitives.hpp"

#include "braidkit/errors.hpp"

namespace braidkit {

ExactMatrix equalizer_matrix(const BialgebraData& b) {
  b.validate();
  const ExactMatrix id = ExactMatrix::identity(b.field(), b.dim());
  return b.delta() - kron(id, b.u()) - kron(b.u(), id);
}

ExactMatrix induced_braiding(const ExactMatrix& xi, const ExactMatrix& c) {
  const std::size_t p = xi.cols();
  if (c.rows() != xi.rows() * xi.rows() || !c.is_square()) {
    throw ShapeError("braiding does not act on the ambient of xi");
  }
  if (p == 0) return ExactMatrix(xi.field(), 0, 0);
  const ExactMatrix xx = kron(xi, xi);
  auto c_p = solve_injective(xx, c * xx);
  if (!c_p) throw NotClosedUnderBraiding("c(ξ⊗ξ) leaves the image of ξ⊗ξ");
  AxiomReport r = check_yang_baxter(BraidedObject(*c_p));
  if (auto failed = r.first_failure()) {
    throw InternalInconsistency("induced braiding fails " + *failed);
  }
  return *std::move(c_p);
}

ExactMatrix induced_braiding_block(const ExactMatrix& xi_a, const ExactMatrix& xi_b,
                                   const ExactMatrix& c_ab) {
  auto x = solve_injective(kron(xi_b, xi_a), c_ab * kron(xi_a, xi_b));
  if (!x) throw NotClosedUnderBraiding("braiding block leaves the primitive tensor product");
  return *std::move(x);
}

PrimitiveSpace primitives(const BialgebraData& b) {
  AxiomReport r = check_braided_bialgebra(b);
  if (auto failed = r.first_failure()) {
    throw SpecViolation("input is not a braided bialgebra: " + *failed + " fails");
  }
  PrimitiveSpace p;
  p.xi = nullspace(equalizer_matrix(b));
  p.c_p = induced_braiding(p.xi, b.c);
  return p;
}

ExactMatrix primitives_of_tensor(const TruncatedTensorBialgebra& t, std::size_t n) {
  if (n < 1 || n > t.degree()) {
    throw BadDegree("primitive degree " + std::to_string(n) + " outside 1.." +
                    std::to_string(t.degree()));
  }
  ExactMatrix stacked(t.field(), 0, t.piece_dim(n));
  for (std::size_t k = 1; k < n; ++k) stacked = vstack(stacked, t.delta(k, n));
  return nullspace(stacked);
}

std::vector<std::size_t> primitive_dims(const TruncatedTensorBialgebra& t) {
  std::vector<std::size_t> dims;
  for (std::size_t n = 1; n <= t.degree(); ++n) dims.push_back(primitives_of_tensor(t, n).cols());
  return dims;
}

std::optional<std::string> morphism_failure(const ExactMatrix& f, const BialgebraData& b,
                                            const BialgebraData& b2) {
  b.validate();
  b2.validate();
  if (f.rows() != b2.dim() || f.cols() != b.dim()) {
    throw ShapeError("morphism must be dim(B')×dim(B)");
  }
  const ExactMatrix ff = kron(f, f);
  if (!(f * b.m() == b2.m() * ff)) return "multiplicative";
  if (!(f * b.u() == b2.u())) return "unital";
  if (!(ff * b.delta() == b2.delta() * f)) return "comultiplicative";
  if (!(b2.eps() * f == b.eps())) return "counital";
  if (!(b2.c * ff == ff * b.c)) return "braided";
  return std::nullopt;
}

ExactMatrix induced_map(const ExactMatrix& f, const BialgebraData& b, const BialgebraData& b2) {
  if (auto failed = morphism_failure(f, b, b2)) {
    throw NotAMorphism("map is not " + *failed);
  }
  const ExactMatrix xi = nullspace(equalizer_matrix(b));
  const ExactMatrix xi2 = nullspace(equalizer_matrix(b2));
  auto pf = solve_injective(xi2, f * xi);
  if (!pf) throw NoFactorization("f·ξ leaves the primitives of the target");
  return *std::move(pf);
}

}  // namespace braidkit
