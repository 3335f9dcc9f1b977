#include "braidkit/gallery.hpp"

#include "braidkit/errors.hpp"
#include "braidkit/transport.hpp"

namespace braidkit::gallery {

namespace {

std::string grading_name(const std::vector<int>& grading) {
  std::string s;
  for (int g : grading) s += static_cast<char>('0' + g);
  return s;
}

}  // namespace

BraidedObject flip(const FieldSpec& field, std::size_t dim) {
  return J_braiding(BaseBraiding::flip(), field, dim);
}

BraidedObject super(const FieldSpec& field, const std::vector<int>& grading) {
  return J_braiding(BaseBraiding::super(grading), field, grading.size());
}

BraidedObject q_scalar(const Scalar& q) {
  ExactMatrix c(q.field(), 1, 1);
  c.set(0, 0, q);
  return BraidedObject(std::move(c));
}

BraidedObject corrupted_flip(const FieldSpec& field) {
  ExactMatrix c = flip(field, 2).c();
  c.set(0, 1, Scalar::one(field));
  return BraidedObject(std::move(c));
}

BialgebraData exterior_line(const FieldSpec& field) {
  BialgebraData b;
  b.algebra.m = ExactMatrix::from_ints(field, {{1, 0, 0, 0}, {0, 1, 1, 0}});
  b.algebra.u = ExactMatrix::from_ints(field, {{1}, {0}});
  b.coalgebra.delta = ExactMatrix::from_ints(field, {{1, 0}, {0, 1}, {0, 1}, {0, 0}});
  b.coalgebra.eps = ExactMatrix::from_ints(field, {{1, 0}});
  b.c = super(field, {0, 1}).c();
  return b;
}

BialgebraData exterior_line_with_flip(const FieldSpec& field) {
  BialgebraData b = exterior_line(field);
  b.c = flip(field, 2).c();
  return b;
}

BialgebraData group_algebra_z2(const FieldSpec& field) {
  BialgebraData b;
  b.algebra.m = ExactMatrix::from_ints(field, {{1, 0, 0, 1}, {0, 1, 1, 0}});
  b.algebra.u = ExactMatrix::from_ints(field, {{1}, {0}});
  b.coalgebra.delta = ExactMatrix::from_ints(field, {{1, 0}, {0, 0}, {0, 0}, {0, 1}});
  b.coalgebra.eps = ExactMatrix::from_ints(field, {{1, 1}});
  b.c = flip(field, 2).c();
  return b;
}

BialgebraData truncated_polynomial(const FieldSpec& field) {
  if (field.is_rational()) throw FieldMismatch("k[x]/(x^p) needs a prime field");
  const std::size_t p = field.modulus();
  const std::size_t d = p;
  BialgebraData b;
  b.algebra.m = ExactMatrix(field, d, d * d);
  b.coalgebra.delta = ExactMatrix(field, d * d, d);
  const Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; i + j < d; ++j) b.algebra.m.set(i + j, i * d + j, one);
  }
  // Δ(x^n) = Σ_k binom(n, k) x^k ⊗ x^{n-k}.
  for (std::size_t n = 0; n < d; ++n) {
    Scalar binom = one;
    for (std::size_t k = 0; k <= n; ++k) {
      b.coalgebra.delta.set(k * d + (n - k), n, binom);
      if (k == n) break;
      binom = binom * Scalar(field, static_cast<long>(n - k)) *
              Scalar(field, static_cast<long>(k + 1)).inverse();
    }
  }
  b.algebra.u = ExactMatrix::unit_column(field, d, 0);
  b.coalgebra.eps = ExactMatrix::unit_column(field, d, 0).transpose();
  b.c = flip(field, d).c();
  return b;
}

BialgebraData trivial(const FieldSpec& field) {
  const ExactMatrix one = ExactMatrix::identity(field, 1);
  return BialgebraData{{one, one}, {one, one}, one};
}

std::vector<NamedBraiding> braidings(std::size_t max_dim) {
  std::vector<NamedBraiding> out;
  const FieldSpec q = FieldSpec::rationals();
  for (std::size_t d = 1; d <= max_dim; ++d) {
    out.push_back({"flip d=" + std::to_string(d), flip(q, d)});
  }
  for (std::size_t d = 1; d <= max_dim; ++d) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
      std::vector<int> grading(d);
      for (std::size_t i = 0; i < d; ++i) grading[i] = static_cast<int>(mask >> (d - 1 - i) & 1U);
      out.push_back({"super " + grading_name(grading), super(q, grading)});
    }
  }
  for (const FieldSpec& f : {q, FieldSpec::prime(5)}) {
    for (long value : {1L, 2L, -1L}) {
      out.push_back({"q=" + std::to_string(value) + " over " + f.to_string(),
                     q_scalar(Scalar(f, value))});
    }
  }
  return out;
}

std::vector<NamedBialgebra> bialgebras() {
  std::vector<NamedBialgebra> out;
  for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
    out.push_back({"trivial over " + f.to_string(), trivial(f)});
    out.push_back({"exterior line over " + f.to_string(), exterior_line(f)});
    out.push_back({"k[Z/2] over " + f.to_string(), group_algebra_z2(f)});
  }
  for (std::uint64_t p : {2U, 3U}) {
    const FieldSpec f = FieldSpec::prime(p);
    out.push_back({"k[x]/(x^p) over " + f.to_string(), truncated_polynomial(f)});
  }
  return out;
}

}  // namespace braidkit::gallery
