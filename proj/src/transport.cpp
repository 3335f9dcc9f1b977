#include "braidkit/transport.hpp"

#include <bit>
#include <string>

#include "braidkit/braid_rep.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/tensor_bialgebra.hpp"

namespace braidkit {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Base-d digits of a flat tensor index, most significant first.
std::vector<std::size_t> digits(std::size_t index, std::size_t dim, std::size_t count) {
  std::vector<std::size_t> out(count);
  for (std::size_t i = count; i-- > 0;) {
    out[i] = index % dim;
    index /= dim;
  }
  return out;
}

std::size_t flat(const std::vector<std::size_t>& ds, std::size_t dim) {
  std::size_t index = 0;
  for (std::size_t x : ds) index = index * dim + x;
  return index;
}

}  // namespace

FunctorData FunctorData::basis_change(ExactMatrix g) {
  if (!g.is_square()) throw NotInvertible("basis change must be square");
  FunctorData f;
  f.kind_ = FunctorKind::BasisChange;
  f.g_inv_ = inverse(g);
  f.g_ = std::move(g);
  f.lambda_ = Scalar::one(f.g_.field());
  return f;
}

FunctorData FunctorData::scalar_twist(Scalar lambda) {
  if (lambda.is_zero()) throw NotInvertible("scalar twist by zero");
  FunctorData f;
  f.kind_ = FunctorKind::ScalarTwist;
  f.lambda_ = std::move(lambda);
  return f;
}

ExactMatrix FunctorData::apply(const ExactMatrix& f, std::size_t from_power,
                               std::size_t to_power) const {
  if (kind_ == FunctorKind::ScalarTwist) return f;
  return kron_power(g_, to_power) * f * kron_power(g_inv_, from_power);
}

AxiomReport FunctorData::check_coherence(const FieldSpec& field, std::size_t dim) const {
  // φ₂ on a product of `power` copies of the space, and φ₀.
  auto phi2 = [&](std::size_t power) {
    ExactMatrix id = tensor_identity(field, dim, power);
    return kind_ == FunctorKind::ScalarTwist ? id.scaled(lambda_) : id;
  };
  const Scalar phi0 = kind_ == FunctorKind::ScalarTwist ? lambda_.inverse() : Scalar::one(field);
  const ExactMatrix id1 = tensor_identity(field, dim, 1);

  AxiomReport r("monoidal functor coherence, dim " + std::to_string(dim));
  r.expect_equal("associativity", phi2(3) * kron(phi2(2), id1), phi2(3) * kron(id1, phi2(2)));
  // F(l_V)∘φ₂(1,V)∘(φ₀⊗FV) = l_FV, and the mirrored right-unit condition.
  r.expect_equal("left_unit", phi2(1) * id1.scaled(phi0), id1);
  r.expect_equal("right_unit", id1.scaled(phi0) * phi2(1), id1);
  return r;
}

FunctorData compose(const FunctorData& outer, const FunctorData& inner) {
  if (outer.kind() != inner.kind()) throw SpecViolation("composing functors of different kinds");
  if (outer.kind() == FunctorKind::BasisChange) {
    return FunctorData::basis_change(outer.g() * inner.g());
  }
  return FunctorData::scalar_twist(outer.lambda() * inner.lambda());
}

BraidedObject transport_braided_object(const FunctorData& functor, const BraidedObject& v) {
  if (!v.invertible()) throw NotInvertible("braiding is singular");
  return BraidedObject(functor.apply(v.c(), 2, 2));
}

BialgebraData transport_structure(const FunctorData& functor, const BialgebraData& b) {
  b.validate();
  BialgebraData out;
  if (functor.kind() == FunctorKind::BasisChange) {
    out.algebra.m = functor.apply(b.m(), 2, 1);
    out.algebra.u = functor.apply(b.u(), 0, 1);
    out.coalgebra.delta = functor.apply(b.delta(), 1, 2);
    out.coalgebra.eps = functor.apply(b.eps(), 1, 0);
    out.c = functor.apply(b.c, 2, 2);
  } else {
    const Scalar& lambda = functor.lambda();
    const Scalar inv = lambda.inverse();
    out.algebra.m = b.m().scaled(lambda);
    out.algebra.u = b.u().scaled(inv);
    out.coalgebra.delta = b.delta().scaled(inv);
    out.coalgebra.eps = b.eps().scaled(lambda);
    out.c = b.c;
  }
  return out;
}

BialgebraData transport_bialgebra(const FunctorData& functor, const BialgebraData& b) {
  if (auto failed = check_braided_bialgebra(b).first_failure()) {
    throw SpecViolation("input is not a braided bialgebra: " + *failed + " fails");
  }
  BialgebraData out = transport_structure(functor, b);
  if (auto failed = check_braided_bialgebra(out).first_failure()) {
    throw InternalInconsistency("transported structure fails " + *failed);
  }
  return out;
}

bool check_primfunct_square(const FunctorData& functor, const BialgebraData& b) {
  const PrimitiveSpace p = primitives(b);
  const PrimitiveSpace p2 = primitives(transport_bialgebra(functor, b));
  if (p.dim() != p2.dim()) return false;
  if (p.dim() == 0) return true;
  // F(ξ) with the identity basis change on P itself.
  const ExactMatrix f_xi =
      functor.kind() == FunctorKind::BasisChange ? functor.g() * p.xi : p.xi;
  if (!same_column_space(f_xi, p2.xi)) return false;
  auto h = solve_injective(p2.xi, f_xi);
  if (!h) return false;
  const ExactMatrix hh = kron(*h, *h);
  return p2.c_p * hh == hh * p.c_p;
}

int BaseBraiding::parity(std::size_t i, std::size_t dim) const {
  if (kind == BaseKind::Flip) return 0;
  validate(dim);
  return grading[i] & 1;
}

void BaseBraiding::validate(std::size_t dim) const {
  if (kind == BaseKind::Super && grading.size() != dim) {
    throw ShapeError("grading has " + std::to_string(grading.size()) + " entries for dim " +
                     std::to_string(dim));
  }
}

ExactMatrix block_transposition(const BaseBraiding& base, const FieldSpec& field, std::size_t dim,
                                std::size_t m, std::size_t n) {
  base.validate(dim);
  const std::size_t size = ipow(dim, m + n);
  const std::size_t right = ipow(dim, n);
  const std::size_t left = ipow(dim, m);
  ExactMatrix out(field, size, size);
  const Scalar one = Scalar::one(field);
  for (std::size_t index = 0; index < size; ++index) {
    const std::size_t a = index / right, b = index % right;
    int pa = 0, pb = 0;
    for (std::size_t x : digits(a, dim, m)) pa ^= base.parity(x, dim);
    for (std::size_t x : digits(b, dim, n)) pb ^= base.parity(x, dim);
    out.set(b * left + a, index, (pa & pb) ? -one : one);
  }
  return out;
}

ExactMatrix symmetric_coproduct_block(const BaseBraiding& base, const FieldSpec& field,
                                      std::size_t dim, std::size_t k, std::size_t n) {
  base.validate(dim);
  if (k > n) throw BadDegree("coproduct split exceeds degree");
  const std::size_t size = ipow(dim, n);
  ExactMatrix out(field, size, size);
  const Scalar one = Scalar::one(field);
  for (std::size_t index = 0; index < size; ++index) {
    const std::vector<std::size_t> x = digits(index, dim, n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
      std::vector<std::size_t> front, back;
      int sign = 0;
      int odd_back = 0;  // parity of factors already left behind
      for (std::size_t i = 0; i < n; ++i) {
        const int p = base.parity(x[i], dim);
        if (mask >> i & 1U) {
          front.push_back(x[i]);
          sign ^= odd_back & p;
        } else {
          back.push_back(x[i]);
          odd_back ^= p;
        }
      }
      front.insert(front.end(), back.begin(), back.end());
      const std::size_t target = flat(front, dim);
      out.set(target, index, out.at(target, index) + (sign ? -one : one));
    }
  }
  return out;
}

BraidedObject J_braiding(const BaseBraiding& base, const FieldSpec& field, std::size_t dim) {
  if (dim == 0) throw ShapeError("dimension must be positive");
  return BraidedObject(block_transposition(base, field, dim, 1, 1));
}

AxiomReport check_J_compatibility(const BraidedObject& v, const BaseBraiding& base,
                                  std::size_t degree) {
  const FieldSpec& f = v.field();
  const std::size_t d = v.dim();
  base.validate(d);
  if (!(v.c() * v.c()).is_identity()) {
    throw SpecViolation("base braiding must be a symmetry (c^2 = Id)");
  }
  AxiomReport r("m + n <= " + std::to_string(degree));
  const TruncatedTensorBialgebra t = TruncatedTensorBialgebra::build(v, degree);
  for (std::size_t m = 0; m <= degree; ++m) {
    for (std::size_t n = 0; m + n <= degree; ++n) {
      r.expect_equal("cT_is_block_transposition[" + std::to_string(m) + "," + std::to_string(n) + "]",
                     t.braid().block(m, n), block_transposition(base, f, d, m, n));
    }
  }
  for (std::size_t n = 1; n <= degree; ++n) {
    ExactMatrix stacked(f, 0, t.piece_dim(n));
    for (std::size_t k = 0; k <= n; ++k) {
      ExactMatrix plain = symmetric_coproduct_block(base, f, d, k, n);
      r.expect_equal("delta_matches[" + std::to_string(k) + "," + std::to_string(n) + "]",
                     t.delta(k, n), plain);
      if (k > 0 && k < n) stacked = vstack(stacked, plain);
    }
    r.expect_equal("primitives_match[" + std::to_string(n) + "]", primitives_of_tensor(t, n),
                   nullspace(stacked));
  }
  return r;
}

AxiomReport check_J_compatibility(const BaseBraiding& base, const FieldSpec& field,
                                  std::size_t dim, std::size_t degree) {
  return check_J_compatibility(J_braiding(base, field, dim), base, degree);
}

ExactMatrix random_invertible(const FieldSpec& field, std::size_t dim, std::mt19937_64& rng) {
  for (;;) {
    ExactMatrix g(field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        if (field.is_rational()) {
          g.set(i, j, Scalar(field, static_cast<long>(rng() % 7) - 3));
        } else {
          g.set(i, j, Scalar::residue(field, rng() % field.modulus()));
        }
      }
    }
    if (is_invertible(g)) return g;
  }
}

}  // namespace braidkit
