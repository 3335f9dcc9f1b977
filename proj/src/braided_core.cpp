#include "braidkit/braided_core.hpp"

#include <cmath>
#include <string>

#include "braidkit/errors.hpp"

namespace braidkit {

namespace {

std::string dims(const ExactMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_shape(const ExactMatrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw ShapeError(std::string(what) + " must be " + std::to_string(rows) + "x" +
                     std::to_string(cols) + ", got " + dims(m));
  }
}

ExactMatrix eye(const FieldSpec& f, std::size_t n) { return ExactMatrix::identity(f, n); }

ExactMatrix k3(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c) {
  return kron(kron(a, b), c);
}

}  // namespace

BraidedObject::BraidedObject(ExactMatrix c) : c_(std::move(c)) {
  if (!c_.is_square() || c_.rows() == 0) throw ShapeError("braiding must be square, got " + dims(c_));
  auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(c_.rows()))));
  if (d * d != c_.rows()) {
    throw ShapeError("braiding size " + std::to_string(c_.rows()) + " is not a square d^2");
  }
  dim_ = d;
  if (is_invertible(c_)) c_inv_ = inverse(c_);
}

const ExactMatrix& BraidedObject::c_inv() const {
  if (!c_inv_) throw NotInvertible("braiding is singular");
  return *c_inv_;
}

void AlgebraData::validate() const {
  if (!(m.field() == u.field())) throw FieldMismatch("algebra m and u over different fields");
  const std::size_t d = dim();
  if (d == 0) throw ShapeError("algebra dimension must be positive");
  require_shape(u, d, 1, "unit u");
  require_shape(m, d, d * d, "multiplication m");
}

void CoalgebraData::validate() const {
  if (!(delta.field() == eps.field())) throw FieldMismatch("coalgebra Δ and ε over different fields");
  const std::size_t d = dim();
  if (d == 0) throw ShapeError("coalgebra dimension must be positive");
  require_shape(eps, 1, d, "counit eps");
  require_shape(delta, d * d, d, "comultiplication delta");
}

void BialgebraData::validate() const {
  algebra.validate();
  coalgebra.validate();
  if (coalgebra.dim() != algebra.dim()) throw ShapeError("algebra and coalgebra dimensions differ");
  if (!(coalgebra.field() == algebra.field()) || !(c.field() == algebra.field())) {
    throw FieldMismatch("bialgebra structure maps over different fields");
  }
  require_shape(c, dim() * dim(), dim() * dim(), "braiding c");
}

const AlgebraData& ProductAlgebraSpec::algebra(int i) const {
  if (i == 1) return a1;
  if (i == 2) return a2;
  throw ShapeError("product index must be 1 or 2");
}

const ExactMatrix& ProductAlgebraSpec::c(int i, int j) const {
  if (i == 1 && j == 1) return c11;
  if (i == 1 && j == 2) return c12;
  if (i == 2 && j == 1) return c21;
  if (i == 2 && j == 2) return c22;
  throw ShapeError("product index must be 1 or 2");
}

AxiomReport check_yang_baxter(const BraidedObject& v) {
  const ExactMatrix& c = v.c();
  const std::size_t d = v.dim();
  require_shape(c, d * d, d * d, "braiding c");
  const ExactMatrix id = eye(v.field(), d);
  AxiomReport report("braided object, dim " + std::to_string(d));
  report.expect("invertible", v.invertible(), v.invertible() ? "" : "c is singular");
  const ExactMatrix c1 = kron(c, id);
  const ExactMatrix c2 = kron(id, c);
  report.expect_equal("qybe", c1 * c2 * c1, c2 * c1 * c2);
  return report;
}

bool check_braided_morphism(const ExactMatrix& f, const BraidedObject& v, const BraidedObject& w) {
  require_shape(f, w.dim(), v.dim(), "morphism f");
  const ExactMatrix ff = kron(f, f);
  return w.c() * ff == ff * v.c();
}

AxiomReport check_braided_algebra(const AlgebraData& a, const ExactMatrix& c) {
  a.validate();
  const std::size_t d = a.dim();
  require_shape(c, d * d, d * d, "braiding c");
  const FieldSpec& f = a.field();
  const ExactMatrix id = eye(f, d);
  const ExactMatrix& m = a.m;
  const ExactMatrix& u = a.u;

  AxiomReport r("braided algebra, dim " + std::to_string(d));
  r.expect_equal("associativity", m * kron(m, id), m * kron(id, m));
  r.expect_equal("unit_left", m * kron(u, id), id);
  r.expect_equal("unit_right", m * kron(id, u), id);
  r.expect_equal("Br2", c * kron(m, id), kron(id, m) * kron(c, id) * kron(id, c));
  r.expect_equal("Br3", c * kron(id, m), kron(m, id) * kron(id, c) * kron(c, id));
  r.expect_equal("Br4_left", c * kron(u, id), kron(id, u));
  r.expect_equal("Br4_right", c * kron(id, u), kron(u, id));
  return r;
}

AxiomReport check_braided_coalgebra(const CoalgebraData& co, const ExactMatrix& c) {
  co.validate();
  const std::size_t d = co.dim();
  require_shape(c, d * d, d * d, "braiding c");
  const ExactMatrix id = eye(co.field(), d);
  const ExactMatrix& delta = co.delta;
  const ExactMatrix& eps = co.eps;

  AxiomReport r("braided coalgebra, dim " + std::to_string(d));
  r.expect_equal("coassociativity", kron(delta, id) * delta, kron(id, delta) * delta);
  r.expect_equal("counit_left", kron(eps, id) * delta, id);
  r.expect_equal("counit_right", kron(id, eps) * delta, id);
  r.expect_equal("Br5", kron(delta, id) * c, kron(id, c) * kron(c, id) * kron(id, delta));
  r.expect_equal("Br6", kron(id, delta) * c, kron(c, id) * kron(id, c) * kron(delta, id));
  r.expect_equal("Br7_left", kron(eps, id) * c, kron(id, eps));
  r.expect_equal("Br7_right", kron(id, eps) * c, kron(eps, id));
  return r;
}

AxiomReport check_braided_bialgebra(const BialgebraData& b) {
  b.validate();
  const std::size_t d = b.dim();
  const FieldSpec& f = b.field();
  const ExactMatrix id = eye(f, d);

  AxiomReport r("braided bialgebra, dim " + std::to_string(d));
  r.merge(check_yang_baxter(BraidedObject(b.c)));
  r.merge(check_braided_algebra(b.algebra, b.c));
  r.merge(check_braided_coalgebra(b.coalgebra, b.c));
  r.expect_equal("Br1", b.delta() * b.m(),
                 kron(b.m(), b.m()) * k3(id, b.c, id) * kron(b.delta(), b.delta()));
  r.expect_equal("Br8", b.delta() * b.u(), kron(b.u(), b.u()));
  r.expect_equal("Br9", b.eps() * b.m(), kron(b.eps(), b.eps()));
  r.expect_equal("Br10", b.eps() * b.u(), eye(f, 1));
  return r;
}

AxiomReport check_product_spec(const ProductAlgebraSpec& spec) {
  spec.a1.validate();
  spec.a2.validate();
  if (!(spec.a1.field() == spec.a2.field())) throw FieldMismatch("product factors over different fields");
  const FieldSpec& f = spec.a1.field();
  auto dim = [&](int i) { return spec.algebra(i).dim(); };
  auto id = [&](int i) { return eye(f, dim(i)); };
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      require_shape(spec.c(i, j), dim(j) * dim(i), dim(i) * dim(j), "exchange map c(i,j)");
    }
  }

  AxiomReport r("product algebra hypotheses");
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      const std::string tag = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
      const ExactMatrix& cij = spec.c(i, j);
      const AlgebraData& ai = spec.algebra(i);
      const AlgebraData& aj = spec.algebra(j);
      r.expect("invertible" + tag, is_invertible(cij));
      r.expect_equal("c21" + tag, cij * kron(ai.m, id(j)),
                     kron(id(j), ai.m) * kron(cij, id(i)) * kron(id(i), cij));
      r.expect_equal("c22" + tag, cij * kron(id(i), aj.m),
                     kron(aj.m, id(i)) * kron(id(j), cij) * kron(cij, id(j)));
      r.expect_equal("c31_left" + tag, cij * kron(ai.u, id(j)), kron(id(j), ai.u));
      r.expect_equal("c31_right" + tag, cij * kron(id(i), aj.u), kron(aj.u, id(i)));
    }
  }
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      for (int k = 1; k <= 2; ++k) {
        const std::string tag =
            "[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "]";
        r.expect_equal("cij" + tag,
                       kron(id(k), spec.c(i, j)) * kron(spec.c(i, k), id(j)) *
                           kron(id(i), spec.c(j, k)),
                       kron(spec.c(j, k), id(i)) * kron(id(j), spec.c(i, k)) *
                           kron(spec.c(i, j), id(k)));
      }
    }
  }
  return r;
}

BraidedAlgebra product_algebra(const ProductAlgebraSpec& spec, int i, int j) {
  AxiomReport hyp = check_product_spec(spec);
  if (auto failed = hyp.first_failure()) {
    throw SpecViolation("product algebra hypothesis " + *failed + " fails");
  }
  const FieldSpec& f = spec.a1.field();
  const AlgebraData& ai = spec.algebra(i);
  const AlgebraData& aj = spec.algebra(j);
  const ExactMatrix id_i = eye(f, ai.dim());
  const ExactMatrix id_j = eye(f, aj.dim());

  BraidedAlgebra out;
  out.algebra.m = kron(ai.m, aj.m) * k3(id_i, spec.c(j, i), id_j);
  out.algebra.u = kron(ai.u, aj.u);
  out.c = k3(id_i, spec.c(i, j), id_j) * kron(spec.c(i, i), spec.c(j, j)) *
          k3(id_i, spec.c(j, i), id_j);
  return out;
}

DoubleBraiding double_braiding(const AlgebraData& a, const ExactMatrix& c) {
  AxiomReport base = check_braided_algebra(a, c);
  base.merge(check_yang_baxter(BraidedObject(c)));
  if (auto failed = base.first_failure()) {
    throw SpecViolation("(A, c) is not a braided algebra: " + *failed + " fails");
  }
  const FieldSpec& f = a.field();
  const ExactMatrix id = eye(f, a.dim());

  DoubleBraiding out;
  ProductAlgebraSpec& s = out.spec;
  s.a1 = a;
  s.a2.m = kron(a.m, a.m) * k3(id, c, id);
  s.a2.u = kron(a.u, a.u);
  s.c11 = c;
  s.c22 = k3(id, c, id) * kron(c, c) * k3(id, c, id);
  s.c21 = kron(c, id) * kron(id, c);
  s.c12 = kron(id, c) * kron(c, id);

  out.square = BraidedAlgebra{s.a2, s.c22};
  out.triple = product_algebra(s, 1, 2);
  return out;
}

}  // namespace braidkit
