#include "braidkit/adjunctions.hpp"

#include <string>

#include "braidkit/errors.hpp"

namespace braidkit {

namespace {

std::string at_degree(std::size_t n) { return "[" + std::to_string(n) + "]"; }
std::string at_degrees(std::size_t a, std::size_t b) {
  return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

// m_T^{n-1} restricted to the degree-(1,…,1) component of T(V)^{⊗n}.
ExactMatrix free_fold(const TruncatedTensorBialgebra& t, std::size_t n) {
  if (n == 0) return t.unit();
  ExactMatrix acc = ExactMatrix::identity(t.field(), t.dim());
  for (std::size_t k = 2; k <= n; ++k) {
    acc = t.product_block(k - 1, 1) * kron(acc, ExactMatrix::identity(t.field(), t.dim()));
  }
  return acc;
}

// Structure of T(P) needed by the ζ checks; handles P = 0, where T(P) = k.
struct FreeCoalgebra {
  std::optional<TruncatedTensorBialgebra> tensor;
  FieldSpec field;

  ExactMatrix delta(std::size_t k, std::size_t n) const {
    if (tensor) return tensor->delta(k, n);
    return n == 0 ? ExactMatrix::identity(field, 1) : ExactMatrix(field, 0, 0);
  }
  ExactMatrix counit(std::size_t n) const {
    if (tensor) return tensor->counit(n);
    return n == 0 ? ExactMatrix::identity(field, 1) : ExactMatrix(field, 1, 0);
  }
};

FreeCoalgebra free_coalgebra(const PrimitiveSpace& p, const FieldSpec& field, std::size_t degree) {
  FreeCoalgebra out{std::nullopt, field};
  if (p.dim() > 0) out.tensor = TruncatedTensorBialgebra::build(BraidedObject(p.c_p), degree);
  return out;
}

}  // namespace

ExactMatrix counit_block(const AlgebraData& a, std::size_t n) {
  a.validate();
  if (n == 0) return a.u;
  const ExactMatrix id = ExactMatrix::identity(a.field(), a.dim());
  ExactMatrix acc = id;
  for (std::size_t k = 2; k <= n; ++k) acc = a.m * kron(acc, id);
  return acc;
}

std::vector<ExactMatrix> counit_blocks(const AlgebraData& a, std::size_t degree) {
  std::vector<ExactMatrix> blocks;
  for (std::size_t n = 0; n <= degree; ++n) blocks.push_back(counit_block(a, n));
  return blocks;
}

AxiomReport check_T_Omega(const TruncatedTensorBialgebra& t, const AlgebraData& test_algebra,
                          const std::vector<ExactMatrix>& blocks,
                          const std::optional<ExactMatrix>& test_braiding) {
  const std::size_t N = t.degree();
  if (blocks.size() != N + 1) throw ShapeError("expected one counit block per degree 0..N");
  test_algebra.validate();
  const FieldSpec& f = t.field();
  AxiomReport r("degrees <= " + std::to_string(N));

  const ExactMatrix eta = ExactMatrix::identity(f, t.dim());
  for (std::size_t n = 0; n <= N; ++n) {
    r.expect_equal("triangle_free" + at_degree(n), free_fold(t, n) * kron_power(eta, n),
                   ExactMatrix::identity(f, t.piece_dim(n)));
  }

  const AlgebraData& a = test_algebra;
  const ExactMatrix id = ExactMatrix::identity(a.field(), a.dim());
  r.expect_equal("triangle_forgetful", blocks[1] * id, id);
  r.expect_equal("counit_unit", blocks[0], a.u);
  ExactMatrix right_fold = id;
  for (std::size_t n = 2; n <= N; ++n) {
    right_fold = a.m * kron(id, right_fold);
    r.expect_equal("counit_fold" + at_degree(n), blocks[n], right_fold);
  }
  for (std::size_t x = 0; x <= N; ++x) {
    for (std::size_t y = 0; x + y <= N; ++y) {
      r.expect_equal("counit_multiplicative" + at_degrees(x, y), blocks[x + y],
                     a.m * kron(blocks[x], blocks[y]));
    }
  }
  if (test_braiding) {
    std::optional<BraidRep> rep;
    try {
      rep.emplace(BraidedObject(*test_braiding));
    } catch (const Error& e) {
      r.expect("counit_braided", false, e.what());
    }
    if (rep) {
      for (std::size_t x = 0; x <= N; ++x) {
        for (std::size_t y = 0; x + y <= N; ++y) {
          r.expect_equal("counit_braided" + at_degrees(x, y),
                         *test_braiding * kron(blocks[x], blocks[y]),
                         kron(blocks[y], blocks[x]) * rep->block(x, y));
        }
      }
    }
  }
  return r;
}

bool check_triangles_T_Omega(const BraidedObject& v, std::size_t degree,
                             const std::optional<BraidedAlgebra>& test) {
  const TruncatedTensorBialgebra t = TruncatedTensorBialgebra::build(v, degree);
  if (test) {
    return check_T_Omega(t, test->algebra, counit_blocks(test->algebra, degree), test->c).passed();
  }
  const FieldSpec& f = v.field();
  AlgebraData k{ExactMatrix::identity(f, 1), ExactMatrix::identity(f, 1)};
  return check_T_Omega(t, k, counit_blocks(k, degree), ExactMatrix::identity(f, 1)).passed();
}

ExactMatrix eta_bar(const TruncatedTensorBialgebra& t) {
  const ExactMatrix xi1 = primitives_of_tensor(t, 1);
  auto x = solve_injective(xi1, ExactMatrix::identity(t.field(), t.dim()));
  if (!x) throw NoFactorization("degree-1 elements are not primitive");
  return *std::move(x);
}

ExactMatrix eta_bar(const BraidedObject& v, std::size_t degree) {
  return eta_bar(TruncatedTensorBialgebra::build(v, degree));
}

std::vector<ExactMatrix> zeta(const BialgebraData& b, const PrimitiveSpace& p, std::size_t degree) {
  std::vector<ExactMatrix> blocks;
  blocks.push_back(b.u());
  for (std::size_t n = 1; n <= degree; ++n) {
    blocks.push_back(counit_block(b.algebra, n) * kron_power(p.xi, n));
  }
  return blocks;
}

std::vector<ExactMatrix> zeta(const BialgebraData& b, std::size_t degree) {
  return zeta(b, primitives(b), degree);
}

AxiomReport check_zeta_coalgebra(const BialgebraData& b, std::size_t degree) {
  AxiomReport r("degrees <= " + std::to_string(degree));
  PrimitiveSpace p;
  try {
    p = primitives(b);
  } catch (const Error& e) {
    r.expect("primitives", false, e.what());
    return r;
  }
  const FieldSpec& f = b.field();
  r.expect_equal("eps_xi", b.eps() * p.xi, ExactMatrix::zeros(f, 1, p.dim()));

  const std::vector<ExactMatrix> z = zeta(b, p, degree);
  const FreeCoalgebra tp = free_coalgebra(p, f, degree);
  for (std::size_t n = 0; n <= degree; ++n) {
    ExactMatrix rhs = ExactMatrix::zeros(f, b.dim() * b.dim(), z[n].cols());
    for (std::size_t k = 0; k <= n; ++k) rhs += kron(z[k], z[n - k]) * tp.delta(k, n);
    r.expect_equal("comultiplicative" + at_degree(n), b.delta() * z[n], rhs);
    r.expect_equal("counital" + at_degree(n), b.eps() * z[n], tp.counit(n));
  }
  return r;
}

AxiomReport check_triangles_Tbar_P(const BraidedObject& v, const BialgebraData& b,
                                   std::size_t degree) {
  AxiomReport r("degrees <= " + std::to_string(degree));
  const FieldSpec& f = v.field();

  const TruncatedTensorBialgebra t = TruncatedTensorBialgebra::build(v, degree);
  const ExactMatrix eb = eta_bar(t);
  const ExactMatrix xi1 = primitives_of_tensor(t, 1);
  r.expect_equal("eta_bar_factorizes", xi1 * eb, ExactMatrix::identity(f, v.dim()));
  for (std::size_t n = 0; n <= degree; ++n) {
    r.expect_equal("second_triangle" + at_degree(n),
                   free_fold(t, n) * kron_power(xi1, n) * kron_power(eb, n),
                   ExactMatrix::identity(f, t.piece_dim(n)));
  }

  PrimitiveSpace p;
  try {
    p = primitives(b);
  } catch (const Error& e) {
    r.expect("first_triangle", false, e.what());
    return r;
  }
  if (p.dim() == 0) {
    r.expect("first_triangle", true, "P(B) = 0");
    return r;
  }
  const TruncatedTensorBialgebra tp = TruncatedTensorBialgebra::build(BraidedObject(p.c_p), degree);
  const ExactMatrix eb_p = eta_bar(tp);
  const std::vector<ExactMatrix> z = zeta(b, p, degree);
  std::optional<ExactMatrix> restricted_counit;
  for (std::size_t n = 1; n <= degree; ++n) {
    auto y = solve_injective(p.xi, z[n] * primitives_of_tensor(tp, n));
    r.expect("counit_preserves_primitives" + at_degree(n), y.has_value(),
             y ? "" : "ζ maps a primitive of T(P) outside P(B)");
    if (n == 1 && y) restricted_counit = std::move(y);
  }
  if (restricted_counit) {
    r.expect_equal("first_triangle", *restricted_counit * eb_p,
                   ExactMatrix::identity(f, p.dim()));
  } else {
    r.expect("first_triangle", false, "P(ε̄) undefined in degree 1");
  }
  return r;
}

AdjunctionWitness make_witness(const BraidedObject& v, const BialgebraData& b, std::size_t degree) {
  AdjunctionWitness w;
  w.eta = ExactMatrix::identity(v.field(), v.dim());
  w.counit_blocks = counit_blocks(b.algebra, degree);
  w.eta_bar = eta_bar(v, degree);
  w.zeta_blocks = zeta(b, degree);
  return w;
}

}  // namespace braidkit
