#include <gtest/gtest.h>

#include "braidkit/braided_core.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/gallery.hpp"
#include "oracles.hpp"

using namespace braidkit;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);

// Multiplication of the super tensor product Λ(x_1)⊗…⊗Λ(x_n) written out
// from the sign rule (a_1⊗…⊗a_n)(b_1⊗…⊗b_n) = (-1)^{Σ_{i>j}|a_i||b_j|} Π a_i b_i.
ExactMatrix super_exterior_product(const FieldSpec& f, std::size_t n) {
  const std::size_t d = std::size_t{1} << n;
  ExactMatrix m(f, d, d * d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      if (a & b) continue;
      int sign = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
          // Factor i is bit (n-1-i) of the flat index.
          sign += static_cast<int>((a >> (n - 1 - i) & 1U) & (b >> (n - 1 - j) & 1U));
        }
      m.set(a | b, a * d + b, Scalar(f, sign % 2 ? -1 : 1));
    }
  }
  return m;
}

}  // namespace

TEST(BraidedObject, RejectsNonSquareSizes) {
  EXPECT_THROW(BraidedObject(ExactMatrix::identity(Q, 3)), ShapeError);
  EXPECT_THROW(BraidedObject(ExactMatrix(Q, 4, 2)), ShapeError);
  EXPECT_NO_THROW(BraidedObject(ExactMatrix::identity(Q, 9)));
}

TEST(YangBaxter, GalleryPasses) {
  for (const auto& [name, v] : gallery::braidings(3)) {
    const AxiomReport r = check_yang_baxter(v);
    EXPECT_TRUE(r.passed()) << name << ": " << r.first_failure().value_or("");
  }
}

TEST(YangBaxter, CorruptedFlipIsLocated) {
  const AxiomReport r = check_yang_baxter(gallery::corrupted_flip(Q));
  EXPECT_TRUE(r.passed("invertible"));
  const AxiomCheck* qybe = r.find("qybe");
  ASSERT_NE(qybe, nullptr);
  EXPECT_FALSE(qybe->passed);
  ASSERT_TRUE(qybe->violation);
  // (c⊗1)(1⊗c)(c⊗1) and (1⊗c)(c⊗1)(1⊗c) first differ in row e_000.
  EXPECT_EQ(qybe->violation->row, 0U);
}

TEST(YangBaxter, SingularBraidingIsReported) {
  const AxiomReport r = check_yang_baxter(gallery::q_scalar(Scalar(Q, 0)));
  EXPECT_FALSE(r.passed("invertible"));
  EXPECT_THROW(gallery::q_scalar(Scalar(Q, 0)).c_inv(), NotInvertible);
}

TEST(YangBaxter, DiagonalBraidingsSatisfyQybe) {
  // c(e_i⊗e_j) = q_ij e_j⊗e_i solves QYBE for any nonzero q_ij.
  ExactMatrix c = gallery::flip(Q, 2).c();
  c.set(1, 2, Scalar(Q, 3));
  c.set(2, 1, Scalar(Q, 1, 2));
  c.set(3, 3, Scalar(Q, -7));
  EXPECT_TRUE(check_yang_baxter(BraidedObject(c)).passed());
}

TEST(BraidedMorphism, FlipIsNaturalForAnyMap) {
  const ExactMatrix f = ExactMatrix::from_ints(Q, {{1, 2}, {0, 3}, {5, -1}});
  EXPECT_TRUE(check_braided_morphism(f, gallery::flip(Q, 2), gallery::flip(Q, 3)));
  EXPECT_FALSE(check_braided_morphism(f, gallery::super(Q, {0, 1}), gallery::flip(Q, 3)));
  EXPECT_THROW(check_braided_morphism(f, gallery::flip(Q, 3), gallery::flip(Q, 3)), ShapeError);
}

TEST(BraidedBialgebra, GalleryPasses) {
  for (const auto& [name, b] : gallery::bialgebras()) {
    const AxiomReport r = check_braided_bialgebra(b);
    EXPECT_TRUE(r.passed()) << name << ": " << r.first_failure().value_or("");
  }
}

TEST(BraidedBialgebra, ExteriorLineWithFlipFailsOnlyCompatibility) {
  const AxiomReport r = check_braided_bialgebra(gallery::exterior_line_with_flip(Q));
  EXPECT_FALSE(r.passed("Br1"));
  // The flip is natural for every linear map, so the algebra and coalgebra
  // compatibilities still hold; only Δ∘m sees the missing sign on x⊗x.
  for (const char* name : {"Br2", "Br3", "Br4_left", "Br4_right", "Br5", "Br6", "Br7_left",
                           "Br7_right", "Br8", "Br9", "Br10", "associativity", "coassociativity"}) {
    EXPECT_TRUE(r.passed(name)) << name;
  }
}

TEST(BraidedBialgebra, BrokenCounitDetected) {
  BialgebraData b = gallery::group_algebra_z2(F5);
  b.coalgebra.eps = ExactMatrix::from_ints(F5, {{1, 2}});
  const AxiomReport r = check_braided_bialgebra(b);
  EXPECT_FALSE(r.passed("counit_left"));
  EXPECT_FALSE(r.passed("Br9"));
}

TEST(BraidedAlgebra, DeformationsDetected) {
  const ExactMatrix c = gallery::flip(Q, 2).c();
  AlgebraData a = gallery::exterior_line(Q).algebra;
  a.m.set(0, 3, Scalar(Q, 1));  // x·x = 1: the group algebra of Z/2 again
  EXPECT_TRUE(check_braided_algebra(a, c).passed());
  a.m.set(1, 2, Scalar(Q, 2));  // x·1 = 2x
  const AxiomReport r = check_braided_algebra(a, c);
  EXPECT_FALSE(r.passed("associativity"));
  EXPECT_FALSE(r.passed("unit_right"));
  EXPECT_TRUE(r.passed("unit_left"));
}

TEST(BraidedAlgebra, ShapeErrors) {
  AlgebraData a{ExactMatrix(Q, 2, 3), ExactMatrix(Q, 2, 1)};
  EXPECT_THROW(check_braided_algebra(a, ExactMatrix::identity(Q, 4)), ShapeError);
}

TEST(DoubleBraiding, SuperExteriorLineGivesSuperTensorProducts) {
  const BialgebraData lam = gallery::exterior_line(Q);
  const DoubleBraiding db = double_braiding(lam.algebra, lam.c);
  EXPECT_EQ(db.square.algebra.m, super_exterior_product(Q, 2));
  EXPECT_EQ(db.triple.algebra.m, super_exterior_product(Q, 3));
  EXPECT_EQ(db.square.c, oracle::tuple_swap(Q, 2, 2, 2, {0, 1}));
  EXPECT_TRUE(check_product_spec(db.spec).passed());
  EXPECT_TRUE(check_braided_algebra(db.square.algebra, db.square.c).passed());
  EXPECT_TRUE(check_braided_algebra(db.triple.algebra, db.triple.c).passed());
  EXPECT_TRUE(check_yang_baxter(BraidedObject(db.triple.c)).passed());
}

TEST(DoubleBraiding, GroupAlgebraSquareIsGroupAlgebraOfKleinGroup) {
  const BialgebraData g = gallery::group_algebra_z2(F5);
  const DoubleBraiding db = double_braiding(g.algebra, g.c);
  // Basis (a, b) ↦ 2a + b multiplies as (a, b)(a', b') = (a⊕a', b⊕b').
  ExactMatrix expected(F5, 4, 16);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) expected.set(x ^ y, x * 4 + y, Scalar(F5, 1));
  EXPECT_EQ(db.square.algebra.m, expected);
  EXPECT_TRUE(check_braided_algebra(db.triple.algebra, db.triple.c).passed());
}

TEST(DoubleBraiding, RejectsNonBraidedInput) {
  const BialgebraData lam = gallery::exterior_line(Q);
  EXPECT_THROW(double_braiding(lam.algebra, gallery::corrupted_flip(Q).c()), SpecViolation);
}

TEST(ProductAlgebra, FailedHypothesisIsNamed) {
  const BialgebraData lam = gallery::exterior_line(Q);
  DoubleBraiding db = double_braiding(lam.algebra, lam.c);
  ProductAlgebraSpec spec = db.spec;
  spec.c12 = ExactMatrix::identity(Q, 8);
  try {
    product_algebra(spec, 1, 2);
    FAIL() << "expected SpecViolation";
  } catch (const SpecViolation& e) {
    EXPECT_NE(std::string(e.what()).find("[1,2]"), std::string::npos) << e.what();
  }
}

TEST(ProductAlgebra, FlipProductOfTwoAlgebras) {
  // Q[Z/2] ⊗ Λ(x) with flips everywhere is the ordinary tensor product.
  const AlgebraData a1 = gallery::group_algebra_z2(Q).algebra;
  const AlgebraData a2 = gallery::exterior_line(Q).algebra;
  ProductAlgebraSpec spec{a1, a2, gallery::flip(Q, 2).c(), gallery::flip(Q, 2).c(),
                          gallery::flip(Q, 2).c(), gallery::flip(Q, 2).c()};
  const BraidedAlgebra p = product_algebra(spec, 1, 2);
  const ExactMatrix id = ExactMatrix::identity(Q, 2);
  EXPECT_EQ(p.algebra.m,
            kron(a1.m, a2.m) * kron(kron(id, gallery::flip(Q, 2).c()), id));
  EXPECT_EQ(p.c, oracle::tuple_swap(Q, 2, 2, 2));
  EXPECT_TRUE(check_braided_algebra(p.algebra, p.c).passed());
}
