#include <gtest/gtest.h>

#include "braidkit/errors.hpp"
#include "braidkit/gallery.hpp"
#include "braidkit/tensor_bialgebra.hpp"
#include "oracles.hpp"

using namespace braidkit;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);

// Δ_{k,n} by peeling the first tensor factor instead of the last:
// Δ(x·w) = (x⊗1 + 1⊗x)Δ(w), so
// Δ_{k,n} = V⊗Δ_{k-1,n-1} + (c^{1,k}⊗V^{⊗(n-1-k)})(V⊗Δ_{k,n-1}).
std::map<std::pair<std::size_t, std::size_t>, ExactMatrix> left_peel_coproduct(
    const BraidedObject& v, std::size_t N) {
  const BraidRep rep(v);
  const FieldSpec& f = v.field();
  const std::size_t d = v.dim();
  const ExactMatrix id = ExactMatrix::identity(f, d);
  std::map<std::pair<std::size_t, std::size_t>, ExactMatrix> out;
  out[{0, 0}] = ExactMatrix::identity(f, 1);
  for (std::size_t n = 1; n <= N; ++n) {
    const std::size_t size = out[{0, n - 1}].rows() * d;
    for (std::size_t k = 0; k <= n; ++k) {
      ExactMatrix block(f, size, size);
      if (k >= 1) block += kron(id, out[{k - 1, n - 1}]);
      if (k <= n - 1) {
        block += kron(rep.block(1, k), tensor_identity(f, d, n - 1 - k)) * kron(id, out[{k, n - 1}]);
      }
      out[{k, n}] = block;
    }
  }
  return out;
}

ExactMatrix diagonal_braiding(const FieldSpec& f) {
  ExactMatrix c(f, 4, 4);
  c.set(0, 0, Scalar(f, 2));
  c.set(2, 1, Scalar(f, 3));
  c.set(1, 2, Scalar(f, -1));
  c.set(3, 3, Scalar(f, 1));
  return c;
}

}  // namespace

TEST(TensorBialgebra, DegreeZeroIsUnit) {
  const auto t = TruncatedTensorBialgebra::build(gallery::flip(Q, 2), 3);
  EXPECT_EQ(t.delta(0, 0), ExactMatrix::identity(Q, 1));
  EXPECT_EQ(t.piece_dim(3), 8U);
  EXPECT_EQ(t.counit(0), ExactMatrix::identity(Q, 1));
  EXPECT_TRUE(t.counit(2).is_zero());
  EXPECT_EQ(t.counit(2).cols(), 4U);
}

TEST(TensorBialgebra, GeneratorsArePrimitive) {
  const auto t = TruncatedTensorBialgebra::build(gallery::super(Q, {0, 1}), 2);
  EXPECT_TRUE(t.delta(0, 1).is_identity());
  EXPECT_TRUE(t.delta(1, 1).is_identity());
}

TEST(TensorBialgebra, ScalarBraidingGivesGaussianBinomials) {
  for (const FieldSpec& f : {Q, F5}) {
    for (long qv : {1L, 2L, -1L, 3L}) {
      const Scalar q(f, qv);
      const auto t = TruncatedTensorBialgebra::build(gallery::q_scalar(q), 6);
      for (std::size_t n = 0; n <= 6; ++n)
        for (std::size_t k = 0; k <= n; ++k)
          EXPECT_EQ(t.delta(k, n).at(0, 0), oracle::gaussian_binomial(n, k, q))
              << f.to_string() << " q=" << qv << " [" << n << "," << k << "]";
    }
  }
}

TEST(TensorBialgebra, FlipGivesUnshuffleCounts) {
  // For the flip, Δ_{k,n}(e_0^{⊗n}) = binom(n,k) e_0^{⊗n}.
  const auto t = TruncatedTensorBialgebra::build(gallery::flip(Q, 2), 5);
  long binom = 1;
  for (std::size_t k = 0; k <= 5; ++k) {
    EXPECT_EQ(t.delta(k, 5).at(0, 0), Scalar(Q, binom));
    binom = binom * static_cast<long>(5 - k) / static_cast<long>(k + 1);
  }
}

TEST(TensorBialgebra, AgreesWithLeftPeelingOracle) {
  std::vector<BraidedObject> objects{gallery::flip(Q, 2), gallery::super(F5, {1, 1}),
                                     gallery::super(Q, {0, 1}), gallery::q_scalar(Scalar(F5, 2)),
                                     BraidedObject(diagonal_braiding(Q))};
  for (const BraidedObject& v : objects) {
    const auto t = TruncatedTensorBialgebra::build(v, 5);
    const auto expected = left_peel_coproduct(v, 5);
    for (const auto& [key, block] : expected) {
      EXPECT_EQ(t.delta(key.first, key.second), block) << key.first << "," << key.second;
    }
  }
}

TEST(TensorBialgebra, AxiomsHoldAtDegreeFour) {
  for (const BraidedObject& v : {gallery::flip(Q, 2), gallery::q_scalar(Scalar(F5, 2)),
                                 gallery::super(Q, {0, 1})}) {
    const AxiomReport r = check_truncated_axioms(TruncatedTensorBialgebra::build(v, 4));
    EXPECT_TRUE(r.passed()) << r.first_failure().value_or("");
    EXPECT_GT(r.checks().size(), 50U);
  }
}

TEST(TensorBialgebra, AxiomsHoldForNonSymmetricBraiding) {
  const AxiomReport r =
      check_truncated_axioms(TruncatedTensorBialgebra::build(BraidedObject(diagonal_braiding(Q)), 3));
  EXPECT_TRUE(r.passed()) << r.first_failure().value_or("");
}

TEST(TensorBialgebra, InjectedFaultIsDetected) {
  const auto t = TruncatedTensorBialgebra::build(gallery::flip(Q, 2), 4);
  for (auto [k, n] : {std::pair{1UL, 2UL}, std::pair{2UL, 3UL}, std::pair{1UL, 4UL}}) {
    ExactMatrix bad = t.delta(k, n);
    bad.set(0, 0, bad.at(0, 0) + Scalar::one(Q));
    const AxiomReport r = check_truncated_axioms(t.with_delta(k, n, bad));
    EXPECT_FALSE(r.passed()) << k << "," << n;
  }
}

TEST(TensorBialgebra, ErrorsAreTyped) {
  const BraidedObject v = gallery::flip(Q, 2);
  EXPECT_THROW(TruncatedTensorBialgebra::build(v, 0), BadTruncation);
  EXPECT_THROW(TruncatedTensorBialgebra::build(gallery::corrupted_flip(Q), 2), SpecViolation);
  const auto t = TruncatedTensorBialgebra::build(v, 3);
  EXPECT_THROW(t.delta(1, 4), BadDegree);
  EXPECT_THROW(t.delta(3, 2), BadDegree);
  EXPECT_THROW(t.product_block(2, 2), TruncationOverflow);
  EXPECT_THROW(t.global_braiding_block(4, 0), BadDegree);
  EXPECT_THROW(t.with_delta(1, 2, ExactMatrix::identity(Q, 2)), ShapeError);

  auto blocks = t.delta_blocks();
  blocks.erase({1, 3});
  EXPECT_THROW(TruncatedTensorBialgebra::from_blocks(v, 3, blocks), ShapeError);
}

TEST(TensorBialgebra, FromBlocksRoundTrip) {
  const BraidedObject v = gallery::super(F5, {0, 1});
  const auto t = TruncatedTensorBialgebra::build(v, 3);
  const auto again = TruncatedTensorBialgebra::from_blocks(v, 3, t.delta_blocks());
  EXPECT_TRUE(check_truncated_axioms(again).passed());
  EXPECT_EQ(again.delta_blocks(), t.delta_blocks());
}

TEST(TensorBialgebra, MultiplicationIsConcatenation) {
  const auto t = TruncatedTensorBialgebra::build(gallery::flip(Q, 2), 3);
  const ExactMatrix e0 = ExactMatrix::unit_column(Q, 2, 0);
  const ExactMatrix e1 = ExactMatrix::unit_column(Q, 2, 1);
  const ExactMatrix w = t.multiply(e1, 1, kron(e0, e1), 2);
  EXPECT_EQ(w, ExactMatrix::unit_column(Q, 8, 0b101));
  EXPECT_EQ(t.multiply(t.unit(), 0, e1, 1), e1);
  EXPECT_TRUE(t.product_block(1, 2).is_identity());
}
