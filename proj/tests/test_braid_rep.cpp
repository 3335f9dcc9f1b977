#include <gtest/gtest.h>

#include <thread>

#include "braidkit/braid_rep.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/gallery.hpp"
#include "oracles.hpp"

using namespace braidkit;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);

}  // namespace

TEST(BraidRep, RejectsInvalidBraiding) {
  EXPECT_THROW(BraidRep(gallery::corrupted_flip(Q)), SpecViolation);
  EXPECT_THROW(BraidRep(gallery::q_scalar(Scalar(Q, 0))), SpecViolation);
}

TEST(BraidRep, TrivialBlocks) {
  const BraidedObject v = gallery::super(Q, {0, 1});
  const BraidRep rep(v);
  EXPECT_EQ(rep.block(1, 1), v.c());
  EXPECT_TRUE(rep.block(0, 3).is_identity());
  EXPECT_TRUE(rep.block(2, 0).is_identity());
  EXPECT_EQ(rep.block(0, 0), ExactMatrix::identity(Q, 1));
}

TEST(BraidRep, FlipIsTupleSwap) {
  for (std::size_t d = 1; d <= 3; ++d) {
    const BraidRep rep(gallery::flip(Q, d));
    for (std::size_t m = 0; m <= 3; ++m)
      for (std::size_t n = 0; m + n <= (d == 3 ? 4 : 5); ++n)
        EXPECT_EQ(rep.block(m, n), oracle::tuple_swap(Q, d, m, n)) << d << " " << m << "," << n;
  }
}

TEST(BraidRep, SuperIsSignedTupleSwap) {
  const std::vector<int> grading{1, 0};
  const BraidRep rep(gallery::super(F5, grading));
  for (std::size_t m = 0; m <= 3; ++m)
    for (std::size_t n = 0; m + n <= 5; ++n)
      EXPECT_EQ(rep.block(m, n), oracle::tuple_swap(F5, 2, m, n, grading)) << m << "," << n;
}

TEST(BraidRep, ScalarBraidingIsPowerOfQ) {
  for (const FieldSpec& f : {Q, F5}) {
    const Scalar q(f, 2);
    const BraidRep rep(gallery::q_scalar(q));
    for (std::size_t m = 0; m <= 4; ++m)
      for (std::size_t n = 0; n <= 4; ++n)
        EXPECT_EQ(rep.block(m, n).at(0, 0), q.pow(static_cast<long>(m * n)));
  }
}

TEST(BraidRep, AgreesWithMirroredSchedule) {
  for (const auto& [name, v] : gallery::braidings(2)) {
    const BraidRep rep(v);
    for (std::size_t m = 0; m <= 6; ++m)
      for (std::size_t n = 0; m + n <= 6; ++n)
        EXPECT_EQ(rep.block(m, n), cT_oracle(m, n, v)) << name << " " << m << "," << n;
  }
}

TEST(BraidRep, AgreesWithMirroredScheduleForNonSymmetricBraiding) {
  // A diagonal-type braiding with c² ≠ Id and q_ij ≠ q_ji.
  ExactMatrix c(Q, 4, 4);
  c.set(0, 0, Scalar(Q, 2));
  c.set(2, 1, Scalar(Q, 3));
  c.set(1, 2, Scalar(Q, -1, 5));
  c.set(3, 3, Scalar(Q, 7));
  const BraidedObject v(c);
  const BraidRep rep(v);
  EXPECT_FALSE((c * c).is_identity());
  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t n = 0; m + n <= 5; ++n) EXPECT_EQ(rep.block(m, n), cT_oracle(m, n, v));
}

TEST(BraidRep, InverseBraidingInvertsBlocks) {
  ExactMatrix c(F5, 4, 4);
  c.set(0, 0, Scalar(F5, 2));
  c.set(2, 1, Scalar(F5, 3));
  c.set(1, 2, Scalar(F5, 4));
  c.set(3, 3, Scalar(F5, 1));
  const BraidedObject v(c);
  const BraidRep rep(v), rep_inv{BraidedObject(v.c_inv())};
  for (std::size_t m = 0; m <= 3; ++m)
    for (std::size_t n = 0; m + n <= 5; ++n)
      EXPECT_TRUE((rep.block(m, n) * rep_inv.block(n, m)).is_identity()) << m << "," << n;
}

TEST(BraidRep, HexagonOnGallery) {
  for (const auto& [name, v] : gallery::braidings(2)) {
    const BraidRep rep(v);
    for (std::size_t l = 0; l <= 6; ++l)
      for (std::size_t m = 0; l + m <= 6; ++m)
        for (std::size_t n = 0; l + m + n <= 6; ++n)
          EXPECT_TRUE(check_hexagon(l, m, n, rep)) << name << " " << l << m << n;
  }
}

TEST(BraidRep, CTConvenienceMatchesRep) {
  const BraidedObject v = gallery::super(Q, {1});
  EXPECT_EQ(cT(2, 3, v), BraidRep(v).block(2, 3));
  EXPECT_THROW(cT(1, 1, gallery::corrupted_flip(Q)), SpecViolation);
}

TEST(BraidRep, ConcurrentLookupsAgree) {
  const BraidRep rep(gallery::super(Q, {0, 1}));
  std::vector<ExactMatrix> results(8);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < results.size(); ++t) {
    threads.emplace_back([&, t] { results[t] = rep.block(2 + t % 2, 2); });
  }
  for (auto& th : threads) th.join();
  for (std::size_t t = 0; t < results.size(); ++t) {
    EXPECT_EQ(results[t], oracle::tuple_swap(Q, 2, 2 + t % 2, 2, {0, 1}));
  }
}

TEST(TensorIdentity, Sizes) {
  EXPECT_EQ(tensor_identity(Q, 3, 0).rows(), 1U);
  EXPECT_EQ(tensor_identity(Q, 3, 2).rows(), 9U);
  EXPECT_TRUE(tensor_identity(F5, 2, 3).is_identity());
}
