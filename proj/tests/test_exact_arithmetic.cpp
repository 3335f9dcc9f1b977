#include <gtest/gtest.h>

#include <random>

#include "braidkit/errors.hpp"
#include "braidkit/matrix.hpp"
#include "oracles.hpp"

using namespace braidkit;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);

}  // namespace

TEST(FieldSpec, ParsesShortForms) {
  EXPECT_EQ(FieldSpec::parse("q"), Q);
  EXPECT_EQ(FieldSpec::parse("fp:5"), F5);
  EXPECT_EQ(F5.to_string(), "fp:5");
  EXPECT_EQ(Q.to_string(), "q");
}

TEST(FieldSpec, RejectsComposite) {
  EXPECT_THROW(FieldSpec::prime(6), NotPrime);
  EXPECT_THROW(FieldSpec::prime(1), NotPrime);
  EXPECT_THROW(FieldSpec::parse("fp:9"), NotPrime);
  EXPECT_THROW(FieldSpec::parse("real"), ParseError);
  EXPECT_NO_THROW(FieldSpec::prime(4294967291ULL));
}

TEST(Scalar, RationalsAreReduced) {
  const Scalar a(Q, 6, -4);
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ(Scalar::parse(Q, "10/4").to_string(), "5/2");
  EXPECT_EQ(Scalar::parse(Q, "-8/4").to_string(), "-2");
  EXPECT_EQ((Scalar(Q, 1, 6) + Scalar(Q, 1, 3)).to_string(), "1/2");
}

TEST(Scalar, ReductionSurvivesRandomProducts) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(-40, 40);
  for (int trial = 0; trial < 200; ++trial) {
    long d1 = dist(rng), d2 = dist(rng);
    if (d1 == 0) d1 = 7;
    if (d2 == 0) d2 = -3;
    const Scalar s = Scalar(Q, dist(rng), d1) * Scalar(Q, dist(rng), d2) + Scalar(Q, 1, d1);
    const mpq_class& v = s.rational();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    EXPECT_EQ(g, 1);
    EXPECT_GT(v.get_den(), 0);
  }
}

TEST(Scalar, PrimeFieldArithmetic) {
  const Scalar two(F5, 2);
  EXPECT_EQ(two.inverse().to_string(), "3");
  EXPECT_EQ(Scalar(F5, -1).to_string(), "4");
  EXPECT_EQ(Scalar::parse(F5, "1/2").to_string(), "3");
  EXPECT_EQ(two.pow(4).to_string(), "1");
  EXPECT_EQ(two.pow(-1), two.inverse());
  EXPECT_THROW(Scalar::zero(F5).inverse(), NotInvertible);
  EXPECT_THROW(Scalar::parse(F5, "1/5"), NotInvertible);
}

TEST(Scalar, MixingFieldsThrows) {
  EXPECT_THROW(Scalar(Q, 1) + Scalar(F5, 1), FieldMismatch);
  EXPECT_THROW(ExactMatrix::identity(Q, 2) * ExactMatrix::identity(F5, 2), FieldMismatch);
}

TEST(ExactMatrix, ShapesAreChecked) {
  EXPECT_THROW(ExactMatrix::identity(Q, 2) * ExactMatrix::identity(Q, 3), ShapeError);
  EXPECT_THROW(inverse(ExactMatrix(Q, 2, 3)), ShapeError);
}

TEST(ExactMatrix, ProductMatchesSchoolbook) {
  std::mt19937_64 rng(1);
  for (const FieldSpec& f : {Q, F5}) {
    for (int trial = 0; trial < 20; ++trial) {
      const ExactMatrix a = oracle::random_matrix(f, 4, 5, rng, 3, 4);
      const ExactMatrix b = oracle::random_matrix(f, 5, 3, rng, 3, 4);
      EXPECT_EQ(a * b, oracle::naive_product(a, b));
    }
  }
}

TEST(ExactMatrix, KronIndexConvention) {
  const ExactMatrix a = ExactMatrix::from_ints(Q, {{1, 2}, {3, 4}});
  const ExactMatrix b = ExactMatrix::from_ints(Q, {{0, 5}, {6, 7}});
  const ExactMatrix k = kron(a, b);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t s = 0; s < 2; ++s)
          EXPECT_EQ(k.at(i * 2 + r, j * 2 + s), a.at(i, j) * b.at(r, s));
}

TEST(ExactMatrix, KronIsAssociative) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const ExactMatrix a = oracle::random_matrix(Q, 2, 3, rng);
    const ExactMatrix b = oracle::random_matrix(Q, 3, 1, rng);
    const ExactMatrix c = oracle::random_matrix(Q, 2, 2, rng);
    EXPECT_EQ(kron(kron(a, b), c), kron(a, kron(b, c)));
  }
}

TEST(ExactMatrix, KronPowerZeroIsScalarOne) {
  EXPECT_EQ(kron_power(ExactMatrix::identity(Q, 3), 0), ExactMatrix::identity(Q, 1));
}

TEST(Rref, AgreesWithNaiveElimination) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    ExactMatrix m = oracle::random_matrix(Q, rows, cols, rng, 4, 3);
    if (trial % 3 == 0 && rows > 1) {
      // Force a dependent row.
      for (std::size_t c = 0; c < cols; ++c) m.set(rows - 1, c, m.at(0, c) * Scalar(Q, 2, 3));
    }
    std::vector<std::size_t> pivots;
    const oracle::Rows expected = oracle::naive_rref(oracle::to_rows(m), &pivots);
    const Rref r = rref(m);
    EXPECT_EQ(r.matrix, oracle::from_rows(expected, cols));
    EXPECT_EQ(r.pivots, pivots);
  }
}

TEST(Nullspace, SmallExamples) {
  EXPECT_EQ(nullspace(ExactMatrix::from_ints(Q, {{1, 1}})), ExactMatrix::from_ints(Q, {{1}, {-1}}));
  EXPECT_EQ(nullspace(ExactMatrix::identity(Q, 3)).cols(), 0U);
  EXPECT_EQ(nullspace(ExactMatrix::identity(Q, 3)).rows(), 3U);
  EXPECT_EQ(nullspace(ExactMatrix(Q, 0, 2)), ExactMatrix::identity(Q, 2));
}

TEST(Nullspace, MatchesOracleAndRankNullity) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 7;
    const ExactMatrix m = oracle::random_matrix(Q, rows, cols, rng, 2, 4);
    const ExactMatrix k = nullspace(m);
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(rank(m) + k.cols(), cols);
    EXPECT_EQ(k, oracle::naive_nullspace(m));
  }
}

TEST(Nullspace, CanonicalUnderRowOperations) {
  std::mt19937_64 rng(5);
  for (const FieldSpec& f : {Q, F5}) {
    for (int trial = 0; trial < 20; ++trial) {
      const ExactMatrix m = oracle::random_matrix(f, 3, 6, rng);
      ExactMatrix g = oracle::random_matrix(f, 3, 3, rng);
      while (!is_invertible(g)) g = oracle::random_matrix(f, 3, 3, rng);
      EXPECT_EQ(nullspace(g * m), nullspace(m));
    }
  }
}

TEST(Inverse, RoundTrip) {
  std::mt19937_64 rng(6);
  for (const FieldSpec& f : {Q, F5}) {
    int found = 0;
    while (found < 15) {
      const ExactMatrix m = oracle::random_matrix(f, 4, 4, rng);
      if (!is_invertible(m)) {
        EXPECT_THROW(inverse(m), NotInvertible);
        continue;
      }
      ++found;
      EXPECT_TRUE((m * inverse(m)).is_identity());
      EXPECT_TRUE((inverse(m) * m).is_identity());
    }
  }
}

TEST(Inverse, SingularThrows) {
  EXPECT_THROW(inverse(ExactMatrix::from_ints(Q, {{1, 2}, {2, 4}})), NotInvertible);
  EXPECT_THROW(inverse(ExactMatrix::from_ints(F5, {{1, 2}, {3, 1}})), NotInvertible);
}

TEST(SolveInjective, RecoversCoefficients) {
  const ExactMatrix a = ExactMatrix::from_ints(Q, {{1, 0}, {1, 1}, {0, 2}});
  const ExactMatrix x = ExactMatrix::from_ints(Q, {{3}, {-1}});
  auto solved = solve_injective(a, a * x);
  ASSERT_TRUE(solved);
  EXPECT_EQ(*solved, x);
  EXPECT_FALSE(solve_injective(a, ExactMatrix::from_ints(Q, {{1}, {0}, {0}})));
  EXPECT_THROW(solve_injective(ExactMatrix::from_ints(Q, {{1, 1}}), ExactMatrix::from_ints(Q, {{1}})),
               ShapeError);
}

TEST(FirstDifference, LocatesRowMajorFirst) {
  ExactMatrix a = ExactMatrix::identity(Q, 3);
  ExactMatrix b = a;
  b.set(2, 0, Scalar(Q, 1));
  b.set(1, 2, Scalar(Q, 1));
  auto d = first_difference(a, b);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->row, 1U);
  EXPECT_EQ(d->col, 2U);
  EXPECT_FALSE(first_difference(a, a));
}
