#include "kacspec/charpoly.hpp"
#include "kacspec/symmfunc.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kacspec;

namespace {
std::vector<Integer> ints(std::initializer_list<long> values) { return {values.begin(), values.end()}; }
}  // namespace

TEST(TridiagonalMatrix, PlacesWeights) {
  const auto w = custom_weights(ints({2, 3}), ints({5, 7}));
  const IntegerMatrix m = tridiagonal_matrix(w);
  IntegerMatrix expected(3, 3);
  expected << 0, 5, 0,
              2, 0, 7,
              0, 3, 0;
  EXPECT_EQ(m, expected);
  EXPECT_EQ(tridiagonal_matrix<Integer>(w), oracle::tridiagonal(w));
}

TEST(CharpolyRecurrence, FrozenExamples) {
  // Values reproduced by charpoly_by_interpolation in the next test.
  EXPECT_EQ(charpoly_recurrence(kac_weights(1)).coeffs(), ints({1, -1}));
  EXPECT_EQ(charpoly_recurrence(kac_weights(2)).coeffs(), ints({1, -4}));
  EXPECT_EQ(charpoly_recurrence(kac_weights(3)).coeffs(), ints({1, -10, 9}));
  EXPECT_EQ(charpoly_recurrence(custom_weights(ints({0, 0}), ints({1, 1}))).coeffs(), ints({1, 0}));
  EXPECT_EQ(charpoly_recurrence(custom_weights(ints({2, 3}), ints({5, 7}))).coeffs(), ints({1, -31}));
}

TEST(CharpolyRecurrence, FrozenExamplesMatchInterpolationOracle) {
  EXPECT_EQ(oracle::charpoly_by_interpolation(kac_weights(1)), ints({-1, 0, 1}));
  EXPECT_EQ(oracle::charpoly_by_interpolation(kac_weights(2)), ints({0, -4, 0, 1}));
  EXPECT_EQ(oracle::charpoly_by_interpolation(kac_weights(3)), ints({9, 0, -10, 0, 1}));
  EXPECT_EQ(oracle::charpoly_by_interpolation(custom_weights(ints({0, 0}), ints({1, 1}))), ints({0, 0, 0, 1}));
  EXPECT_EQ(oracle::charpoly_by_interpolation(custom_weights(ints({2, 3}), ints({5, 7}))), ints({0, -31, 0, 1}));
}

TEST(CharpolyRecurrence, AgreesWithInterpolationOracleOnRandomWeights) {
  std::mt19937_64 rng(2024);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 15; ++trial) {
      const auto w = oracle::random_weights(rng, n, -9, 9);
      EXPECT_EQ(charpoly_recurrence(w).dense().coefficients(),
                IntegerPolynomial(oracle::charpoly_by_interpolation(w)).coefficients())
          << "n=" << n;
    }
  }
}

TEST(CharpolyRecurrence, SeedsCheckedAtSmallNAgainstOracle) {
  // n = 1 and n = 2 are where the seed convention chi_{-1} = 1, chi_0 = x matters.
  std::mt19937_64 rng(12);
  for (std::size_t n : {1u, 2u}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto w = oracle::random_weights(rng, n, -20, 20);
      EXPECT_EQ(charpoly_recurrence(w), charpoly_direct(w));
    }
  }
}

TEST(CharpolyDirect, FrozenExamples) {
  EXPECT_EQ(charpoly_direct(kac_weights(2)).coeffs(), ints({1, -4}));
  EXPECT_EQ(charpoly_direct(kac_weights(1)).coeffs(), ints({1, -1}));
  EXPECT_EQ(charpoly_direct(custom_weights(ints({2, 3}), ints({5, 7}))).coeffs(), ints({1, -31}));
}

TEST(CharpolyDirect, HandExpanded3x3) {
  // rows (x,-2,0), (-1,x,-1), (0,-2,x): x(x^2 - 2) + 2(-x) = x^3 - 4x
  const IntegerPolynomial x3_minus_4x{Integer(0), Integer(-4), Integer(0), Integer(1)};
  EXPECT_EQ(charpoly_direct_dense(kac_weights(2)), x3_minus_4x);
}

TEST(CharpolyDirect, CofactorMatchesInterpolationOnDenseMatrices) {
  // The cofactor engine is generic; check it on full matrices too.
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int size = 1; size <= 5; ++size) {
    IntegerMatrix m(size, size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) m(i, j) = dist(rng);
    const auto p = characteristic_polynomial_cofactor(m);
    EXPECT_EQ(p.degree(), size);
    for (int t = -3; t <= 3; ++t) {
      const IntegerMatrix shifted = IntegerMatrix::Identity(size, size) * Integer(t) - m;
      EXPECT_EQ(p(Integer(t)), oracle::leibniz_determinant(shifted));
    }
  }
}

TEST(CharpolyDirect, CapIsEnforced) {
  EXPECT_THROW(charpoly_direct(kac_weights(13)), CapExceeded);
  EXPECT_NO_THROW(charpoly_direct(kac_weights(12)));
  EXPECT_THROW(charpoly_direct(kac_weights(5), 4), CapExceeded);
}

TEST(CharpolyDirect, OracleEquivalenceOnRandomWeights) {
  std::mt19937_64 rng(31337);
  for (std::size_t n = 1; n <= 10; ++n) {
    EXPECT_EQ(charpoly_recurrence(kac_weights(n)), charpoly_direct(kac_weights(n)));
    for (int trial = 0; trial < 100; ++trial) {
      const auto w = oracle::random_weights(rng, n, -9, 9);
      ASSERT_EQ(charpoly_recurrence(w), charpoly_direct(w)) << "n=" << n << " trial=" << trial;
    }
  }
}

TEST(CharpolyDirect, OddParityCoefficientsVanish) {
  // The oracle returns the dense polynomial; the wrong-parity terms must be zero.
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto dense = charpoly_direct_dense(oracle::random_weights(rng, n, -9, 9));
    for (std::size_t power = 0; power <= n + 1; ++power) {
      if ((n + 1 - power) % 2 == 1) EXPECT_EQ(dense[power], 0) << "n=" << n << " power=" << power;
    }
  }
}

TEST(Coefficient, OutOfRangeIsZero) {
  const auto p = charpoly_recurrence(kac_weights(3));
  EXPECT_EQ(coefficient(p, 2), 9);
  EXPECT_EQ(coefficient(p, -1), 0);
  EXPECT_EQ(coefficient(p, 0), 1);
  EXPECT_EQ(coefficient(p, 3), 0);
  EXPECT_EQ(p.max_k(), 2u);
}

TEST(CharPolyType, RejectsMalformed) {
  EXPECT_THROW(CharPoly(0, ints({1})), std::invalid_argument);
  EXPECT_THROW(CharPoly(3, ints({1, 2})), std::invalid_argument);
  EXPECT_THROW(CharPoly(3, ints({2, 0, 0})), std::invalid_argument);
  EXPECT_THROW(CharPoly::from_dense(2, IntegerPolynomial{Integer(0), Integer(0), Integer(1), Integer(1)}),
               std::invalid_argument);
  EXPECT_THROW(CharPoly::from_dense(2, IntegerPolynomial{Integer(1), Integer(1)}), std::invalid_argument);
}

TEST(CharpolyProperties, SubsetSumEquivalenceWithNonnegativeWeights) {
  std::mt19937_64 rng(77);
  for (std::size_t n = 1; n <= 16; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto w = oracle::random_weights(rng, n, 0, 9);
      const auto p = charpoly_recurrence(w);
      for (std::int64_t k = 0; k <= static_cast<std::int64_t>(p.max_k()); ++k) {
        const Integer unsigned_sum = rhs_sum_enum(w, k);
        EXPECT_EQ(p.coefficient(k), (k % 2 == 0 ? unsigned_sum : -unsigned_sum)) << "n=" << n << " k=" << k;
        // Sign pattern for nonnegative products.
        if (p.coefficient(k) != 0) EXPECT_EQ(p.coefficient(k) > 0, k % 2 == 0);
      }
    }
  }
}

TEST(CharpolyProperties, EvaluationAtTwoMatchesBareiss) {
  std::mt19937_64 rng(4);
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto w = oracle::random_weights(rng, n, -9, 9);
    const auto size = static_cast<Eigen::Index>(n + 1);
    const IntegerMatrix shifted = IntegerMatrix::Identity(size, size) * Integer(2) - tridiagonal_matrix(w);
    EXPECT_EQ(charpoly_recurrence(w).dense()(Integer(2)), bareiss_determinant(shifted)) << "n=" << n;
  }
}

TEST(CharpolyProperties, FirstCoefficientIsMinusSumOfProducts) {
  std::mt19937_64 rng(8);
  for (std::size_t n = 1; n <= 30; ++n) {
    const auto w = oracle::random_weights(rng, n, -50, 50);
    Integer sum = 0;
    for (const auto& p : w.products()) sum += p;
    EXPECT_EQ(charpoly_recurrence(w).coefficient(1), -sum);
  }
}

TEST(Bareiss, MatchesLeibniz) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> dist(-6, 6);
  for (int size = 1; size <= 6; ++size) {
    for (int trial = 0; trial < 20; ++trial) {
      IntegerMatrix m(size, size);
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) m(i, j) = trial % 3 == 0 && dist(rng) > 0 ? 0 : dist(rng);
      EXPECT_EQ(bareiss_determinant(m), oracle::leibniz_determinant(m));
    }
  }
  EXPECT_THROW(bareiss_determinant(IntegerMatrix::Zero(2, 3)), std::invalid_argument);
}
