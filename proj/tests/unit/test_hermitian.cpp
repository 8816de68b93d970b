#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "antsel/hermitian.hpp"
#include "oracles.hpp"

namespace {

using namespace antsel;
using antsel::testing::cofactor_determinant;
using antsel::testing::power_iteration_lambda_max;
using antsel::testing::random_complex_matrix;
using antsel::testing::random_complex_vector;
using antsel::testing::random_pd;

double residual_ratio(const ComplexMatrix& m, const ComplexVector& x, const ComplexVector& b) {
  ComplexVector mx = m * x;
  for (std::size_t i = 0; i < mx.size(); ++i) mx[i] -= b[i];
  return std::sqrt(squared_norm(mx) / squared_norm(b));
}

TEST(LogdetPd, Identity) {
  EXPECT_DOUBLE_EQ(0.0, logdet_pd(HermitianPD(ComplexMatrix::identity(2))));
}

TEST(LogdetPd, Diagonal) {
  const double d[] = {2.0, 3.0};
  EXPECT_NEAR(std::log(6.0), logdet_pd(HermitianPD(ComplexMatrix::diagonal(d))), 1e-15);
}

TEST(LogdetPd, FixedThreeByTwoAgainstNumpy) {
  // ln det(I + H H^H), frozen from numpy.linalg.det.
  const ComplexMatrix h{{{1, 0.5}, {-0.3, 0.2}}, {{0.2, -1}, {0.7, 0.1}}, {{-0.4, 0.3}, {1.1, -0.6}}};
  EXPECT_NEAR(2.278210429852391, logdet_pd(HermitianPD(identity_plus_outer(h, 1.0))), 1e-13);
}

TEST(LogdetPd, MatchesCofactorExpansion) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const ComplexMatrix h = random_complex_matrix(n, 2, rng);
    const ComplexMatrix m = identity_plus_outer(h, 1.0);
    const Complex det = cofactor_determinant(m);
    EXPECT_NEAR(0.0, det.imag(), 1e-12);
    EXPECT_NEAR(std::log(det.real()), logdet_pd(HermitianPD(m)), 1e-12);
  }
}

TEST(LogdetPd, RejectsIndefiniteWithMinor) {
  const ComplexMatrix m{{1.0, 2.0}, {2.0, 1.0}};
  try {
    HermitianPD pd(m);
    FAIL() << "expected NotPositiveDefinite";
  } catch (const NotPositiveDefinite& e) {
    EXPECT_EQ(2u, e.minor());
    EXPECT_LT(e.pivot(), 0.0);
  }
}

TEST(LogdetPd, RejectsTinyPivot) {
  // Second pivot is 1e-14 relative to max diagonal 1: below the 1e-12 floor.
  const ComplexMatrix m{{1.0, 1.0}, {1.0, 1.0 + 1e-14}};
  EXPECT_THROW(HermitianPD{m}, NotPositiveDefinite);
}

TEST(LogdetPd, RejectsNonHermitianAndNonFinite) {
  EXPECT_THROW((HermitianPD{ComplexMatrix{{2.0, 1.0}, {0.5, 2.0}}}), std::invalid_argument);
  EXPECT_THROW((HermitianPD{ComplexMatrix{{Complex(2.0, 0.1)}}}), std::invalid_argument);
  EXPECT_THROW((HermitianPD{ComplexMatrix{{std::nan("")}}}), std::invalid_argument);
  EXPECT_THROW((HermitianPD{ComplexMatrix(2, 3)}), std::invalid_argument);
}

TEST(LogdetPd, DeterminantIdentityBothSides) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> dim(1, 16);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix a = random_complex_matrix(dim(rng), dim(rng), rng);
    const double lhs = logdet_pd(HermitianPD(identity_plus_outer(a, 1.0)));
    const double rhs = logdet_pd(HermitianPD(identity_plus_gram(a, 1.0)));
    EXPECT_NEAR(lhs, rhs, 1e-9);
  }
}

TEST(LogdetPd, PermutationInvariant) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const ComplexMatrix m = random_pd(n, 100.0, rng);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_NEAR(logdet_pd(HermitianPD(m)), logdet_pd(HermitianPD(m.principal_submatrix(perm))),
                1e-10);
  }
}

TEST(SolvePd, Identity) {
  const ComplexVector b{1.0, Complex(0, 2)};
  const ComplexVector x = solve_pd(HermitianPD(ComplexMatrix::identity(2)), b);
  EXPECT_EQ(b, x);
}

TEST(SolvePd, Diagonal) {
  const double d[] = {2.0, 4.0};
  const ComplexVector x = solve_pd(HermitianPD(ComplexMatrix::diagonal(d)), ComplexVector{2.0, 4.0});
  EXPECT_NEAR(1.0, x[0].real(), 1e-15);
  EXPECT_NEAR(1.0, x[1].real(), 1e-15);
}

TEST(SolvePd, DimensionMismatch) {
  EXPECT_THROW(solve_pd(HermitianPD(ComplexMatrix::identity(3)), ComplexVector{1.0, 2.0}),
               std::invalid_argument);
}

TEST(SolvePd, ResidualOnConditionedMatrices) {
  std::mt19937_64 rng(4);
  const double conditions[] = {1.0, 1e2, 1e4, 1e6};
  for (double cond : conditions) {
    for (std::size_t n : {1u, 2u, 4u, 8u, 16u}) {
      const ComplexMatrix m = random_pd(n, cond, rng);
      const ComplexVector b = random_complex_vector(n, rng);
      EXPECT_LE(residual_ratio(m, solve_pd(HermitianPD(m), b), b), 1e-10)
          << "n=" << n << " cond=" << cond;
    }
  }
}

TEST(CholeskyFactor, RankOneUpdateMatchesRefactorization) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const ComplexMatrix m = random_pd(n, 50.0, rng);
    const ComplexVector x = random_complex_vector(n, rng);
    CholeskyFactor updated = CholeskyFactor::factor(m);
    updated.rank_one_update(x);

    ComplexMatrix m2 = m;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m2(i, j) += x[i] * std::conj(x[j]);
    const CholeskyFactor direct = CholeskyFactor::factor(m2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        EXPECT_NEAR(0.0, std::abs(updated.lower()(i, j) - direct.lower()(i, j)), 1e-10);
  }
}

TEST(Rank1RayleighMax, Scalar) {
  const RayleighMax r = rank1_rayleigh_max(ComplexVector{1.0}, HermitianPD(ComplexMatrix{{3.0}}));
  EXPECT_NEAR(1.0 / 3.0, r.value, 1e-15);
  ASSERT_EQ(1u, r.argmax.size());
  EXPECT_NEAR(1.0 / 3.0, r.argmax[0].real(), 1e-15);
  EXPECT_FALSE(r.degenerate);
}

TEST(Rank1RayleighMax, IdentityB) {
  const RayleighMax r =
      rank1_rayleigh_max(ComplexVector{1.0, 1.0}, HermitianPD(ComplexMatrix::identity(2)));
  EXPECT_NEAR(2.0, r.value, 1e-15);
  EXPECT_EQ((ComplexVector{1.0, 1.0}), r.argmax);
}

TEST(Rank1RayleighMax, ZeroDeltaIsDegenerate) {
  const RayleighMax r =
      rank1_rayleigh_max(ComplexVector{0.0, 0.0}, HermitianPD(ComplexMatrix::identity(2)));
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(0.0, r.value);
  EXPECT_EQ((ComplexVector{0.0, 0.0}), r.argmax);
}

TEST(Rank1RayleighMax, MatchesPowerIterationAndQuotient) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix b = random_pd(5, 30.0, rng);
    const ComplexVector delta = random_complex_vector(5, rng);
    const RayleighMax r = rank1_rayleigh_max(delta, HermitianPD(b));
    EXPECT_NEAR(power_iteration_lambda_max(delta, b), r.value, 1e-8 * r.value);

    const double num = std::norm(dot(r.argmax, delta));
    const double den = dot(r.argmax, b * r.argmax).real();
    EXPECT_NEAR(r.value, num / den, 1e-10 * r.value);
  }
}

TEST(Rank1RayleighMax, ScalingLaws) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix b = random_pd(4, 10.0, rng);
    const ComplexVector delta = random_complex_vector(4, rng);
    const double base = rank1_rayleigh_max(delta, HermitianPD(b)).value;
    const Complex c(1.7, -0.4);
    ComplexVector scaled = delta;
    for (auto& z : scaled) z *= c;
    EXPECT_NEAR(std::norm(c) * base, rank1_rayleigh_max(scaled, HermitianPD(b)).value,
                1e-10 * std::norm(c) * base);
    const double s = 3.5;
    EXPECT_NEAR(base / s, rank1_rayleigh_max(delta, HermitianPD(s * b)).value, 1e-10 * base / s);
  }
}

TEST(GaussianEntropy, MatchesClosedForm) {
  const double d[] = {2.0, 3.0};
  const double expected = 0.5 * (2.0 * std::log(2.0 * std::numbers::pi * std::numbers::e) + std::log(6.0));
  EXPECT_NEAR(expected, gaussian_entropy(HermitianPD(ComplexMatrix::diagonal(d))), 1e-14);
}

}  // namespace
