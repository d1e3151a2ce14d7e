#include <gtest/gtest.h>

#include <cmath>

#include "nckernel/error.hpp"
#include "nckernel/linalg.hpp"
#include "nckernel/matrix.hpp"
#include "nckernel/random.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace nckernel;

using testutil::error_kind;

TEST(Kron, Examples) {
  const ComplexMatrix a{{1, 2}, {3, Complex(0, 4)}};
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  const ComplexMatrix bd = kron(i2, a);
  EXPECT_EQ(bd.block(0, 0, 2, 2), a);
  EXPECT_EQ(bd.block(2, 2, 2, 2), a);
  EXPECT_EQ(max_abs(bd.block(0, 2, 2, 2)), 0.0);
  EXPECT_EQ(kron(a, ComplexMatrix::identity(1)), a);
  EXPECT_EQ(kron(ComplexMatrix{{0, 1}, {0, 0}}, ComplexMatrix{{2}}), (ComplexMatrix{{0, 2}, {0, 0}}));
}

TEST(Kron, SizeCap) {
  const ComplexMatrix a(100, 100);
  EXPECT_EQ(error_kind([&] { kron(a, a, 1000); }), ErrorKind::SizeCap);
}

TEST(Kron, MatchesOracleAndMixedProduct) {
  Rng rng(3);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t r1 = 1 + rep % 3, c1 = 1 + rep % 4, r2 = 1 + rep % 2, c2 = 1 + rep % 3;
    const auto a = random_matrix(rng, r1, c1);
    const auto b = random_matrix(rng, r2, c2);
    const auto c = random_matrix(rng, c1, 2);
    const auto d = random_matrix(rng, c2, 3);
    const auto e = random_matrix(rng, 2, 2);
    EXPECT_LE(oracle::max_abs_diff(kron(a, b), oracle::kron(a, b)), 1e-14 * std::max(1.0, oracle::max_abs(a) * oracle::max_abs(b)));
    const auto lhs = multiply(kron(a, b), kron(c, d));
    const auto rhs = kron(multiply(a, c), multiply(b, d));
    EXPECT_LE(max_abs(lhs - rhs), 1e-12 * std::max(1.0, max_abs(lhs)));
    const auto assoc1 = kron(kron(a, b), e);
    const auto assoc2 = kron(a, kron(b, e));
    EXPECT_LE(max_abs(assoc1 - assoc2), 1e-12 * std::max(1.0, max_abs(assoc1)));
  }
}

TEST(Matrix, MultiplyAndAdjointProductMatchOracle) {
  Rng rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const auto a = random_matrix(rng, 1 + rep % 5, 1 + rep % 7);
    const auto b = random_matrix(rng, a.cols(), 1 + rep % 3);
    const auto c = random_matrix(rng, 1 + rep % 4, a.cols());
    EXPECT_LE(oracle::max_abs_diff(multiply(a, b), oracle::multiply(a, b)), 1e-12);
    EXPECT_LE(oracle::max_abs_diff(multiply_adjoint(a, c), oracle::multiply(a, oracle::adjoint(c))),
              1e-12);
  }
  EXPECT_EQ(error_kind([] { multiply(ComplexMatrix(2, 3), ComplexMatrix(2, 3)); }),
            ErrorKind::DimensionMismatch);
}

TEST(HermitianMinEig, Examples) {
  auto r = hermitian_min_eig(ComplexMatrix::identity(3), 1e-10);
  EXPECT_NEAR(r.min_eigenvalue, 1.0, 1e-15);
  EXPECT_TRUE(r.is_psd);

  const double d[] = {1.0, -1.0};
  r = hermitian_min_eig(ComplexMatrix::diagonal(d), 1e-10);
  EXPECT_NEAR(r.min_eigenvalue, -1.0, 1e-15);
  EXPECT_FALSE(r.is_psd);

  r = hermitian_min_eig(ComplexMatrix{{1, 1}, {1, 0.75}}, 1e-10);
  EXPECT_NEAR(r.min_eigenvalue, oracle::min_eig_2x2(1.0, 1.0, 0.75), 1e-14);
  EXPECT_NEAR(r.min_eigenvalue, -0.13278, 1e-5);
  EXPECT_FALSE(r.is_psd);
}

TEST(HermitianMinEig, Errors) {
  EXPECT_EQ(error_kind([] { hermitian_min_eig(ComplexMatrix(2, 3)); }), ErrorKind::NotSquare);
  EXPECT_EQ(error_kind([] { hermitian_min_eig(ComplexMatrix{{1, 1}, {0, 1}}); }),
            ErrorKind::NotHermitian);
  ComplexMatrix bad{{1, 0}, {0, 1}};
  bad(0, 0) = std::nan("");
  EXPECT_EQ(error_kind([&] { hermitian_min_eig(bad); }), ErrorKind::NonFinite);
}

TEST(HermitianMinEig, ReportsAsymmetryWithinTolerance) {
  ComplexMatrix m{{2, Complex(1, 1e-12)}, {Complex(1, 0), 2}};
  const auto r = hermitian_min_eig(m, 1e-9);
  EXPECT_GT(r.asymmetry, 0.0);
  EXPECT_NEAR(r.min_eigenvalue, 1.0, 1e-11);
}

TEST(HermitianMinEig, GramOfRandomFactorIsPsd) {
  Rng rng(17);
  for (int rep = 0; rep < 50; ++rep) {
    const auto g = random_matrix(rng, 1 + rep % 12, 1 + rep % 5);
    const auto m = multiply_adjoint(g, g);
    EXPECT_GE(hermitian_min_eig(m).min_eigenvalue, -1e-11 * max_abs(m));
  }
}

TEST(PsdFactor, Examples) {
  auto f = psd_factor(ComplexMatrix::identity(3));
  EXPECT_EQ(f.rank, 3u);
  EXPECT_LE(max_abs(multiply_adjoint(f.factor, f.factor) - ComplexMatrix::identity(3)), 1e-14);

  f = psd_factor(ComplexMatrix{{1, 1}, {1, 1}});
  EXPECT_EQ(f.rank, 1u);
  ASSERT_EQ(f.factor.cols(), 1u);
  // Up to a unit phase the column is [1; 1].
  EXPECT_NEAR(std::abs(f.factor(0, 0)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(f.factor(0, 0) - f.factor(1, 0)), 0.0, 1e-14);

  const double d[] = {1.0, -1.0};
  EXPECT_EQ(error_kind([&] { psd_factor(ComplexMatrix::diagonal(d)); }), ErrorKind::NotPsd);

  f = psd_factor(ComplexMatrix(4, 4));
  EXPECT_EQ(f.rank, 0u);
  EXPECT_EQ(f.factor.rows(), 4u);
}

TEST(PsdFactor, ReconstructsRandomPsdMatrices) {
  Rng rng(23);
  std::uniform_int_distribution<std::size_t> size(1, 40);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = size(rng);
    const std::size_t k = 1 + rep % n;
    const auto g = random_matrix(rng, n, k);
    const auto m = multiply_adjoint(g, g);
    const auto f = psd_factor(m);
    EXPECT_EQ(f.factor.cols(), f.rank);
    EXPECT_LE(f.rank, k);
    EXPECT_LE(max_abs(m - multiply_adjoint(f.factor, f.factor)) / max_abs(m), 1e-10);
  }
}

TEST(PsdFactor, ClipsBoundaryEigenvalues) {
  // diag(1, 1e-12, -1e-12): both small eigenvalues sit inside the tolerance band.
  const double d[] = {1.0, 1e-12, -1e-12};
  const auto f = psd_factor(ComplexMatrix::diagonal(d), 1e-9);
  EXPECT_EQ(f.rank, 1u);
}

TEST(Linalg, RangeBasisAndNorms) {
  ComplexMatrix m{{1, 0}, {0, 0}, {0, 0}};
  EXPECT_EQ(range_basis(m, 1e-10).cols(), 1u);
  EXPECT_EQ(range_basis(ComplexMatrix(3, 2), 1e-10).cols(), 0u);
  EXPECT_NEAR(spectral_norm(ComplexMatrix{{3, 0}, {0, 4}}), 4.0, 1e-14);
}
