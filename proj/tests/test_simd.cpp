#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "nckernel/matrix.hpp"
#include "nckernel/random.hpp"
#include "nckernel/simd/kernels.hpp"

using namespace nckernel;

namespace {

std::vector<double> random_array(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> d;
  std::vector<double> v(2 * n);
  for (auto& x : v) x = d(rng);
  return v;
}

const simd::KernelTable* vector_table() {
  if (!simd::cpu_supports(simd::Backend::Avx2)) return nullptr;
  return simd::avx2_kernels();
}

// Restores the process-wide backend after a test switches it.
struct BackendGuard {
  simd::Backend saved = simd::active().backend;
  ~BackendGuard() { simd::select(saved); }
};

}  // namespace

TEST(Simd, ScalarCaxpyMatchesComplexArithmetic) {
  const auto& s = simd::scalar_kernels();
  std::vector<Complex> x = {{1, 2}, {-3, 0.5}};
  std::vector<Complex> y = {{0, 1}, {2, 2}};
  const Complex a{0.5, -1.5};
  s.caxpy(2, a.real(), a.imag(), reinterpret_cast<const double*>(x.data()),
          reinterpret_cast<double*>(y.data()));
  EXPECT_EQ(y[0], Complex(0, 1) + a * Complex(1, 2));
  EXPECT_EQ(y[1], Complex(2, 2) + a * Complex(-3, 0.5));
}

TEST(Simd, VectorKernelsMatchScalarReference) {
  const auto* v = vector_table();
  if (!v) GTEST_SKIP() << "no vector backend on this CPU/build";
  const auto& s = simd::scalar_kernels();
  std::mt19937_64 rng(7);
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 31u, 64u, 129u}) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto x = random_array(rng, n);
      const auto y0 = random_array(rng, n);
      auto ys = y0;
      auto yv = y0;
      s.caxpy(n, 0.7, -1.3, x.data(), ys.data());
      v->caxpy(n, 0.7, -1.3, x.data(), yv.data());
      for (std::size_t i = 0; i < 2 * n; ++i) {
        EXPECT_NEAR(ys[i], yv[i], 1e-14 * (1.0 + std::abs(ys[i]))) << "n=" << n;
      }
      double sr = 0, si = 0, vr = 0, vi = 0;
      s.dot_conj(n, x.data(), y0.data(), &sr, &si);
      v->dot_conj(n, x.data(), y0.data(), &vr, &vi);
      const double scale = 1.0 + static_cast<double>(n);
      EXPECT_NEAR(sr, vr, 1e-13 * scale) << "n=" << n;
      EXPECT_NEAR(si, vi, 1e-13 * scale) << "n=" << n;
    }
  }
}

TEST(Simd, MatrixOperationsAgreeAcrossBackends) {
  if (!vector_table()) GTEST_SKIP() << "no vector backend on this CPU/build";
  BackendGuard guard;
  Rng rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t r = 1 + rep % 7;
    const std::size_t k = 1 + (rep * 3) % 9;
    const std::size_t c = 1 + (rep * 5) % 6;
    const auto a = random_matrix(rng, r, k);
    const auto b = random_matrix(rng, k, c);
    const auto bt = random_matrix(rng, c, k);
    simd::select(simd::Backend::Scalar);
    const auto ms = multiply(a, b);
    const auto hs = multiply_adjoint(a, bt);
    const auto ks = kron(a, b);
    simd::select(simd::Backend::Avx2);
    const auto mv = multiply(a, b);
    const auto hv = multiply_adjoint(a, bt);
    const auto kv = kron(a, b);
    EXPECT_LE(max_abs(ms - mv), 1e-13);
    EXPECT_LE(max_abs(hs - hv), 1e-13);
    EXPECT_LE(max_abs(ks - kv), 1e-13);
  }
}

TEST(Simd, BackendSelection) {
  BackendGuard guard;
  EXPECT_TRUE(simd::cpu_supports(simd::Backend::Scalar));
  simd::select(simd::Backend::Scalar);
  EXPECT_EQ(simd::active().backend, simd::Backend::Scalar);
  EXPECT_EQ(simd::parse_backend("avx2"), simd::Backend::Avx2);
  EXPECT_FALSE(simd::parse_backend("sse9").has_value());
  EXPECT_EQ(simd::name(simd::Backend::Scalar), "scalar");
}
