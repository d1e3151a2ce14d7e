#include <gtest/gtest.h>

#include <vector>

#include "fixtures.hpp"
#include "nckernel/certificates.hpp"
#include "nckernel/evaluation.hpp"
#include "nckernel/linalg.hpp"
#include "nckernel/parse.hpp"
#include "nckernel/random.hpp"
#include "nckernel/witnesses.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace nckernel;
using testutil::error_kind;

namespace {

NCPolynomial one_plus_z() {
  NCPolynomial h(1, 1, 1);
  h.add(Word{}, ComplexMatrix{{1}});
  h.add(Word{1}, ComplexMatrix{{1}});
  return h;
}

}  // namespace

TEST(Gram, Examples) {
  auto g = gram_matrix(parse_kernel("1 - z1*z1'", 1));
  EXPECT_EQ(g.word_index, (std::vector<Word>{Word{}, Word{1}}));
  EXPECT_EQ(g.matrix, (ComplexMatrix{{1, 0}, {0, -1}}));

  g = gram_matrix(parse_kernel("1 + z1*z1' + z2*z2'", 2));
  EXPECT_EQ(g.matrix, ComplexMatrix::identity(3));

  g = gram_matrix(kernel_from_factor(one_plus_z()));
  EXPECT_EQ(g.matrix, (ComplexMatrix{{1, 1}, {1, 1}}));
}

TEST(Gram, BlocksFollowWordIndex) {
  Rng rng(1);
  const auto k = fixtures::random_positive_kernel(rng, 2, 2, 2, 3);
  const auto g = gram_matrix(k);
  ASSERT_EQ(g.word_index.size(), 7u);
  EXPECT_EQ(g.matrix.rows(), 14u);
  for (std::size_t i = 0; i < g.word_index.size(); ++i)
    for (std::size_t j = 0; j < g.word_index.size(); ++j)
      EXPECT_EQ(g.matrix.block(2 * i, 2 * j, 2, 2), k.coefficient(g.word_index[i], g.word_index[j]));
  EXPECT_LE(hermitian_defect(g.matrix), 1e-10 * max_abs(g.matrix));
}

TEST(Gram, RejectsNonHermitian) {
  HereditaryKernel k(1, 1, 1);
  k.add(Word{}, Word{1}, Complex(1.0));
  EXPECT_EQ(error_kind([&] { gram_matrix(k); }), ErrorKind::NotHermitian);
  EXPECT_EQ(error_kind([&] { check_nc_positivity(k); }), ErrorKind::NotHermitian);
}

TEST(Gram, WindowWiderThanSupport) {
  const auto k = parse_kernel("1", 2).with_degree_bound(2);
  const auto g = gram_matrix(k);
  EXPECT_EQ(g.matrix.rows(), 7u);
  EXPECT_EQ(max_abs(g.matrix), 1.0);
  const auto back = kernel_from_gram(g.matrix, 2, 1, 2);
  EXPECT_EQ(back.entries().size(), 1u);
}

TEST(CheckPositivity, Examples) {
  auto c = check_nc_positivity(parse_kernel("1 - z1*z1'", 1));
  EXPECT_EQ(c.verdict, Verdict::NotPositive);
  EXPECT_NEAR(c.min_gram_eigenvalue, -1.0, 1e-15);
  EXPECT_FALSE(c.factor.has_value());

  c = check_nc_positivity(parse_kernel("1 + z1*z1' + z2*z2'", 2));
  EXPECT_EQ(c.verdict, Verdict::PositiveKernel);
  EXPECT_EQ(c.inner_dimension, std::optional<std::size_t>(3));
  EXPECT_EQ(*c.inner_dimension, factor_dimension_bound(parse_kernel("1 + z1*z1' + z2*z2'", 2)));

  c = check_nc_positivity(HereditaryKernel(2, 1, 1));
  EXPECT_EQ(c.verdict, Verdict::PositiveKernel);
  EXPECT_EQ(c.inner_dimension, std::optional<std::size_t>(0));
  ASSERT_TRUE(c.factor.has_value());
  EXPECT_TRUE(c.factor->entries().empty());
}

TEST(Factor, Examples) {
  const auto k = kernel_from_factor(one_plus_z());
  const auto h = factor_kernel(k);
  EXPECT_EQ(h.inner(), 1u);
  EXPECT_LE(residual(k, h), 1e-12);
  const auto back = kernel_from_factor(h);
  for (const auto& [key, c] : k.entries()) EXPECT_LE(max_abs(back.coefficient(key.first, key.second) - c), 1e-12);

  const auto id = parse_kernel("1 + z1*z1' + z2*z2'", 2);
  const auto hid = factor_kernel(id);
  EXPECT_EQ(hid.inner(), 3u);
  EXPECT_LE(residual(id, hid), 1e-12);

  EXPECT_EQ(error_kind([] { factor_kernel(parse_kernel("1 - z1*z1'", 1)); }), ErrorKind::NotPsd);
}

TEST(Residual, Examples) {
  Rng rng(2);
  const auto h = random_polynomial(rng, 2, 2, 2, 3);
  EXPECT_LE(residual(kernel_from_factor(h), h), 1e-13 * std::max(1.0, max_abs(kernel_from_factor(h))));

  const auto k = parse_kernel("1 - 2*z1*z1'", 1);
  EXPECT_EQ(residual(k, NCPolynomial(1, 1, 1)), 2.0);

  NCPolynomial one(1, 1, 1);
  one.add(Word{}, ComplexMatrix{{1}});
  EXPECT_EQ(residual(parse_kernel("1 - z1*z1'", 1), one), 1.0);

  EXPECT_EQ(error_kind([&] { residual(k, NCPolynomial(1, 2, 1)); }), ErrorKind::DimensionMismatch);
}

TEST(Certificates, RoundTripAndDimensionBound) {
  Rng rng(3);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t arity = 1 + rep % 3, m = rep % 3, p = 1 + rep % 2;
    std::uniform_int_distribution<std::size_t> inner(1, 6);
    const auto k = fixtures::random_positive_kernel(rng, arity, m, p, inner(rng));
    const auto c = check_nc_positivity(k);
    ASSERT_EQ(c.verdict, Verdict::PositiveKernel);
    EXPECT_GE(c.min_gram_eigenvalue, -1e-10);
    ASSERT_TRUE(c.factor && c.residual && c.inner_dimension);
    EXPECT_LE(*c.inner_dimension, factor_dimension_bound(k));
    EXPECT_EQ(*c.inner_dimension, c.factor->inner());
    EXPECT_LE(*c.residual, 1e-10 * c.gram_scale);
    EXPECT_LE(residual(k, *c.factor), 1e-10 * c.gram_scale);
  }
}

TEST(Certificates, IdentityGramSaturatesBound) {
  for (std::size_t arity = 1; arity <= 3; ++arity)
    for (std::size_t m = 0; m <= 2; ++m)
      for (std::size_t p = 1; p <= 2; ++p) {
        const auto words = enumerate_words(arity, m);
        const auto k = kernel_from_gram(ComplexMatrix::identity(p * words.size()), arity, p, m);
        const auto c = check_nc_positivity(k);
        EXPECT_EQ(*c.inner_dimension, factor_dimension_bound(k));
        EXPECT_EQ(*c.inner_dimension, p * words.size());
      }
}

TEST(Certificates, SoundnessOnNilpotentPoints) {
  Rng rng(4);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t arity = 1 + rep % 3, m = rep % 3, p = 1 + rep % 2;
    const auto k = fixtures::random_positive_kernel(rng, arity, m, p, 2);
    ASSERT_EQ(check_nc_positivity(k).verdict, Verdict::PositiveKernel);
    std::uniform_int_distribution<std::size_t> size(1, 6), count(1, 4);
    for (int t = 0; t < 50; ++t) {
      const std::size_t n = size(rng);
      std::vector<MatrixTuple> points;
      const std::size_t l = count(rng);
      for (std::size_t j = 0; j < l; ++j) points.push_back(random_strictly_upper_tuple(rng, arity, n));
      const auto block = block_eval_matrix(k, points);
      EXPECT_GE(hermitian_min_eig(block).min_eigenvalue, -1e-8 * std::max(1.0, max_abs(block)));
    }
  }
}

// The first-order correction to the shift expansion is bounded by |G| / s, so
// a grid reaching s_max resolves Gram eigenvalues -delta with
// delta * s_max >= 10 |G|.
TEST(Certificates, CompletenessThroughShiftWitness) {
  Rng rng(5);
  std::uniform_real_distribution<double> log_delta(-6.0, 0.0);
  int checked = 0;
  for (int rep = 0; rep < 600; ++rep) {
    const std::size_t arity = 1 + rep % 2, m = (rep / 2) % 3, p = 1 + (rep / 6) % 2;
    const double delta = std::pow(10.0, log_delta(rng));
    const auto k = fixtures::deflated_kernel(rng, arity, m, p, {delta, 0.5 * delta});
    const auto c = check_nc_positivity(k);
    ASSERT_EQ(c.verdict, Verdict::NotPositive);
    EXPECT_NEAR(c.min_gram_eigenvalue, -delta, 1e-9 * std::max(1.0, c.gram_scale));
    if (delta * kDefaultShiftGrid.back() < 10.0 * c.gram_scale) continue;
    ++checked;
    const auto w = shift_witness_test(k, kDefaultShiftGrid, 1e-12);
    ASSERT_TRUE(w.witness_found) << "delta " << delta;
    EXPECT_LT(*w.witness_eigenvalue, -delta / 2);
  }
  EXPECT_GT(checked, 300);
}

TEST(Certificates, SmallGramEigenvaluesNeedLargerWeights) {
  Rng rng(6);
  std::uniform_real_distribution<double> log_delta(-6.0, -3.0);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t arity = 1 + rep % 2, m = 1;
    const double delta = std::pow(10.0, log_delta(rng));
    const auto k = fixtures::deflated_kernel(rng, arity, m, 1, {delta, 0.5 * delta});
    const double scale = check_nc_positivity(k).gram_scale;
    std::vector<double> grid;
    for (double s = 1.0; s < 100.0 * scale / delta; s *= 10.0) grid.push_back(s);
    const auto w = shift_witness_test(k, grid, 1e-12);
    ASSERT_TRUE(w.witness_found) << "delta " << delta;
    EXPECT_LT(*w.witness_eigenvalue, -delta / 2);
  }
}
