#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nckernel/kernel.hpp"
#include "nckernel/linalg.hpp"
#include "nckernel/matrix.hpp"
#include "nckernel/word.hpp"

namespace nckernel {

// Word-indexed coefficient matrix (K_{w_i, w_j}) over all words of length
// <= m, in canonical order; each block is p x p.
struct GramMatrix {
  std::vector<Word> word_index;
  std::size_t block_dim = 0;
  ComplexMatrix matrix;
};

// Hermitian tolerance for accepting a kernel, relative to its largest coefficient.
inline constexpr double kHermitianTolerance = 1e-10;

// Throws NotHermitian when K fails hermitize_check.
GramMatrix gram_matrix(const HereditaryKernel& k);

// Inverse of gram_matrix: reads coefficients off a Hermitian block matrix
// indexed by enumerate_words(arity, m). Exact zero blocks are not stored.
HereditaryKernel kernel_from_gram(const ComplexMatrix& gram, std::size_t arity, std::size_t dim,
                                  std::size_t degree_bound);

enum class Verdict { PositiveKernel, NotPositive };

struct PositivityCertificate {
  Verdict verdict = Verdict::NotPositive;
  double min_gram_eigenvalue = 0.0;
  double gram_scale = 0.0;  // max_abs of the Gram matrix
  double tolerance = 0.0;   // absolute threshold applied to the eigenvalue
  std::vector<Word> word_index;
  std::optional<NCPolynomial> factor;
  std::optional<std::size_t> inner_dimension;
  std::optional<double> residual;
};

PositivityCertificate check_nc_positivity(const HereditaryKernel& k,
                                          double tol = kDefaultTolerance);

// H with K = H H^*, H_w the block row of the Gram factor for word w. The
// inner dimension is the Gram rank, at most p * sum_j N^j. H is unique only
// up to right multiplication by an isometry. Throws NotPsd.
NCPolynomial factor_kernel(const HereditaryKernel& k, double tol = kDefaultTolerance);

// max over the union of supports of max_abs(K_{w,w'} - H_w H_{w'}^*).
double residual(const HereditaryKernel& k, const NCPolynomial& h);

// p * sum_{j=0}^{m} N^j.
std::size_t factor_dimension_bound(const HereditaryKernel& k);

}  // namespace nckernel
