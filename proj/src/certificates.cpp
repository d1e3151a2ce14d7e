#include "nckernel/certificates.hpp"

#include <algorithm>
#include <set>

#include "nckernel/error.hpp"

namespace nckernel {

GramMatrix gram_matrix(const HereditaryKernel& k) {
  const double asym = hermitian_asymmetry(k);
  if (asym > kHermitianTolerance * std::max(1.0, max_abs(k))) {
    throw Error(ErrorKind::NotHermitian, "kernel asymmetry " + std::to_string(asym));
  }
  GramMatrix g;
  g.block_dim = k.dim();
  const std::size_t d = word_count(k.arity(), k.degree_bound());
  check_dense_size(d * k.dim(), d * k.dim());
  g.word_index = enumerate_words(k.arity(), k.degree_bound());
  g.matrix = ComplexMatrix(d * k.dim(), d * k.dim());
  for (const auto& [key, coeff] : k.entries()) {
    const std::size_t i = word_position(key.first, k.arity());
    const std::size_t j = word_position(key.second, k.arity());
    g.matrix.set_block(i * k.dim(), j * k.dim(), coeff);
  }
  return g;
}

HereditaryKernel kernel_from_gram(const ComplexMatrix& gram, std::size_t arity, std::size_t dim,
                                  std::size_t degree_bound) {
  const auto words = enumerate_words(arity, degree_bound);
  if (gram.rows() != words.size() * dim || gram.cols() != words.size() * dim) {
    throw Error(ErrorKind::DimensionMismatch, "Gram size does not match the word window");
  }
  HereditaryKernel k(arity, dim, degree_bound);
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      ComplexMatrix b = gram.block(i * dim, j * dim, dim, dim);
      if (max_abs(b) != 0.0) k.add(words[i], words[j], b);
    }
  }
  return k;
}

std::size_t factor_dimension_bound(const HereditaryKernel& k) {
  return k.dim() * word_count(k.arity(), k.degree_bound());
}

namespace {

NCPolynomial slice_factor(const GramMatrix& g, const PsdFactor& f, std::size_t arity) {
  const std::size_t p = g.block_dim;
  NCPolynomial h(arity, p, f.rank);
  if (f.rank == 0) return h;
  for (std::size_t i = 0; i < g.word_index.size(); ++i) {
    ComplexMatrix hw = f.factor.block(i * p, 0, p, f.rank);
    if (max_abs(hw) != 0.0) h.add(g.word_index[i], hw);
  }
  return h;
}

}  // namespace

NCPolynomial factor_kernel(const HereditaryKernel& k, double tol) {
  const GramMatrix g = gram_matrix(k);
  return slice_factor(g, psd_factor(g.matrix, tol), k.arity());
}

PositivityCertificate check_nc_positivity(const HereditaryKernel& k, double tol) {
  const GramMatrix g = gram_matrix(k);
  const PsdReport report = hermitian_min_eig(g.matrix, tol);
  PositivityCertificate cert;
  cert.min_gram_eigenvalue = report.min_eigenvalue;
  cert.tolerance = report.tolerance;
  cert.gram_scale = max_abs(g.matrix);
  cert.word_index = g.word_index;
  if (!report.is_psd) {
    cert.verdict = Verdict::NotPositive;
    return cert;
  }
  cert.verdict = Verdict::PositiveKernel;
  NCPolynomial h = slice_factor(g, psd_factor(g.matrix, tol), k.arity());
  cert.inner_dimension = h.inner();
  cert.residual = residual(k, h);
  cert.factor = std::move(h);
  return cert;
}

double residual(const HereditaryKernel& k, const NCPolynomial& h) {
  if (k.arity() != h.arity()) throw Error(ErrorKind::ArityMismatch, "residual");
  if (k.dim() != h.rows()) throw Error(ErrorKind::DimensionMismatch, "residual");
  std::set<WordPair> keys;
  for (const auto& [key, _] : k.entries()) keys.insert(key);
  for (const auto& [w, _] : h.entries()) {
    for (const auto& [wp, __] : h.entries()) keys.insert({w, wp});
  }
  double worst = 0.0;
  for (const auto& [w, wp] : keys) {
    ComplexMatrix diff = k.coefficient(w, wp);
    const auto* hw = h.find(w);
    const auto* hwp = h.find(wp);
    if (hw && hwp && h.inner() > 0) diff -= multiply_adjoint(*hw, *hwp);
    worst = std::max(worst, max_abs(diff));
  }
  return worst;
}

}  // namespace nckernel
