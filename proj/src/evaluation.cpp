#include "nckernel/evaluation.hpp"

#include <algorithm>

#include "nckernel/error.hpp"
#include "nckernel/linalg.hpp"

namespace nckernel {

namespace {

void require_arity(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw Error(ErrorKind::ArityMismatch,
                "arity " + std::to_string(got) + ", expected " + std::to_string(expected));
  }
}

void check_word_arity(const Word& w, std::size_t arity) {
  check_letters(w, std::max<std::size_t>(arity, w.max_letter()));
  if (w.max_letter() > arity)
    throw Error(ErrorKind::ArityMismatch, "word " + to_string(w) + " used with a tuple of arity " +
                                              std::to_string(arity));
}

}  // namespace

MatrixTuple::MatrixTuple(std::vector<ComplexMatrix> mats) : mats_(std::move(mats)) {
  if (mats_.empty()) throw Error(ErrorKind::InvalidArgument, "tuple needs at least one matrix");
  const std::size_t n = mats_.front().rows();
  for (const auto& m : mats_) {
    if (!m.is_square() || m.rows() != n) {
      throw Error(ErrorKind::DimensionMismatch, "tuple matrices must share a square size");
    }
    if (!m.all_finite()) throw Error(ErrorKind::NonFinite, "tuple entry");
  }
}

MatrixTuple MatrixTuple::zeros(std::size_t arity, std::size_t size) {
  return MatrixTuple(std::vector<ComplexMatrix>(arity, ComplexMatrix(size, size)));
}

MatrixTuple MatrixTuple::adjoint() const {
  std::vector<ComplexMatrix> out;
  out.reserve(mats_.size());
  for (const auto& m : mats_) out.push_back(m.adjoint());
  return MatrixTuple(std::move(out));
}

ComplexMatrix eval_word(const MatrixTuple& z, const Word& w) {
  check_word_arity(w, z.arity());
  ComplexMatrix acc = ComplexMatrix::identity(z.size());
  for (auto l : w.letters()) acc = multiply(acc, z.generator(l));
  return acc;
}

const ComplexMatrix& WordPowers::get(const Word& w) {
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  if (w.empty()) return cache_.emplace(w, ComplexMatrix::identity(z_->size())).first->second;
  check_word_arity(w, z_->arity());
  auto letters = w.letters();
  Word prefix(std::vector<Word::Letter>(letters.begin(), letters.end() - 1));
  ComplexMatrix value = multiply(get(prefix), z_->generator(letters.back()));
  return cache_.emplace(w, std::move(value)).first->second;
}

ComplexMatrix eval_poly(const NCPolynomial& h, const MatrixTuple& z) {
  require_arity(h.arity(), z.arity());
  const std::size_t n = z.size();
  check_dense_size(h.rows() * n, h.inner() * n);
  ComplexMatrix out(h.rows() * n, h.inner() * n);
  WordPowers powers(z);
  for (const auto& [w, hw] : h.entries()) kron_accumulate(out, hw, powers.get(w));
  return out;
}

namespace {

void accumulate_kernel(ComplexMatrix& out, std::size_t row0, std::size_t col0,
                       const HereditaryKernel& k, WordPowers& left, WordPowers& right,
                       std::size_t n) {
  const std::size_t pn = k.dim() * n;
  ComplexMatrix block(pn, pn);
  for (const auto& [key, coeff] : k.entries()) {
    const ComplexMatrix product = multiply_adjoint(left.get(key.first), right.get(key.second));
    kron_accumulate(block, coeff, product);
  }
  out.set_block(row0, col0, block);
}

}  // namespace

ComplexMatrix eval_kernel(const HereditaryKernel& k, const MatrixTuple& z, const MatrixTuple& zp) {
  require_arity(k.arity(), z.arity());
  require_arity(k.arity(), zp.arity());
  if (z.size() != zp.size()) throw Error(ErrorKind::DimensionMismatch, "tuple sizes differ");
  const std::size_t pn = k.dim() * z.size();
  check_dense_size(pn, pn);
  ComplexMatrix out(pn, pn);
  WordPowers left(z);
  WordPowers right(zp);
  accumulate_kernel(out, 0, 0, k, left, right, z.size());
  return out;
}

NilpotencyReport joint_nilpotency_rank(const MatrixTuple& z, double threshold) {
  double scale = 0.0;
  for (const auto& m : z.mats()) scale = std::max(scale, max_abs(m));
  if (scale == 0.0) return {true, 1};
  const std::size_t n = z.size();
  const double cutoff = threshold * scale;
  ComplexMatrix basis = ComplexMatrix::identity(n);
  for (std::size_t r = 1; r <= n + 1; ++r) {
    const std::size_t width = basis.cols();
    ComplexMatrix images(n, z.arity() * width);
    for (std::size_t j = 0; j < z.arity(); ++j) {
      images.set_block(0, j * width, multiply(z.mats()[j], basis));
    }
    ComplexMatrix next = range_basis(images, cutoff);
    if (next.cols() == 0) return {true, r};
    // V_{r} is contained in V_{r-1}; equal dimension means the chain stalled.
    if (next.cols() >= width) return {false, std::nullopt};
    basis = std::move(next);
  }
  return {false, std::nullopt};
}

ComplexMatrix block_eval_matrix(const HereditaryKernel& k, std::span<const MatrixTuple> points) {
  if (points.empty()) return ComplexMatrix(0, 0);
  const std::size_t n = points.front().size();
  for (const auto& z : points) {
    require_arity(k.arity(), z.arity());
    if (z.size() != n) throw Error(ErrorKind::DimensionMismatch, "points have mixed sizes");
  }
  const std::size_t pn = k.dim() * n;
  check_dense_size(points.size() * pn, points.size() * pn);
  ComplexMatrix out(points.size() * pn, points.size() * pn);
  std::vector<WordPowers> powers;
  powers.reserve(points.size());
  for (const auto& z : points) powers.emplace_back(z);
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t c = 0; c < points.size(); ++c) {
      accumulate_kernel(out, j * pn, c * pn, k, powers[j], powers[c], n);
    }
  }
  return out;
}

}  // namespace nckernel
