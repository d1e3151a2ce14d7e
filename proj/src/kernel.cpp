#include "nckernel/kernel.hpp"

#include <algorithm>
#include <string>

#include "nckernel/error.hpp"

namespace nckernel {

namespace {

void require_shape(const ComplexMatrix& m, std::size_t rows, std::size_t cols) {
  if (m.rows() != rows || m.cols() != cols) {
    throw Error(ErrorKind::DimensionMismatch,
                "coefficient is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                    ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
  }
  if (!m.all_finite()) throw Error(ErrorKind::NonFinite, "coefficient");
}

}  // namespace

HereditaryKernel::HereditaryKernel(std::size_t arity, std::size_t dim, std::size_t degree_bound)
    : arity_(arity), dim_(dim), degree_bound_(degree_bound) {
  if (arity == 0) throw Error(ErrorKind::InvalidArgument, "arity must be >= 1");
  if (dim == 0) throw Error(ErrorKind::InvalidArgument, "coefficient dimension must be >= 1");
}

void HereditaryKernel::add(const Word& w, const Word& wp, const ComplexMatrix& coeff) {
  check_letters(w, arity_);
  check_letters(wp, arity_);
  if (w.length() > degree_bound_ || wp.length() > degree_bound_) {
    throw Error(ErrorKind::InvalidArgument, "word longer than degree bound " +
                                                std::to_string(degree_bound_));
  }
  require_shape(coeff, dim_, dim_);
  auto [it, inserted] = coeffs_.try_emplace(WordPair{w, wp}, coeff);
  if (!inserted) it->second += coeff;
}

void HereditaryKernel::add(const Word& w, const Word& wp, Complex scalar) {
  ComplexMatrix c = ComplexMatrix::identity(dim_);
  c *= scalar;
  add(w, wp, c);
}

const ComplexMatrix* HereditaryKernel::find(const Word& w, const Word& wp) const {
  auto it = coeffs_.find(WordPair{w, wp});
  return it == coeffs_.end() ? nullptr : &it->second;
}

ComplexMatrix HereditaryKernel::coefficient(const Word& w, const Word& wp) const {
  if (const auto* c = find(w, wp)) return *c;
  return ComplexMatrix(dim_, dim_);
}

std::size_t HereditaryKernel::support_degree() const noexcept {
  std::size_t d = 0;
  for (const auto& [key, _] : coeffs_) d = std::max({d, key.first.length(), key.second.length()});
  return d;
}

HereditaryKernel HereditaryKernel::with_degree_bound(std::size_t degree_bound) const {
  if (degree_bound < support_degree()) {
    throw Error(ErrorKind::InvalidArgument, "degree bound below support degree");
  }
  HereditaryKernel out = *this;
  out.degree_bound_ = degree_bound;
  return out;
}

NCPolynomial::NCPolynomial(std::size_t arity, std::size_t rows, std::size_t inner)
    : arity_(arity), rows_(rows), inner_(inner) {
  if (arity == 0) throw Error(ErrorKind::InvalidArgument, "arity must be >= 1");
  if (rows == 0) throw Error(ErrorKind::InvalidArgument, "output dimension must be >= 1");
}

void NCPolynomial::add(const Word& w, const ComplexMatrix& coeff) {
  check_letters(w, arity_);
  require_shape(coeff, rows_, inner_);
  auto [it, inserted] = coeffs_.try_emplace(w, coeff);
  if (!inserted) it->second += coeff;
}

const ComplexMatrix* NCPolynomial::find(const Word& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? nullptr : &it->second;
}

ComplexMatrix NCPolynomial::coefficient(const Word& w) const {
  if (const auto* c = find(w)) return *c;
  return ComplexMatrix(rows_, inner_);
}

std::size_t NCPolynomial::degree() const noexcept {
  std::size_t d = 0;
  for (const auto& [w, _] : coeffs_) d = std::max(d, w.length());
  return d;
}

HereditaryKernel kernel_from_factor(const NCPolynomial& h) {
  HereditaryKernel k(h.arity(), h.rows(), h.degree());
  for (const auto& [w, hw] : h.entries()) {
    for (const auto& [wp, hwp] : h.entries()) k.add(w, wp, multiply_adjoint(hw, hwp));
  }
  return k;
}

double hermitian_asymmetry(const HereditaryKernel& k) {
  double worst = 0.0;
  for (const auto& [key, c] : k.entries()) {
    const ComplexMatrix mirrored = k.coefficient(key.second, key.first);
    worst = std::max(worst, max_abs(mirrored - c.adjoint()));
  }
  return worst;
}

bool hermitize_check(const HereditaryKernel& k, double tol) {
  return hermitian_asymmetry(k) <= tol;
}

double max_abs(const HereditaryKernel& k) {
  double best = 0.0;
  for (const auto& [_, c] : k.entries()) best = std::max(best, max_abs(c));
  return best;
}

}  // namespace nckernel
