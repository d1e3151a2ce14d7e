#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "nckernel/matrix.hpp"
#include "nckernel/word.hpp"

namespace nckernel {

using WordPair = std::pair<Word, Word>;

// Hereditary kernel K(z, z') = sum K_{w,w'} z^w z'^{w'^T} with p x p
// coefficients, stored sparsely (absent keys are zero). The degree bound m
// may exceed the longest stored word.
class HereditaryKernel {
 public:
  HereditaryKernel(std::size_t arity, std::size_t dim, std::size_t degree_bound);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t degree_bound() const noexcept { return degree_bound_; }

  // Accumulates into K_{w,w'}. Throws UnknownIndex, DimensionMismatch, or
  // InvalidArgument when a word exceeds the degree bound.
  void add(const Word& w, const Word& wp, const ComplexMatrix& coeff);
  void add(const Word& w, const Word& wp, Complex scalar);

  // Zero matrix when absent.
  ComplexMatrix coefficient(const Word& w, const Word& wp) const;
  const ComplexMatrix* find(const Word& w, const Word& wp) const;

  const std::map<WordPair, ComplexMatrix>& entries() const noexcept { return coeffs_; }

  // Longest word appearing in any key.
  std::size_t support_degree() const noexcept;

  // Same coefficients, wider window. Throws if the new bound is below the support.
  HereditaryKernel with_degree_bound(std::size_t degree_bound) const;

 private:
  std::size_t arity_;
  std::size_t dim_;
  std::size_t degree_bound_;
  std::map<WordPair, ComplexMatrix> coeffs_;
};

// H(z) = sum H_w z^w with p x q coefficients.
class NCPolynomial {
 public:
  NCPolynomial(std::size_t arity, std::size_t rows, std::size_t inner);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t inner() const noexcept { return inner_; }

  void add(const Word& w, const ComplexMatrix& coeff);
  ComplexMatrix coefficient(const Word& w) const;
  const ComplexMatrix* find(const Word& w) const;

  const std::map<Word, ComplexMatrix>& entries() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept;

 private:
  std::size_t arity_;
  std::size_t rows_;
  std::size_t inner_;
  std::map<Word, ComplexMatrix> coeffs_;
};

// K_{w,w'} = H_w H_{w'}^* over all pairs of support words; m = deg H.
HereditaryKernel kernel_from_factor(const NCPolynomial& h);

// max over keys of max_abs(K_{w',w} - K_{w,w'}^*), missing keys as zero.
double hermitian_asymmetry(const HereditaryKernel& k);
bool hermitize_check(const HereditaryKernel& k, double tol);

// Largest coefficient modulus.
double max_abs(const HereditaryKernel& k);

}  // namespace nckernel
