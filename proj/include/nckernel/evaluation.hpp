#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "nckernel/kernel.hpp"
#include "nckernel/matrix.hpp"
#include "nckernel/word.hpp"

namespace nckernel {

// N square matrices of a common size n: a substitution point for z.
class MatrixTuple {
 public:
  // Throws InvalidArgument for an empty list and DimensionMismatch for
  // non-square or mixed sizes.
  explicit MatrixTuple(std::vector<ComplexMatrix> mats);

  static MatrixTuple zeros(std::size_t arity, std::size_t size);

  std::size_t arity() const noexcept { return mats_.size(); }
  std::size_t size() const noexcept { return mats_.front().rows(); }

  // Generator g_k with k 1-based.
  const ComplexMatrix& generator(std::size_t k) const { return mats_.at(k - 1); }
  const std::vector<ComplexMatrix>& mats() const noexcept { return mats_; }

  // Entrywise conjugate-transposed tuple Z^*.
  MatrixTuple adjoint() const;

  friend bool operator==(const MatrixTuple&, const MatrixTuple&) = default;

 private:
  std::vector<ComplexMatrix> mats_;
};

// Z^w = Z_{j1} ... Z_{jk}; identity for the empty word.
ComplexMatrix eval_word(const MatrixTuple& z, const Word& w);

// Prefix-memoized Z^w for repeated lookups within one evaluation.
class WordPowers {
 public:
  explicit WordPowers(const MatrixTuple& z) : z_(&z) {}
  const ComplexMatrix& get(const Word& w);

 private:
  const MatrixTuple* z_;
  std::map<Word, ComplexMatrix> cache_;
};

// H(Z) = sum_w H_w (x) Z^w, a (p n) x (q n) matrix.
ComplexMatrix eval_poly(const NCPolynomial& h, const MatrixTuple& z);

// K(Z, Z') = sum K_{w,w'} (x) Z^w (Z'^*)^{w'^T}, a (p n) x (p n) matrix.
ComplexMatrix eval_kernel(const HereditaryKernel& k, const MatrixTuple& z, const MatrixTuple& zp);

struct NilpotencyReport {
  bool is_nilpotent = false;
  // Smallest r with Z^w = 0 for every |w| >= r.
  std::optional<std::size_t> rank;
};

// Relative singular-value threshold for the subspace chain.
inline constexpr double kNilpotencyThreshold = 1e-10;

// Reachable-subspace chain V_0 = C^n, V_{k+1} = sum_j Z_j V_k.
NilpotencyReport joint_nilpotency_rank(const MatrixTuple& z,
                                       double threshold = kNilpotencyThreshold);

// l p n square matrix with block (j, k) = K(Z^(j), Z^(k)).
ComplexMatrix block_eval_matrix(const HereditaryKernel& k, std::span<const MatrixTuple> points);

}  // namespace nckernel
