#pragma once

#include <algorithm>
#include <vector>

#include "nckernel/certificates.hpp"
#include "nckernel/kernel.hpp"
#include "nckernel/linalg.hpp"
#include "nckernel/random.hpp"

namespace fixtures {

using namespace nckernel;

// Positive kernel H H^* for a random dense factor.
inline HereditaryKernel random_positive_kernel(Rng& rng, std::size_t arity, std::size_t degree,
                                               std::size_t dim, std::size_t inner) {
  auto k = kernel_from_factor(random_polynomial(rng, arity, degree, dim, inner));
  return k.with_degree_bound(degree);
}

// Hermitian kernel whose Gram matrix has the eigenvalues of a random PSD Gram
// except that the smallest `count` are moved to -deltas[i].
inline HereditaryKernel deflated_kernel(Rng& rng, std::size_t arity, std::size_t degree,
                                        std::size_t dim, const std::vector<double>& deltas) {
  const auto g = gram_matrix(random_positive_kernel(rng, arity, degree, dim, 2)).matrix;
  const auto eig = hermitian_eigen(g);
  ComplexMatrix adjusted = g;
  for (std::size_t i = 0; i < deltas.size() && i < eig.values.size(); ++i) {
    const double shift = eig.values[i] + deltas[i];
    for (std::size_t r = 0; r < g.rows(); ++r)
      for (std::size_t c = 0; c < g.cols(); ++c)
        adjusted(r, c) -= shift * eig.vectors(r, i) * std::conj(eig.vectors(c, i));
  }
  // Restore exact Hermitian symmetry lost to roundoff.
  const ComplexMatrix sym = 0.5 * (adjusted + adjusted.adjoint());
  return kernel_from_gram(sym, arity, dim, degree);
}

}  // namespace fixtures
