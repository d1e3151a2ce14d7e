#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "nckernel/evaluation.hpp"
#include "nckernel/kernel.hpp"
#include "nckernel/matrix.hpp"

namespace nckernel {

// Seeded generators shared by the CLI and the test suites. Streams are
// reproducible for a fixed seed and standard library.
using Rng = std::mt19937_64;

// Real and imaginary parts independent standard normals.
Complex random_complex(Rng& rng);
ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);

// Each strictly-upper entry is kept with probability `density`.
MatrixTuple random_strictly_upper_tuple(Rng& rng, std::size_t arity, std::size_t size,
                                        double density = 1.0);

// Every word of length <= degree receives a coefficient with probability
// `density`; the empty word always does.
NCPolynomial random_polynomial(Rng& rng, std::size_t arity, std::size_t degree, std::size_t rows,
                               std::size_t inner, double density = 1.0);

}  // namespace nckernel
