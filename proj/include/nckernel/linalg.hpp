#pragma once

#include <cstddef>
#include <vector>

#include "nckernel/matrix.hpp"

namespace nckernel {

inline constexpr double kDefaultTolerance = 1e-9;

// Tolerances passed to the functions below are relative: the absolute
// threshold is tol * max(1, max_abs(M)).
double effective_tolerance(double tol, const ComplexMatrix& m) noexcept;

struct PsdReport {
  double min_eigenvalue = 0.0;
  bool is_psd = false;
  // Absolute threshold actually applied: is_psd <=> min_eigenvalue >= -tolerance.
  double tolerance = 0.0;
  // max |M - M^*| of the input before symmetrization.
  double asymmetry = 0.0;
};

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

// Eigendecomposition of (M + M^*)/2. Throws NotSquare / NotHermitian (asymmetry
// above the effective tolerance) / NonFinite.
HermitianEigen hermitian_eigen(const ComplexMatrix& m, double tol = kDefaultTolerance);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol = kDefaultTolerance);

PsdReport hermitian_min_eig(const ComplexMatrix& m, double tol = kDefaultTolerance);

struct PsdFactor {
  ComplexMatrix factor;  // M ~ factor * factor^*, one column per retained eigenvalue
  std::size_t rank = 0;
};

// Minimal-rank factorization through the eigendecomposition. Eigenvalues at
// or below tol * max_abs(M) are clipped to zero; columns are ordered by
// decreasing eigenvalue. Throws NotPsd when an eigenvalue is below the
// effective tolerance.
PsdFactor psd_factor(const ComplexMatrix& m, double tol = kDefaultTolerance);

std::vector<double> singular_values(const ComplexMatrix& m);
double spectral_norm(const ComplexMatrix& m);

// Orthonormal basis (as columns) of the column space, dropping directions
// whose singular value is at or below threshold.
ComplexMatrix range_basis(const ComplexMatrix& m, double threshold);

}  // namespace nckernel
