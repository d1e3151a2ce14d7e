#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nckernel/evaluation.hpp"
#include "nckernel/kernel.hpp"
#include "nckernel/linalg.hpp"
#include "nckernel/matrix.hpp"
#include "nckernel/word.hpp"

namespace nckernel {

// Largest tuple side the witness constructions will build (N = 3, m = 5 for
// the tensor tuple).
inline constexpr std::size_t kMaxWitnessSize = 4096;

// ---------------------------------------------------------------------------
// Tensor-permutation tuples
// ---------------------------------------------------------------------------

// Permutation on (C^{N+1})^{(x) m} sending e_{i1} (x) ... (x) e_{im} to
// e_{im} (x) e_{i1} (x) ... (x) e_{i(m-1)}. Basis order is the Kronecker
// order with i1 most significant.
ComplexMatrix cyclic_shift_matrix(std::size_t arity, std::size_t order);

// Z_k = (E_{k+1,1} (x) I^{(x) m-1}) S scaled by lambda_k, k = 1..N. Jointly
// nilpotent of rank exactly m + 1 when every lambda_k is nonzero, and
// Z(lambda)^w = lambda^{t(w)} Z(1)^w.
MatrixTuple tensor_nilpotent_tuple(std::size_t arity, std::size_t order,
                                   std::span<const Complex> lambda);

// ---------------------------------------------------------------------------
// Commutative polynomial kernels P(l, l') = sum P_{t,t'} l^t conj(l')^{t'}
// ---------------------------------------------------------------------------

using DegreePair = std::pair<MultiDegree, MultiDegree>;

struct CommutativePolyKernel {
  std::size_t arity = 0;
  std::size_t degree = 0;
  std::size_t block_dim = 0;
  std::map<DegreePair, ComplexMatrix> coeffs;

  ComplexMatrix coefficient(const MultiDegree& t, const MultiDegree& tp) const;
  void add(const MultiDegree& t, const MultiDegree& tp, const ComplexMatrix& c);
};

// P(lambda, lambda') at one pair of scalar points.
ComplexMatrix evaluate(const CommutativePolyKernel& p, std::span<const Complex> lambda,
                       std::span<const Complex> lambda_p);

// P_{t,t'} = sum_{t(w)=t, t(w')=t'} K_{w,w'} (x) Z^w (Z^{w'})^*. With Z the
// unscaled tensor tuple this realizes P(l, l') = K(Z(l), Z(l')).
CommutativePolyKernel abelianized_coefficients(const HereditaryKernel& k, const MatrixTuple& z);

using TorusSampler =
    std::function<ComplexMatrix(std::span<const Complex>, std::span<const Complex>)>;

// Recovers every P_{t,t'} with |t|, |t'| <= degree by averaging
// sampler(l, l') conj(l)^t l'^{t'} over the product grid of (degree+1)-st
// roots of unity in all 2N variables. Exact for polynomial samplers of that
// degree.
CommutativePolyKernel torus_extract(const TorusSampler& sampler, std::size_t arity,
                                    std::size_t degree, std::size_t block_dim);

struct CommutativeGram {
  std::vector<MultiDegree> index;
  ComplexMatrix matrix;
};

// M_P = (P_{t,t'}) over all multidegrees of total <= degree, graded order.
CommutativeGram commutative_gram_matrix(const CommutativePolyKernel& p);

// Throws NotHermitian unless P_{t',t} = P_{t,t'}^* within tol.
PsdReport commutative_gram_check(const CommutativePolyKernel& p, double tol = kDefaultTolerance);

// max over all (t, t') of max_abs(a - b), absent entries as zero.
double max_coefficient_gap(const CommutativePolyKernel& a, const CommutativePolyKernel& b);

// ---------------------------------------------------------------------------
// Weighted backward shifts
// ---------------------------------------------------------------------------

// S = (S_1, ..., S_N) on the span of words of length <= m with
// <w, w> = s^{-|w|}, written in the orthonormal basis s^{|w|/2} w:
// S_j e_v = sqrt(s) e_{g_j v} for |v| < m.
MatrixTuple weighted_shift_tuple(std::size_t arity, std::size_t window, double weight);

struct ShiftSample {
  double weight = 0.0;
  double min_eigenvalue = 0.0;
  double threshold = 0.0;  // witness when min_eigenvalue < -threshold
};

struct ShiftWitnessResult {
  std::vector<ShiftSample> samples;
  bool witness_found = false;
  std::optional<double> witness_weight;
  std::optional<double> witness_eigenvalue;  // most negative over the grid
};

inline const std::vector<double> kDefaultShiftGrid = {1.0, 1e1, 1e2, 1e3, 1e4};

// Diagonal test K(S, S) for each weight in the grid. The per-weight threshold
// is max(tol, floating-point floor of the evaluated matrix).
ShiftWitnessResult shift_witness_test(const HereditaryKernel& k, std::span<const double> weights,
                                      double tol = kDefaultTolerance);

struct ShiftIdentity {
  Complex lhs;
  Complex rhs;
  bool passes = false;
};

// lhs = <K(S,S) x, x> for x = sum_a h_a (x) a (unnormalized basis vectors);
// rhs = sum_g sum_{w,w'} <K_{w,w'} h_{w'g}, h_{wg}> s^{-|g|}. Absent h are zero.
ShiftIdentity shift_identity_check(const HereditaryKernel& k, double weight,
                                   const std::map<Word, std::vector<Complex>>& h);

// ---------------------------------------------------------------------------
// Convergent-case counterexample K = 1 - z z'
// ---------------------------------------------------------------------------

struct CounterexampleReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  double radius = 0.0;

  std::vector<double> gram_eigenvalues;
  bool gram_indefinite = false;

  double min_diagonal_eigenvalue = 0.0;  // over the random samples
  double diagonal_bound = 0.0;           // 1 - radius^2 - 1e-9
  bool diagonal_positive = false;

  double two_point_min_eigenvalue = 0.0;  // points {0, radius I}
  double two_point_expected = 0.0;        // closed form of the 2x2 eigenvalue
  bool two_point_indefinite = false;

  bool all_pass() const noexcept {
    return gram_indefinite && diagonal_positive && two_point_indefinite;
  }
};

// Random Z of sizes 1..4 with spectral norm <= radius. Throws
// InvalidArgument unless 0 < radius < 1.
CounterexampleReport counterexample_demo(std::size_t samples, double radius, std::uint64_t seed);

}  // namespace nckernel
