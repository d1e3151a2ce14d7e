#include "nckernel/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "nckernel/error.hpp"

namespace nckernel {

namespace {

using EigenMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using EigenMap = Eigen::Map<const EigenMatrix>;

EigenMap as_eigen(const ComplexMatrix& m) {
  return EigenMap(m.data().data(), static_cast<Eigen::Index>(m.rows()),
                  static_cast<Eigen::Index>(m.cols()));
}

ComplexMatrix from_eigen(const EigenMatrix& e) {
  ComplexMatrix out(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
  std::copy_n(e.data(), e.size(), out.data().data());
  return out;
}

void require_finite(const ComplexMatrix& m, const char* where) {
  if (!m.all_finite()) throw Error(ErrorKind::NonFinite, where);
}

}  // namespace

double effective_tolerance(double tol, const ComplexMatrix& m) noexcept {
  return tol * std::max(1.0, max_abs(m));
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "hermitian_eigen");
  require_finite(m, "hermitian_eigen input");
  const double defect = hermitian_defect(m);
  if (defect > effective_tolerance(tol, m)) {
    throw Error(ErrorKind::NotHermitian, "asymmetry " + std::to_string(defect));
  }
  HermitianEigen out;
  if (m.rows() == 0) return out;
  const EigenMatrix a = as_eigen(m);
  const EigenMatrix sym = (a + a.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NonFinite, "eigensolver did not converge");
  }
  const auto& vals = solver.eigenvalues();
  out.values.assign(vals.data(), vals.data() + vals.size());
  out.vectors = from_eigen(solver.eigenvectors());
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "hermitian_eigenvalues");
  require_finite(m, "hermitian_eigenvalues input");
  const double defect = hermitian_defect(m);
  if (defect > effective_tolerance(tol, m)) {
    throw Error(ErrorKind::NotHermitian, "asymmetry " + std::to_string(defect));
  }
  if (m.rows() == 0) return {};
  const EigenMatrix a = as_eigen(m);
  const EigenMatrix sym = (a + a.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NonFinite, "eigensolver did not converge");
  }
  const auto& vals = solver.eigenvalues();
  return {vals.data(), vals.data() + vals.size()};
}

PsdReport hermitian_min_eig(const ComplexMatrix& m, double tol) {
  PsdReport report;
  const auto values = hermitian_eigenvalues(m, tol);
  report.asymmetry = hermitian_defect(m);
  report.tolerance = effective_tolerance(tol, m);
  // The empty matrix is vacuously PSD.
  report.min_eigenvalue = values.empty() ? 0.0 : values.front();
  report.is_psd = report.min_eigenvalue >= -report.tolerance;
  return report;
}

PsdFactor psd_factor(const ComplexMatrix& m, double tol) {
  const auto eig = hermitian_eigen(m, tol);
  const double scale = max_abs(m);
  if (!eig.values.empty() && eig.values.front() < -effective_tolerance(tol, m)) {
    throw Error(ErrorKind::NotPsd, "eigenvalue " + std::to_string(eig.values.front()));
  }
  const double keep_above = tol * scale;
  std::vector<std::size_t> kept;
  for (std::size_t k = eig.values.size(); k-- > 0;) {
    if (eig.values[k] > keep_above) kept.push_back(k);
  }
  PsdFactor out;
  out.rank = kept.size();
  out.factor = ComplexMatrix(m.rows(), kept.size());
  for (std::size_t c = 0; c < kept.size(); ++c) {
    const double root = std::sqrt(eig.values[kept[c]]);
    for (std::size_t r = 0; r < m.rows(); ++r) out.factor(r, c) = eig.vectors(r, kept[c]) * root;
  }
  return out;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  require_finite(m, "singular_values input");
  if (m.size() == 0) return {};
  Eigen::BDCSVD<EigenMatrix> svd(as_eigen(m));
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

double spectral_norm(const ComplexMatrix& m) {
  const auto s = singular_values(m);
  return s.empty() ? 0.0 : s.front();
}

ComplexMatrix range_basis(const ComplexMatrix& m, double threshold) {
  require_finite(m, "range_basis input");
  if (m.size() == 0) return ComplexMatrix(m.rows(), 0);
  Eigen::BDCSVD<EigenMatrix> svd(as_eigen(m), Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Eigen::Index r = 0;
  while (r < s.size() && s[r] > threshold) ++r;
  const EigenMatrix u = svd.matrixU().leftCols(r);
  return from_eigen(u);
}

}  // namespace nckernel
