#include "nckernel/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nckernel/error.hpp"
#include "nckernel/simd/kernels.hpp"

namespace nckernel {

namespace {

const double* raw(const Complex* p) { return reinterpret_cast<const double*>(p); }
double* raw(Complex* p) { return reinterpret_cast<double*>(p); }

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()));
  }
}

}  // namespace

void check_dense_size(std::size_t rows, std::size_t cols, std::size_t cap) {
  if (rows != 0 && cols > std::numeric_limits<std::size_t>::max() / rows) {
    throw Error(ErrorKind::SizeCap, "matrix dimensions overflow");
  }
  if (rows * cols > cap) {
    throw Error(ErrorKind::SizeCap, std::to_string(rows) + "x" + std::to_string(cols) +
                                        " exceeds " + std::to_string(cap) + " entries");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  check_dense_size(rows, cols);
  data_.assign(rows * cols, Complex{});
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                                   std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw Error(ErrorKind::DimensionMismatch, "block out of range");
  }
  ComplexMatrix out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>((r0 + r) * cols_ + c0), nc,
                out.data_.begin() + static_cast<std::ptrdiff_t>(r * nc));
  }
  return out;
}

void ComplexMatrix::set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& src) {
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) {
    throw Error(ErrorKind::DimensionMismatch, "block out of range");
  }
  for (std::size_t r = 0; r < src.rows_; ++r) {
    std::copy_n(src.data_.begin() + static_cast<std::ptrdiff_t>(r * src.cols_), src.cols_,
                data_.begin() + static_cast<std::ptrdiff_t>((r0 + r) * cols_ + c0));
  }
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "add");
  simd::active().caxpy(data_.size(), 1.0, 0.0, raw(other.data_.data()), raw(data_.data()));
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "subtract");
  simd::active().caxpy(data_.size(), -1.0, 0.0, raw(other.data_.data()), raw(data_.data()));
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& v : data_) v *= scalar;
  return *this;
}

bool ComplexMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  });
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scalar, ComplexMatrix a) { return a *= scalar; }

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "multiply: inner dimensions differ");
  }
  ComplexMatrix c(a.rows(), b.cols());
  const auto& k = simd::active();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out_row = c.row(i);
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Complex s = a(i, l);
      if (s == Complex{}) continue;
      k.caxpy(b.cols(), s.real(), s.imag(), raw(b.row(l).data()), raw(out_row.data()));
    }
  }
  return c;
}

ComplexMatrix multiply_adjoint(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "multiply_adjoint: inner dimensions differ");
  }
  ComplexMatrix c(a.rows(), b.rows());
  const auto& k = simd::active();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      double re = 0.0;
      double im = 0.0;
      k.dot_conj(a.cols(), raw(a.row(i).data()), raw(b.row(j).data()), &re, &im);
      c(i, j) = Complex(re, im);
    }
  }
  return c;
}

void kron_accumulate(ComplexMatrix& out, const ComplexMatrix& a, const ComplexMatrix& b) {
  if (out.rows() != a.rows() * b.rows() || out.cols() != a.cols() * b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "kron_accumulate: output shape");
  }
  const auto& k = simd::active();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex s = a(i, j);
      if (s == Complex{}) continue;
      for (std::size_t r = 0; r < b.rows(); ++r) {
        Complex* dst = &out(i * b.rows() + r, j * b.cols());
        k.caxpy(b.cols(), s.real(), s.imag(), raw(b.row(r).data()), raw(dst));
      }
    }
  }
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t cap) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  check_dense_size(rows, cols, cap);
  ComplexMatrix out(rows, cols);
  kron_accumulate(out, a, b);
  return out;
}

double max_abs(const ComplexMatrix& m) noexcept {
  double best = 0.0;
  for (const auto& v : m.data()) best = std::max(best, std::abs(v));
  return best;
}

double hermitian_defect(const ComplexMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "hermitian_defect");
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      best = std::max(best, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return best;
}

}  // namespace nckernel
