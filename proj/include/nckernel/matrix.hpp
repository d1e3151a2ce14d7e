#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace nckernel {

using Complex = std::complex<double>;

// Upper bound on the entry count of any dense matrix the library allocates.
inline constexpr std::size_t kMaxDenseEntries = 100'000'000;

// Throws SizeCap when rows*cols exceeds cap (or overflows).
void check_dense_size(std::size_t rows, std::size_t cols, std::size_t cap = kMaxDenseEntries);

// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }

  std::span<Complex> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Complex> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;

  // Sub-block copy and write-back.
  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& src);

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  bool all_finite() const noexcept;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);

// A * B.
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
// A * B^*, without forming the adjoint.
ComplexMatrix multiply_adjoint(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   std::size_t cap = kMaxDenseEntries);

// out += A (x) B; out must already be sized (rA*rB) x (cA*cB).
void kron_accumulate(ComplexMatrix& out, const ComplexMatrix& a, const ComplexMatrix& b);

// Largest entry modulus (the max-norm used for every tolerance in the library).
double max_abs(const ComplexMatrix& m) noexcept;

// max |M - M^*| entrywise; requires a square matrix.
double hermitian_defect(const ComplexMatrix& m);

}  // namespace nckernel
