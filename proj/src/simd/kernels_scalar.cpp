#include "kernels_impl.hpp"

namespace nckernel::simd::detail {

void caxpy_scalar(std::size_t n, double a_re, double a_im, const double* x, double* y) {
  for (std::size_t k = 0; k < n; ++k) {
    const double xr = x[2 * k];
    const double xi = x[2 * k + 1];
    y[2 * k] += a_re * xr - a_im * xi;
    y[2 * k + 1] += a_re * xi + a_im * xr;
  }
}

void dot_conj_scalar(std::size_t n, const double* x, const double* y, double* out_re,
                     double* out_im) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double xr = x[2 * k];
    const double xi = x[2 * k + 1];
    const double yr = y[2 * k];
    const double yi = y[2 * k + 1];
    re += xr * yr + xi * yi;
    im += xi * yr - xr * yi;
  }
  *out_re = re;
  *out_im = im;
}

}  // namespace nckernel::simd::detail
