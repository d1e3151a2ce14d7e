#include <immintrin.h>

#include "kernels_impl.hpp"

namespace nckernel::simd::detail {

// One __m256d holds two complex doubles: [r0, i0, r1, i1].

void caxpy_avx2(std::size_t n, double a_re, double a_im, const double* x, double* y) {
  const __m256d are = _mm256_set1_pd(a_re);
  const __m256d aim = _mm256_set1_pd(a_im);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d x0 = _mm256_loadu_pd(x + 2 * k);
    __m256d x1 = _mm256_loadu_pd(x + 2 * k + 4);
    __m256d y0 = _mm256_loadu_pd(y + 2 * k);
    __m256d y1 = _mm256_loadu_pd(y + 2 * k + 4);
    // swapped: [i, r]; a*x = [ar*r - ai*i, ar*i + ai*r]
    __m256d s0 = _mm256_mul_pd(_mm256_permute_pd(x0, 0b0101), aim);
    __m256d s1 = _mm256_mul_pd(_mm256_permute_pd(x1, 0b0101), aim);
    y0 = _mm256_add_pd(y0, _mm256_fmaddsub_pd(x0, are, s0));
    y1 = _mm256_add_pd(y1, _mm256_fmaddsub_pd(x1, are, s1));
    _mm256_storeu_pd(y + 2 * k, y0);
    _mm256_storeu_pd(y + 2 * k + 4, y1);
  }
  for (; k + 2 <= n; k += 2) {
    __m256d x0 = _mm256_loadu_pd(x + 2 * k);
    __m256d y0 = _mm256_loadu_pd(y + 2 * k);
    __m256d s0 = _mm256_mul_pd(_mm256_permute_pd(x0, 0b0101), aim);
    y0 = _mm256_add_pd(y0, _mm256_fmaddsub_pd(x0, are, s0));
    _mm256_storeu_pd(y + 2 * k, y0);
  }
  if (k < n) {
    const double xr = x[2 * k];
    const double xi = x[2 * k + 1];
    y[2 * k] += a_re * xr - a_im * xi;
    y[2 * k + 1] += a_re * xi + a_im * xr;
  }
}

void dot_conj_avx2(std::size_t n, const double* x, const double* y, double* out_re,
                   double* out_im) {
  // straight accumulates [xr*yr, xi*yi]; crossed accumulates [xr*yi, xi*yr].
  __m256d straight0 = _mm256_setzero_pd();
  __m256d straight1 = _mm256_setzero_pd();
  __m256d crossed0 = _mm256_setzero_pd();
  __m256d crossed1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d x0 = _mm256_loadu_pd(x + 2 * k);
    __m256d x1 = _mm256_loadu_pd(x + 2 * k + 4);
    __m256d y0 = _mm256_loadu_pd(y + 2 * k);
    __m256d y1 = _mm256_loadu_pd(y + 2 * k + 4);
    straight0 = _mm256_fmadd_pd(x0, y0, straight0);
    straight1 = _mm256_fmadd_pd(x1, y1, straight1);
    crossed0 = _mm256_fmadd_pd(x0, _mm256_permute_pd(y0, 0b0101), crossed0);
    crossed1 = _mm256_fmadd_pd(x1, _mm256_permute_pd(y1, 0b0101), crossed1);
  }
  for (; k + 2 <= n; k += 2) {
    __m256d x0 = _mm256_loadu_pd(x + 2 * k);
    __m256d y0 = _mm256_loadu_pd(y + 2 * k);
    straight0 = _mm256_fmadd_pd(x0, y0, straight0);
    crossed0 = _mm256_fmadd_pd(x0, _mm256_permute_pd(y0, 0b0101), crossed0);
  }
  alignas(32) double s[4];
  alignas(32) double c[4];
  _mm256_store_pd(s, _mm256_add_pd(straight0, straight1));
  _mm256_store_pd(c, _mm256_add_pd(crossed0, crossed1));
  double re = (s[0] + s[1]) + (s[2] + s[3]);
  double im = (c[1] - c[0]) + (c[3] - c[2]);
  if (k < n) {
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
