#pragma once

// Internal: raw kernel entry points. The AVX2 translation unit is compiled
// with -mavx2 -mfma and must not pull in inline library code shared with
// the rest of the build.

#include <cstddef>

namespace nckernel::simd::detail {

void caxpy_scalar(std::size_t n, double a_re, double a_im, const double* x, double* y);
void dot_conj_scalar(std::size_t n, const double* x, const double* y, double* out_re,
                     double* out_im);

#if defined(NCKERNEL_HAVE_AVX2)
void caxpy_avx2(std::size_t n, double a_re, double a_im, const double* x, double* y);
void dot_conj_avx2(std::size_t n, const double* x, const double* y, double* out_re,
                   double* out_im);
#endif

}  // namespace nckernel::simd::detail
