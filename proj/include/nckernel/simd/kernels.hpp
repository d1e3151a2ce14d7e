#pragma once

// Complex inner-loop kernels with a scalar reference and vectorized
// variants. Arrays are interleaved (re, im) doubles, length counted in
// complex elements. The active table is chosen once from CPU features and
// can be overridden with NCKERNEL_SIMD=scalar|avx2 or select().

#include <cstddef>
#include <optional>
#include <string_view>

namespace nckernel::simd {

enum class Backend { Scalar, Avx2 };

struct KernelTable {
  Backend backend;
  // y[k] += a * x[k]
  void (*caxpy)(std::size_t n, double a_re, double a_im, const double* x, double* y);
  // out = sum_k x[k] * conj(y[k])
  void (*dot_conj)(std::size_t n, const double* x, const double* y, double* out_re,
                   double* out_im);
};

const KernelTable& scalar_kernels() noexcept;

// Null when the variant was not compiled in.
const KernelTable* avx2_kernels() noexcept;

bool cpu_supports(Backend backend) noexcept;

const KernelTable& active() noexcept;

// Throws InvalidArgument when the backend is unavailable on this build/CPU.
void select(Backend backend);

std::string_view name(Backend backend) noexcept;
std::optional<Backend> parse_backend(std::string_view text) noexcept;

}  // namespace nckernel::simd
