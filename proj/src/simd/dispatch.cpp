#include <atomic>
#include <cstdlib>
#include <string>

#include "kernels_impl.hpp"
#include "nckernel/error.hpp"
#include "nckernel/simd/kernels.hpp"

namespace nckernel::simd {

namespace {

constexpr KernelTable kScalar{Backend::Scalar, detail::caxpy_scalar, detail::dot_conj_scalar};

#if defined(NCKERNEL_HAVE_AVX2)
constexpr KernelTable kAvx2{Backend::Avx2, detail::caxpy_avx2, detail::dot_conj_avx2};
#endif

const KernelTable* table_for(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar: return &kScalar;
    case Backend::Avx2: return avx2_kernels();
  }
  return nullptr;
}

const KernelTable* initial_table() noexcept {
  if (const char* env = std::getenv("NCKERNEL_SIMD")) {
    if (auto b = parse_backend(env); b && cpu_supports(*b)) return table_for(*b);
  }
  if (cpu_supports(Backend::Avx2)) return table_for(Backend::Avx2);
  return &kScalar;
}

std::atomic<const KernelTable*>& active_slot() noexcept {
  static std::atomic<const KernelTable*> slot{initial_table()};
  return slot;
}

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

const KernelTable* avx2_kernels() noexcept {
#if defined(NCKERNEL_HAVE_AVX2)
  return &kAvx2;
#else
  return nullptr;
#endif
}

bool cpu_supports(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar: return true;
    case Backend::Avx2:
#if defined(NCKERNEL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& active() noexcept { return *active_slot().load(std::memory_order_acquire); }

void select(Backend backend) {
  if (!cpu_supports(backend)) {
    throw Error(ErrorKind::InvalidArgument,
                "SIMD backend " + std::string(name(backend)) + " unavailable");
  }
  active_slot().store(table_for(backend), std::memory_order_release);
}

std::string_view name(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
  }
  return "unknown";
}

std::optional<Backend> parse_backend(std::string_view text) noexcept {
  if (text == "scalar") return Backend::Scalar;
  if (text == "avx2") return Backend::Avx2;
  return std::nullopt;
}

}  // namespace nckernel::simd
