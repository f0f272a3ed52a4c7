#include <cstdlib>
#include <string>

#include "cpshell/kernels.hpp"

namespace cpshell {
namespace detail {
void integrand_batch_scalar(const IntegrandParams& p, std::span<const double> k, std::span<double> out);
#ifdef CPSHELL_HAVE_AVX2_KERNEL
void integrand_batch_avx2(const IntegrandParams& p, std::span<const double> k, std::span<double> out);
#endif
}  // namespace detail

bool kernel_available(KernelIsa isa) {
  switch (isa) {
    case KernelIsa::Scalar:
      return true;
    case KernelIsa::Avx2:
#ifdef CPSHELL_HAVE_AVX2_KERNEL
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

KernelIsa best_kernel() {
  static const KernelIsa chosen = [] {
    if (const char* env = std::getenv("CPSHELL_KERNEL")) {
      if (auto isa = parse_kernel_name(env); isa && kernel_available(*isa)) return *isa;
    }
    return kernel_available(KernelIsa::Avx2) ? KernelIsa::Avx2 : KernelIsa::Scalar;
  }();
  return chosen;
}

void integrand_batch(KernelIsa isa, const IntegrandParams& p, std::span<const double> k, std::span<double> out) {
#ifdef CPSHELL_HAVE_AVX2_KERNEL
  if (isa == KernelIsa::Avx2 && kernel_available(KernelIsa::Avx2)) {
    detail::integrand_batch_avx2(p, k, out);
    return;
  }
#endif
  (void)isa;
  detail::integrand_batch_scalar(p, k, out);
}

std::string_view kernel_name(KernelIsa isa) { return isa == KernelIsa::Avx2 ? "avx2" : "scalar"; }

std::optional<KernelIsa> parse_kernel_name(std::string_view name) {
  if (name == "scalar") return KernelIsa::Scalar;
  if (name == "avx2") return KernelIsa::Avx2;
  return std::nullopt;
}

}  // namespace cpshell
