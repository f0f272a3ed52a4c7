// Compiled with -mavx2 -mfma; only entered after a runtime CPU check.

#include <experimental/simd>

#include "cpshell/kernels.hpp"
#include "cpshell/special_functions.hpp"
#include "integrand_impl.hpp"

namespace cpshell::detail {

namespace stdx = std::experimental;

void integrand_batch_avx2(const IntegrandParams& p, std::span<const double> k, std::span<double> out) {
  using V = stdx::native_simd<double>;
  constexpr std::size_t width = V::size();
  std::size_t i = 0;
  if (p.l >= kDebyeMinOrder) {
    const double nu = p.l + 0.5;
    for (; i + width <= k.size(); i += width) {
      const V kv(&k[i], stdx::element_aligned);
      const LogQuad<V> qx = debye_log_quad<V>(nu, kv * p.radius);
      const LogQuad<V> qz = debye_log_quad<V>(nu, kv * p.cavity_radius);
      const V y = integrand_from_logs<V>(p, kv, qx, qz);
      y.copy_to(&out[i], stdx::element_aligned);
    }
  }
  for (; i < k.size(); ++i) out[i] = integrand_point(p, k[i]);
}

}  // namespace cpshell::detail
