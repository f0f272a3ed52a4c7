#include <cstddef>

#include "cpshell/kernels.hpp"
#include "cpshell/special_functions.hpp"
#include "integrand_impl.hpp"

namespace cpshell {
namespace {

detail::LogQuad<double> to_logs(const ScaledBesselQuad& q) { return {q.log_s, q.log_e, q.log_sp, q.log_ep_mag}; }

}  // namespace

double integrand_point(const IntegrandParams& p, double k) {
  const auto qx = to_logs(riccati_quad(p.l, k * p.radius));
  const auto qz = to_logs(riccati_quad(p.l, k * p.cavity_radius));
  return detail::integrand_from_logs<double>(p, k, qx, qz);
}

namespace detail {

void integrand_batch_scalar(const IntegrandParams& p, std::span<const double> k, std::span<double> out) {
  for (std::size_t i = 0; i < k.size(); ++i) out[i] = integrand_point(p, k[i]);
}

}  // namespace detail
}  // namespace cpshell
