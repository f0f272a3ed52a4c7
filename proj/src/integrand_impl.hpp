#pragma once

#include <algorithm>
#include <cmath>

#include "cpshell/kernels.hpp"
#include "debye_series.hpp"

namespace cpshell::detail {

template <class V>
V softplus(const V& a) {
  using std::abs;
  using std::exp;
  using std::log;
  using std::max;
  return max(a, V(0.0)) + log(exp(-abs(a)) + 1.0);
}

// Combines log-scaled quads at x = kR and z = kL into the integrand.
template <class V>
V integrand_from_logs(const IntegrandParams& p, const V& k, const LogQuad<V>& qx, const LogQuad<V>& qz) {
  using std::exp;
  using std::log;
  const double nu = p.l + 0.5;
  const double log_lambda = std::log(static_cast<double>(p.l) * (p.l + 1.0));

  const V log_z = log(k * p.cavity_radius);
  const V log_te = 2.0 * (qx.log_s + qz.log_e);
  const V log_tm_radial = 2.0 * (qx.log_sp + qz.log_ep_mag);
  const V log_tm_angular = 2.0 * (qx.log_sp + qz.log_e - log_z) + log_lambda;

  const V r = k * (1.0 / p.k_a);
  const V alpha = p.alpha0 / (r * r + 1.0);

  if (p.route == IntegrandRoute::Boyer) {
    const V den_te = qx.log_s + qx.log_e;
    const V den_tm = qx.log_sp + qx.log_ep_mag;
    return nu * k * alpha *
           (exp(log_te - den_te) + exp(log_tm_radial - den_tm) + exp(log_tm_angular - den_tm));
  }
  if (p.omega == 0.0)
    return nu * alpha * (exp(log_te) + exp(log_tm_radial) + exp(log_tm_angular));
  const V log_omega_k = log(p.omega / k);
  const V den_te = softplus(log_omega_k + qx.log_s + qx.log_e);
  const V den_tm = softplus(log_omega_k + qx.log_sp + qx.log_ep_mag);
  return nu * alpha * (exp(log_te - den_te) + exp(log_tm_radial - den_tm) + exp(log_tm_angular - den_tm));
}

}  // namespace cpshell::detail
