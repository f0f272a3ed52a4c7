#pragma once

// Uniform (Debye) expansion of I_nu(nu y), K_nu(nu y) and their derivatives,
// written once for scalar and SIMD value types. V must provide arithmetic
// with double, and unqualified sqrt/log found by ADL or std.

#include <array>
#include <cmath>

namespace cpshell::detail {

// Terms u_0 .. u_{kDebyeTerms-1} are kept.
inline constexpr int kDebyeTerms = 14;

// u_k(t) = t^k * sum_j coeff[k][j] * t^(2j), j = 0..k; same layout for v_k.
struct DebyeCoefficients {
  std::array<std::array<double, kDebyeTerms>, kDebyeTerms> u{};
  std::array<std::array<double, kDebyeTerms>, kDebyeTerms> v{};
};

const DebyeCoefficients& debye_coefficients();

template <class V>
struct LogQuad {
  V log_s;
  V log_e;
  V log_sp;
  V log_ep_mag;
};

template <class V>
struct DebyeSums {
  V u_plus;   // sum u_k(t) / nu^k
  V u_minus;  // sum (-1)^k u_k(t) / nu^k
  V v_plus;
  V v_minus;
};

template <class V>
DebyeSums<V> debye_sums(double nu, const V& t) {
  const auto& c = debye_coefficients();
  const V t2 = t * t;
  V tk = t * 0.0 + 1.0;
  V up = tk, um = tk, vp = tk, vm = tk;
  const double inv_nu = 1.0 / nu;
  double p = 1.0;
  for (int k = 1; k < kDebyeTerms; ++k) {
    tk = tk * t;
    p *= inv_nu;
    V pu = t * 0.0 + c.u[k][k];
    V pv = t * 0.0 + c.v[k][k];
    for (int j = k - 1; j >= 0; --j) {
      pu = pu * t2 + c.u[k][j];
      pv = pv * t2 + c.v[k][j];
    }
    const V uk = tk * pu * p;
    const V vk = tk * pv * p;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    up = up + uk;
    um = um + sign * uk;
    vp = vp + vk;
    vm = vm + sign * vk;
  }
  return {up, um, vp, vm};
}

template <class V>
LogQuad<V> debye_log_quad(double nu, const V& x) {
  using std::log;
  using std::sqrt;
  const V y = x * (1.0 / nu);
  const V w = sqrt(y * y + 1.0);
  const V t = 1.0 / w;
  const V nu_eta = nu * (w + log(y / (w + 1.0)));
  const DebyeSums<V> sums = debye_sums(nu, t);
  const V half_log_yw = 0.5 * log(y / w);
  const V log_x = log(x);

  LogQuad<V> q;
  q.log_s = half_log_yw - 0.69314718055994530942 + nu_eta + log(sums.u_plus);
  q.log_e = half_log_yw - nu_eta + log(sums.u_minus);
  q.log_sp = q.log_s + log(nu * w * sums.v_plus / sums.u_plus + 0.5) - log_x;
  q.log_ep_mag = q.log_e + log(nu * w * sums.v_minus / sums.u_minus - 0.5) - log_x;
  return q;
}

}  // namespace cpshell::detail
