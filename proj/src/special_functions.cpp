#include "cpshell/special_functions.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpshell/errors.hpp"
#include "debye_series.hpp"

namespace cpshell {
namespace detail {

namespace {

using Poly = std::vector<double>;  // dense, index = power of t

Poly derivative(const Poly& p) {
  Poly d(p.size() > 1 ? p.size() - 1 : 1, 0.0);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = static_cast<double>(i) * p[i];
  return d;
}

void add_to(Poly& acc, std::size_t power, double c) {
  if (acc.size() <= power) acc.resize(power + 1, 0.0);
  acc[power] += c;
}

DebyeCoefficients build_coefficients() {
  // u_{k+1} = t^2 (1 - t^2) u_k' / 2 + (1/8) int_0^t (1 - 5 s^2) u_k(s) ds
  // v_k     = u_k + t (t^2 - 1) (u_{k-1} / 2 + t u_{k-1}')
  std::vector<Poly> u(kDebyeTerms), v(kDebyeTerms);
  u[0] = {1.0};
  v[0] = {1.0};
  for (int k = 0; k + 1 < kDebyeTerms; ++k) {
    const Poly du = derivative(u[k]);
    Poly next;
    for (std::size_t i = 0; i < du.size(); ++i) {
      add_to(next, i + 2, 0.5 * du[i]);
      add_to(next, i + 4, -0.5 * du[i]);
    }
    for (std::size_t i = 0; i < u[k].size(); ++i) {
      add_to(next, i + 1, 0.125 * u[k][i] / static_cast<double>(i + 1));
      add_to(next, i + 3, -0.625 * u[k][i] / static_cast<double>(i + 3));
    }
    u[k + 1] = next;
  }
  for (int k = 1; k < kDebyeTerms; ++k) {
    Poly vk = u[k];
    const Poly& prev = u[k - 1];
    const Poly dprev = derivative(prev);
    Poly bracket;  // u_{k-1}/2 + t u_{k-1}'
    for (std::size_t i = 0; i < prev.size(); ++i) add_to(bracket, i, 0.5 * prev[i]);
    for (std::size_t i = 0; i < dprev.size(); ++i) add_to(bracket, i + 1, dprev[i]);
    for (std::size_t i = 0; i < bracket.size(); ++i) {
      add_to(vk, i + 3, bracket[i]);
      add_to(vk, i + 1, -bracket[i]);
    }
    v[k] = vk;
  }

  DebyeCoefficients out;
  for (int k = 0; k < kDebyeTerms; ++k) {
    for (int j = 0; j <= k; ++j) {
      const std::size_t power = static_cast<std::size_t>(k + 2 * j);
      out.u[k][j] = power < u[k].size() ? u[k][power] : 0.0;
      out.v[k][j] = power < v[k].size() ? v[k][power] : 0.0;
    }
  }
  return out;
}

}  // namespace

const DebyeCoefficients& debye_coefficients() {
  static const DebyeCoefficients table = build_coefficients();
  return table;
}

}  // namespace detail

namespace {

constexpr double kTinyArgument = 1e-100;

double log_double_factorial(int n) {
  // n!! for odd n >= -1
  double acc = 0.0;
  for (int k = n; k > 1; k -= 2) acc += std::log(static_cast<double>(k));
  return acc;
}

ScaledBesselQuad small_argument_quad(int l, double x) {
  const double lx = std::log(x);
  const double ldf_hi = log_double_factorial(2 * l + 1);
  const double ldf_lo = log_double_factorial(2 * l - 1);
  ScaledBesselQuad q;
  q.log_s = (l + 1) * lx - ldf_hi;
  q.log_e = ldf_lo - l * lx;
  q.log_sp = std::log(static_cast<double>(l + 1)) + l * lx - ldf_hi;
  q.log_ep_mag = (l == 0) ? 0.0 : std::log(static_cast<double>(l)) + ldf_lo - (l + 1) * lx;
  return q;
}

// s'_l / s_l from I_{nu}/I_{nu-1} = 1/(b0 + 1/(b1 + ...)), b_j = 2(nu + j)/x.
double log_derivative_s_cf(int l, double x, double tol) {
  const double nu = l + 0.5;
  constexpr double tiny = 1e-300;
  double f = 2.0 * nu / x;
  double c = f;
  double d = 0.0;
  const int max_iter = 100000 + static_cast<int>(4.0 * x);
  for (int j = 1; j < max_iter; ++j) {
    const double b = 2.0 * (nu + j) / x;
    d = b + d;
    if (d == 0.0) d = tiny;
    d = 1.0 / d;
    c = b + 1.0 / c;
    if (c == 0.0) c = tiny;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < tol) return f - l / x;
  }
  throw std::runtime_error("riccati_quad: continued fraction did not converge");
}

// Large-x closed form s_l(x) ~ e^x A_l(x) / 2 with
// A_l = sum_k (-1)^k (l+k)! / (k! (l-k)! (2x)^k); the e^-x branch is below
// double resolution once x >= 25.
double alternating_sum(int l, double x) {
  double term = 1.0;
  double acc = 1.0;
  const double inv2x = 0.5 / x;
  for (int k = 0; k < l; ++k) {
    term *= -static_cast<double>((l + k + 1) * (l - k)) / static_cast<double>(k + 1) * inv2x;
    acc += term;
  }
  return acc;
}

double log_derivative_s_large_x(int l, double x) {
  if (l == 0) return 1.0 / std::tanh(x);
  return alternating_sum(l - 1, x) / alternating_sum(l, x) - l / x;
}

ScaledBesselQuad low_order_quad(int l, double x, double tol) {
  if (x < kTinyArgument) return small_argument_quad(l, x);

  // Scaled e_hat_j = e_j e^x by the ratio recurrence rho_j = e_hat_j / e_hat_{j-1}.
  double log_ehat = 0.0;
  double q = 1.0;  // |e'_l| / e_l
  if (l >= 1) {
    double rho = 1.0 + 1.0 / x;
    double mant = rho;
    for (int j = 1; j < l; ++j) {
      rho = 1.0 / rho + (2.0 * j + 1.0) / x;
      mant *= rho;
      if (mant > 1e200) {
        log_ehat += std::log(mant);
        mant = 1.0;
      }
    }
    log_ehat += std::log(mant);
    q = 1.0 / rho + l / x;
  }

  const double r = (x >= std::max(25.0, static_cast<double>(l) * (l + 1)))
                       ? log_derivative_s_large_x(l, x)
                       : log_derivative_s_cf(l, x, tol);

  ScaledBesselQuad out;
  out.log_e = log_ehat - x;
  out.log_ep_mag = out.log_e + std::log(q);
  // Wronskian s e' - s' e = -1  =>  s = 1 / (e (r + q))
  out.log_s = -out.log_e - std::log(r + q);
  out.log_sp = out.log_s + std::log(r);
  return out;
}

}  // namespace

ScaledBesselQuad riccati_quad(int l, double x, const BesselConfig& config) {
  if (!(x > 0.0)) throw DomainError("riccati_quad: argument must be positive");
  if (l < 0 || l > config.l_ceiling)
    throw DomainError("riccati_quad: order " + std::to_string(l) + " outside [0, l_ceiling]");

  ScaledBesselQuad q;
  if (l >= kDebyeMinOrder) {
    const auto d = detail::debye_log_quad<double>(l + 0.5, x);
    q = {d.log_s, d.log_e, d.log_sp, d.log_ep_mag};
  } else {
    const double tol = std::max(config.rel_accuracy * 1e-3, 4 * std::numeric_limits<double>::epsilon());
    q = low_order_quad(l, x, tol);
  }
  if (!std::isfinite(q.log_s) || !std::isfinite(q.log_e) || !std::isfinite(q.log_sp) ||
      !std::isfinite(q.log_ep_mag))
    throw std::overflow_error("riccati_quad: log representation out of range");
  return q;
}

DebyePoint debye_point(double y) {
  if (!(y > 0.0)) throw DomainError("debye_point: argument must be positive");
  const double w = std::sqrt(1.0 + y * y);
  return {y, 1.0 / w, w + std::log(y / (1.0 + w))};
}

}  // namespace cpshell
