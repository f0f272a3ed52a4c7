#include "cpshell/asymptotics.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <vector>

#include "cpshell/errors.hpp"
#include "cpshell/quadrature.hpp"

namespace cpshell {

using units::kHbarC;
using units::kPi;

namespace {

void check_distance(double d) {
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("distance must be positive");
}

QuadOptions closed_form_options() {
  QuadOptions o;
  o.rel_tol = 1e-13;
  o.max_panels = 2000;
  return o;
}

}  // namespace

double plate_S(double v) {
  if (!(v > 0.0)) throw DomainError("plate_S: v must be positive");
  const double inv4v2 = 0.25 / (v * v);
  auto f = [inv4v2](std::span<const double> t, std::span<double> y) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double g = 1.0 / (1.0 + t[i] * t[i] * inv4v2);
      y[i] = std::exp(-t[i]) * ((1.0 + t[i]) * g + t[i] * g * g);
    }
  };
  // features at t ~ 2v (Lorentzian cut-off) and t ~ 1 (exponential)
  const double lo = std::min(2.0 * v, 1.0), hi = std::max(2.0 * v, 1.0);
  const auto breaks = geometric_breaks(lo / 8.0, std::min(hi * 8.0, 64.0), 4.0);
  return integrate_half_line(f, 1.0, breaks, closed_form_options()).value / 3.0;
}

double plate_energy(const OscillatorAtom& atom, double d) {
  check_distance(d);
  return -3.0 * kHbarC * atom.alpha_static / (8.0 * kPi * d * d * d * d) * plate_S(d * atom.k_a);
}

double crossover_F(double a) {
  if (!(a >= 0.0)) throw DomainError("crossover_F: a must be non-negative");
  if (a == 0.0) return 0.0;
  const double two_a2 = 2.0 * a * a;
  auto f = [two_a2](std::span<const double> y, std::span<double> out) {
    for (std::size_t i = 0; i < y.size(); ++i) {
      const double t = y[i];
      const double poly = (((t + 2.0) * t + 5.0) * t + 6.0) * t + 3.0;
      out[i] = poly / (3.0 * t * t + two_a2) * std::exp(-2.0 * t);
    }
  };
  const double width = a * std::sqrt(2.0 / 3.0);
  const double lo = std::min(width, 1.0), hi = std::max(width, 1.0);
  const auto breaks = geometric_breaks(lo / 8.0, std::min(hi * 8.0, 64.0), 4.0);
  return 8.0 * a * a / 23.0 * integrate_half_line(f, 1.0, breaks, closed_form_options()).value;
}

double large_d_S(const ShellModel& shell, double d) {
  check_distance(d);
  const double q = shell.q();
  const double r_over_d = shell.radius() / d;
  const double a = std::sqrt(q) / r_over_d;
  return r_over_d * r_over_d * r_over_d * (7.0 * q / (3.0 * (3.0 + q)) + 46.0 / 3.0 * crossover_F(a));
}

double large_d_coefficient(const ShellModel& shell, const OscillatorAtom& atom) {
  const double q = shell.q();
  const double r3 = shell.radius() * shell.radius() * shell.radius();
  return kHbarC * atom.alpha_static * r3 * (53.0 * q + 138.0) / (8.0 * kPi * (3.0 + q));
}

double large_d_energy(const ShellModel& shell, const OscillatorAtom& atom, double d) {
  check_distance(d);
  const double q = shell.q();
  const double r3 = shell.radius() * shell.radius() * shell.radius();
  const double d7 = std::pow(d, 7);
  return -kHbarC * atom.alpha_static * r3 * (53.0 * q + 138.0) / (8.0 * kPi * (3.0 + q) * d7);
}

double small_d_energy(const OscillatorAtom& atom, double d) {
  check_distance(d);
  return -kHbarC * atom.alpha_static * atom.k_a / (8.0 * d * d * d);
}

double shell_static_polarizability(const ShellModel& shell) {
  const double q = shell.q();
  const double r = shell.radius();
  return r * r * r * (53.0 * q + 138.0) / (46.0 * q + 138.0);
}

double two_atom_energy(double alpha1, double alpha2, double d) {
  check_distance(d);
  return -23.0 / (4.0 * kPi) * kHbarC * alpha1 * alpha2 / std::pow(d, 7);
}

PowerLawFit fit_power_law(std::span<const CurvePoint> curve, double d_min, double d_max,
                          std::optional<double> fixed_exponent) {
  std::vector<double> lx, ly;
  double sign = 0.0;
  double lo_used = std::numeric_limits<double>::infinity(), hi_used = 0.0;
  for (const auto& p : curve) {
    if (p.d < d_min || p.d > d_max) continue;
    if (!(p.d > 0.0)) throw InsufficientDataError("fit_power_law: non-positive distance");
    if (p.energy == 0.0 || !std::isfinite(p.energy))
      throw InsufficientDataError("fit_power_law: zero or non-finite energy in window");
    const double s = p.energy < 0.0 ? -1.0 : 1.0;
    if (sign != 0.0 && s != sign) throw InsufficientDataError("fit_power_law: energies change sign");
    sign = s;
    lo_used = std::min(lo_used, p.d);
    hi_used = std::max(hi_used, p.d);
    lx.push_back(std::log(p.d));
    ly.push_back(std::log(std::abs(p.energy)));
  }
  if (lx.size() < 3) throw InsufficientDataError("fit_power_law: need at least 3 points in the window");

  const double n = static_cast<double>(lx.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double slope = 0.0;
  if (fixed_exponent) {
    slope = *fixed_exponent;
  } else {
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      sxx += (lx[i] - mx) * (lx[i] - mx);
      sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx == 0.0) throw InsufficientDataError("fit_power_law: all points at one distance");
    slope = sxy / sxx;
  }
  const double intercept = my - slope * mx;

  PowerLawFit fit;
  fit.exponent = slope;
  fit.coefficient = std::exp(intercept);
  fit.sign = sign;
  fit.d_min = lo_used;
  fit.d_max = hi_used;
  fit.points = static_cast<int>(lx.size());
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double model = intercept + slope * lx[i];
    fit.residual = std::max(fit.residual, std::abs(std::expm1(model - ly[i])));
  }
  return fit;
}

}  // namespace cpshell
