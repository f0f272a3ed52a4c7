#include "cpshell/energy_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include "cpshell/errors.hpp"
#include "cpshell/quadrature.hpp"

namespace cpshell {

namespace {

void check_distance(double d) {
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("distance must be positive");
}

void check_settings(const QuadratureSettings& s) {
  if (!(s.rel_tol > 0.0)) throw DomainError("rel_tol must be positive");
  if (!(s.abs_tol >= 0.0)) throw DomainError("abs_tol must be non-negative");
  if (s.l_stop_consecutive < 1) throw DomainError("l_stop_consecutive must be >= 1");
  if (s.l_max < 1) throw DomainError("l_max must be >= 1");
}

// Natural wavenumber scales of the l-th integrand, used as seed breakpoints.
std::vector<double> seed_breaks(const IntegrandParams& p) {
  const double nu = p.l + 0.5;
  const double d = p.cavity_radius - p.radius;
  std::vector<double> scales{p.k_a, 1.0 / d, nu / p.cavity_radius, nu / p.radius};
  if (p.route == IntegrandRoute::FiniteOmega && p.omega > 0.0)
    scales.push_back(std::sqrt(p.omega * nu / p.radius));
  const auto [lo, hi] = std::minmax_element(scales.begin(), scales.end());
  return geometric_breaks(*lo / 8.0, *hi * 8.0, 8.0);
}

struct LSum {
  double sum = 0.0;
  double quad_error = 0.0;
  double tail_error = 0.0;
  int l_last = 0;
  bool converged = true;
};

// Sums the positive l-integrals. Stops once the geometric tail estimate
// term_l * rho / (1 - rho), rho = term_l / term_{l-1}, together with term_l
// stays below rel_tol |sum| / 2 for l_stop_consecutive consecutive orders.
LSum sum_over_l(IntegrandParams p, double integral_abs_tol, double k_scale, const QuadratureSettings& s) {
  const KernelIsa isa = s.kernel.value_or(best_kernel());
  QuadOptions qopt;
  qopt.rel_tol = 0.1 * s.rel_tol;
  qopt.abs_tol = integral_abs_tol;
  qopt.max_panels = s.max_panels_per_l;

  LSum out;
  double previous = 0.0;
  int quiet = 0;
  for (int l = 1; l <= s.l_max; ++l) {
    p.l = l;
    auto batch = [&p, isa](std::span<const double> k, std::span<double> y) { integrand_batch(isa, p, k, y); };
    const QuadResult r = integrate_half_line(batch, k_scale, seed_breaks(p), qopt);
    out.converged = out.converged && r.converged;
    out.sum += r.value;
    out.quad_error += r.abs_error;
    out.l_last = l;

    const double ratio = previous > 0.0 ? r.value / previous : 1.0;
    const double tail = ratio < 1.0 ? r.value * ratio / (1.0 - ratio) : std::numeric_limits<double>::infinity();
    previous = r.value;
    if (r.value == 0.0 || r.value + tail <= 0.5 * s.rel_tol * std::abs(out.sum)) {
      out.tail_error = r.value == 0.0 ? 0.0 : tail;
      if (++quiet >= s.l_stop_consecutive) return out;
    } else {
      quiet = 0;
    }
  }
  out.converged = false;
  out.tail_error = previous;
  return out;
}

EnergyResult finish(double d, const OscillatorAtom& atom, double prefactor, const LSum& sum) {
  EnergyResult res;
  res.distance = d;
  res.energy = -prefactor * sum.sum;
  res.s_factor = -res.energy / plate_energy_scale(atom, d);
  res.l_max_used = sum.l_last;
  res.est_rel_err = sum.sum != 0.0 ? (sum.quad_error + sum.tail_error) / std::abs(sum.sum) : 0.0;
  res.converged = sum.converged;
  return res;
}

double transform_scale(const QuadratureSettings& s, const OscillatorAtom& atom, double d) {
  return s.k_transform_scale > 0.0 ? s.k_transform_scale : std::max(1.0 / d, atom.k_a);
}

template <class PointFn>
std::vector<EnergyResult> evaluate_grid(std::span<const double> grid, int threads, PointFn fn) {
  std::vector<EnergyResult> out(grid.size());
  if (threads <= 1 || grid.size() < 2) {
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = fn(grid[i]);
    return out;
  }
  // Strided static partition; each slot is written by exactly one task.
  const std::size_t n_tasks = std::min<std::size_t>(static_cast<std::size_t>(threads), grid.size());
  std::vector<std::future<void>> tasks;
  for (std::size_t t = 0; t < n_tasks; ++t) {
    tasks.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < grid.size(); i += n_tasks) out[i] = fn(grid[i]);
    }));
  }
  for (auto& f : tasks) f.get();
  return out;
}

void check_grid(std::span<const double> grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    check_distance(grid[i]);
    if (i > 0 && !(grid[i] > grid[i - 1])) throw DomainError("distance grid must be strictly increasing");
  }
}

}  // namespace

double plate_energy_scale(const OscillatorAtom& atom, double d) {
  check_distance(d);
  return 3.0 * units::kHbarC * atom.alpha_static / (8.0 * units::kPi * d * d * d * d);
}

double integrand_term(int l, double k, const ShellModel& shell, const OscillatorAtom& atom, double d) {
  if (l < 1) throw DomainError("integrand_term: l must be >= 1");
  if (!(k > 0.0)) throw DomainError("integrand_term: wavenumber must be positive");
  check_distance(d);
  const IntegrandParams p{l, shell.radius(), shell.radius() + d, shell.omega(), atom.alpha_static, atom.k_a,
                          IntegrandRoute::FiniteOmega};
  return integrand_point(p, k);
}

double boyer_integrand_term(int l, double k, double radius, const OscillatorAtom& atom, double d) {
  if (l < 1) throw DomainError("boyer_integrand_term: l must be >= 1");
  if (!(k > 0.0)) throw DomainError("boyer_integrand_term: wavenumber must be positive");
  if (!(radius > 0.0)) throw DomainError("boyer_integrand_term: radius must be positive");
  check_distance(d);
  const IntegrandParams p{l, radius, radius + d, 0.0, atom.alpha_static, atom.k_a, IntegrandRoute::Boyer};
  return integrand_point(p, k);
}

EnergyResult energy(const ShellModel& shell, const OscillatorAtom& atom, double d, const QuadratureSettings& settings) {
  check_distance(d);
  check_settings(settings);
  if (shell.omega() == 0.0) {
    EnergyResult zero;
    zero.distance = d;
    return zero;
  }
  const double L = shell.radius() + d;
  const double prefactor = units::kHbarC * shell.omega() / (units::kPi * L * L);
  const IntegrandParams p{1, shell.radius(), L, shell.omega(), atom.alpha_static, atom.k_a,
                          IntegrandRoute::FiniteOmega};
  const LSum sum = sum_over_l(p, settings.abs_tol / prefactor, transform_scale(settings, atom, d), settings);
  return finish(d, atom, prefactor, sum);
}

EnergyResult energy_boyer(double radius, const OscillatorAtom& atom, double d, const QuadratureSettings& settings) {
  check_distance(d);
  check_settings(settings);
  if (!(radius > 0.0)) throw DomainError("radius must be positive");
  const double L = radius + d;
  const double prefactor = units::kHbarC / (units::kPi * L * L);
  const IntegrandParams p{1, radius, L, 0.0, atom.alpha_static, atom.k_a, IntegrandRoute::Boyer};
  const LSum sum = sum_over_l(p, settings.abs_tol / prefactor, transform_scale(settings, atom, d), settings);
  return finish(d, atom, prefactor, sum);
}

std::vector<EnergyResult> energy_curve(const ShellModel& shell, const OscillatorAtom& atom,
                                       std::span<const double> d_grid, const QuadratureSettings& settings) {
  check_grid(d_grid);
  return evaluate_grid(d_grid, settings.threads, [&](double d) { return energy(shell, atom, d, settings); });
}

std::vector<EnergyResult> energy_boyer_curve(double radius, const OscillatorAtom& atom,
                                             std::span<const double> d_grid, const QuadratureSettings& settings) {
  check_grid(d_grid);
  return evaluate_grid(d_grid, settings.threads,
                       [&](double d) { return energy_boyer(radius, atom, d, settings); });
}

}  // namespace cpshell
