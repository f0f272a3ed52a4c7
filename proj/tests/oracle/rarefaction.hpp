#pragma once

// Test-only oracle for the energy integrand built from the cavity
// determinants. A dilute medium of atoms (density N) outside the cavity has
// epsilon = 1 + 4 pi N alpha(ik). The O(N) part of ln Sigma, differentiated in
// d and stripped of its Omega = 0 value, gives the per-(l, k) integrand once
// the k-integral has been integrated by parts. Everything here is plain
// finite differencing of cavity_determinants().

#include <array>
#include <cmath>

#include "cpshell/mode_spectrum.hpp"
#include "cpshell/models.hpp"
#include "cpshell/special_functions.hpp"

namespace oracle {

struct Polarizations {
  double te = 0.0;
  double tm = 0.0;
};

struct RarefactionSteps {
  // The density step is chosen per k so that the permittivity step stays
  // fixed; a fixed N step would shrink with alpha(ik) into roundoff.
  double epsilon_step = 1e-2;
  double relative_d_step = 2e-2;
};

// (1 / 4 pi) d/dd [d/dN ln Sigma(Omega) - d/dN ln Sigma(0)] at N = 0, which
// equals alpha(ik) d/dd [d/d(eps) ln Sigma] renormalised.
inline Polarizations rarefied_integrand(int l, double k, const cpshell::ShellModel& shell,
                                        const cpshell::OscillatorAtom& atom, double d,
                                        RarefactionSteps steps = {}) {
  using namespace cpshell;
  const double pi = 3.141592653589793;
  const double a4pi = 4.0 * pi * polarizability_imag_axis(atom, k);
  const double step_n = steps.epsilon_step / a4pi;

  auto log_sigma = [&](const ShellModel& s, double dist, double eps) {
    const auto sig = cavity_determinants(ModeArgs::make(l, k, s, dist), s, eps);
    return std::array<double, 2>{std::log(sig.sigma_te), std::log(sig.sigma_tm)};
  };
  // one-sided five-point stencil in N (epsilon must stay >= 1)
  auto d_dn = [&](const ShellModel& s, double dist) {
    static constexpr std::array<double, 5> w{-25.0, 48.0, -36.0, 16.0, -3.0};
    std::array<double, 2> out{0.0, 0.0};
    for (int j = 0; j < 5; ++j) {
      const auto g = log_sigma(s, dist, 1.0 + a4pi * step_n * j);
      out[0] += w[j] * g[0];
      out[1] += w[j] * g[1];
    }
    return std::array<double, 2>{out[0] / (12.0 * step_n), out[1] / (12.0 * step_n)};
  };

  const auto bare = ShellModel::from_omega(shell.radius(), 0.0);
  const double h = steps.relative_d_step * d;
  static constexpr std::array<double, 4> off{-2.0, -1.0, 1.0, 2.0};
  static constexpr std::array<double, 4> w{1.0, -8.0, 8.0, -1.0};
  Polarizations out;
  for (int j = 0; j < 4; ++j) {
    const double dj = d + off[j] * h;
    const auto a = d_dn(shell, dj);
    const auto b = d_dn(bare, dj);
    out.te += w[j] * (a[0] - b[0]);
    out.tm += w[j] * (a[1] - b[1]);
  }
  out.te /= 12.0 * h * 4.0 * pi;
  out.tm /= 12.0 * h * 4.0 * pi;
  return out;
}

// Omega alpha(ik) times the two brackets of the closed-form energy integrand,
// assembled directly from the Riccati-Bessel functions and Jost functions.
inline Polarizations closed_form_integrand(int l, double k, const cpshell::ShellModel& shell,
                                           const cpshell::OscillatorAtom& atom, double d) {
  using namespace cpshell;
  const auto a = ModeArgs::make(l, k, shell, d);
  const auto qx = riccati_quad(l, a.x);
  const auto qz = riccati_quad(l, a.z);
  const double alpha = polarizability_imag_axis(atom, k);
  const double te = std::exp(2.0 * (qx.log_s + qz.log_e)) / jost_te(a, shell);
  const double tm = (std::exp(2.0 * (qx.log_sp + qz.log_ep_mag)) +
                     std::exp(2.0 * (qx.log_sp + qz.log_e)) * l * (l + 1) / (a.z * a.z)) /
                    jost_tm(a, shell);
  return {shell.omega() * alpha * te, shell.omega() * alpha * tm};
}

}  // namespace oracle
