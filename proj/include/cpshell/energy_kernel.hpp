#pragma once

// Renormalised atom-shell interaction energy
//
//   E = -(hbar c Omega / (pi L^2)) sum_{l>=1} nu int_0^inf dk alpha(ik)
//         { s_l^2(x) e_l^2(z) / f_TE + [s'^2 e'^2 + s'^2 e^2 (nu^2 - 1/4)/z^2] / f_TM }
//
// with x = kR, z = kL, L = R + d, and its perfect-conductor (Boyer) limit.

#include <optional>
#include <span>
#include <vector>

#include "cpshell/kernels.hpp"
#include "cpshell/models.hpp"

namespace cpshell {

struct QuadratureSettings {
  double rel_tol = 1e-8;
  double abs_tol = 0.0;           // eV; absolute floor on the quadrature error
  int l_stop_consecutive = 2;
  double k_transform_scale = 0.0;  // nm^-1; <= 0 selects max(1/d, k_a)
  int l_max = 1'000'000;
  int max_panels_per_l = 4000;
  int threads = 1;                 // energy_curve only
  std::optional<KernelIsa> kernel; // unset: best_kernel()
};

struct EnergyResult {
  double distance = 0.0;    // nm
  double energy = 0.0;      // eV, negative = attractive
  double s_factor = 0.0;    // E = -(3 hbar c alpha(0) / (8 pi d^4)) S
  int l_max_used = 0;
  double est_rel_err = 0.0;
  bool converged = true;
};

/// nu alpha(ik) {...} of the finite-Omega formula, without the Omega prefactor.
double integrand_term(int l, double k, const ShellModel& shell, const OscillatorAtom& atom, double d);
/// nu k alpha(ik) {...} of the Boyer formula.
double boyer_integrand_term(int l, double k, double radius, const OscillatorAtom& atom, double d);

EnergyResult energy(const ShellModel& shell, const OscillatorAtom& atom, double d,
                    const QuadratureSettings& settings = {});
EnergyResult energy_boyer(double radius, const OscillatorAtom& atom, double d,
                          const QuadratureSettings& settings = {});

/// Point-wise energy() over a grid, results in grid order.
std::vector<EnergyResult> energy_curve(const ShellModel& shell, const OscillatorAtom& atom,
                                       std::span<const double> d_grid, const QuadratureSettings& settings = {});
std::vector<EnergyResult> energy_boyer_curve(double radius, const OscillatorAtom& atom,
                                             std::span<const double> d_grid,
                                             const QuadratureSettings& settings = {});

/// 3 hbar c alpha(0) / (8 pi d^4), the plate Casimir-Polder scale.
double plate_energy_scale(const OscillatorAtom& atom, double d);

}  // namespace cpshell
