#pragma once

// Closed-form limits of the atom-shell energy and log-log power-law fits.

#include <optional>
#include <span>

#include "cpshell/models.hpp"

namespace cpshell {

/// Plate crossover S(v), v = d k_a:
/// S = (1/3) int_0^inf dt e^-t { (1+t)/(1+t^2/4v^2) + t/(1+t^2/4v^2)^2 }.
double plate_S(double v);
/// -(3 hbar c alpha(0) / (8 pi d^4)) S(d k_a)
double plate_energy(const OscillatorAtom& atom, double d);

/// F(a) = (8a^2/23) int_0^inf (y^4+2y^3+5y^2+6y+3)/(3y^2+2a^2) e^-2y dy; F(0) = 0, F(inf) = 1.
double crossover_F(double a);

/// Large-distance S: (R^3/d^3) { 7Q/(3(3+Q)) + (46/3) F(a) }, a^2 = Q d^2 / R^2.
double large_d_S(const ShellModel& shell, double d);
/// -hbar c alpha(0) R^3 (53Q + 138) / (8 pi (3+Q) d^7)
double large_d_energy(const ShellModel& shell, const OscillatorAtom& atom, double d);
/// Coefficient C of E ~ -C / d^7 (eV nm^7).
double large_d_coefficient(const ShellModel& shell, const OscillatorAtom& atom);

/// -hbar c alpha(0) k_a / (8 d^3)
double small_d_energy(const OscillatorAtom& atom, double d);

/// alpha_f = R^3 (53Q + 138) / (46Q + 138)
double shell_static_polarizability(const ShellModel& shell);

/// -(23 / 4 pi) hbar c alpha1 alpha2 / d^7
double two_atom_energy(double alpha1, double alpha2, double d);

struct CurvePoint {
  double d = 0.0;
  double energy = 0.0;
};

struct PowerLawFit {
  double exponent = 0.0;     // E = sign * coefficient * d^exponent
  double coefficient = 0.0;  // > 0, units eV nm^-exponent
  double sign = -1.0;
  double d_min = 0.0;        // extent of the points actually used
  double d_max = 0.0;
  int points = 0;
  double residual = 0.0;     // max |E_fit - E| / |E| over the window
};

/// Unweighted least squares of ln|E| against ln d over points with
/// d_min <= d <= d_max. With fixed_exponent set only the coefficient is fitted.
/// Throws InsufficientDataError for fewer than 3 points in the window, a zero
/// energy, or mixed signs.
PowerLawFit fit_power_law(std::span<const CurvePoint> curve, double d_min, double d_max,
                          std::optional<double> fixed_exponent = std::nullopt);

}  // namespace cpshell
