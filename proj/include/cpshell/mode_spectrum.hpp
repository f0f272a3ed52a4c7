#pragma once

// Imaginary-axis mode determinants of the conducting shell (radius R) inside
// a vacuum cavity of radius L = R + d embedded in a medium of permittivity
// epsilon (mu = 1).

#include "cpshell/models.hpp"
#include "cpshell/special_functions.hpp"

namespace cpshell {

struct ModeArgs {
  int l = 1;
  double k = 0.0;  // imaginary-axis wavenumber, nm^-1
  double x = 0.0;  // k R
  double z = 0.0;  // k L

  double nu() const { return l + 0.5; }

  /// Throws DomainError unless l >= 1, k > 0, d > 0.
  static ModeArgs make(int l, double k, const ShellModel& shell, double d);
};

/// f_TE(ik) = 1 + (Omega/k) s_l(x) e_l(x)
double jost_te(const ModeArgs& args, const ShellModel& shell);
/// f_TM(ik) = 1 - (Omega/k) s'_l(x) e'_l(x)
double jost_tm(const ModeArgs& args, const ShellModel& shell);

/// ln f_TE, ln f_TM from the log-scaled quad at x; omega_over_k may be zero.
double log_jost_te(const ScaledBesselQuad& at_x, double omega_over_k);
double log_jost_tm(const ScaledBesselQuad& at_x, double omega_over_k);

struct CavityDeterminants {
  double sigma_te = 0.0;
  double sigma_tm = 0.0;
};

/// At epsilon = 1 these reduce to (f_TE, z^2 f_TM).
CavityDeterminants cavity_determinants(const ModeArgs& args, const ShellModel& shell, double epsilon);

}  // namespace cpshell
