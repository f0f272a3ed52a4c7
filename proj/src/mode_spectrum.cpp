#include "cpshell/mode_spectrum.hpp"

#include <cmath>

#include "cpshell/errors.hpp"

namespace cpshell {

ModeArgs ModeArgs::make(int l, double k, const ShellModel& shell, double d) {
  if (l < 1) throw DomainError("mode: angular momentum must be >= 1");
  if (!(k > 0.0)) throw DomainError("mode: wavenumber must be positive");
  if (!(d > 0.0)) throw DomainError("mode: distance must be positive");
  return {l, k, k * shell.radius(), k * (shell.radius() + d)};
}

namespace {

// ln(1 + e^a) without overflow.
double softplus(double a) { return a > 0.0 ? a + std::log1p(std::exp(-a)) : std::log1p(std::exp(a)); }

}  // namespace

double log_jost_te(const ScaledBesselQuad& at_x, double omega_over_k) {
  if (omega_over_k == 0.0) return 0.0;
  return softplus(std::log(omega_over_k) + at_x.log_s + at_x.log_e);
}

double log_jost_tm(const ScaledBesselQuad& at_x, double omega_over_k) {
  if (omega_over_k == 0.0) return 0.0;
  return softplus(std::log(omega_over_k) + at_x.log_sp + at_x.log_ep_mag);
}

double jost_te(const ModeArgs& args, const ShellModel& shell) {
  if (!(args.k > 0.0)) throw DomainError("jost_te: wavenumber must be positive");
  return std::exp(log_jost_te(riccati_quad(args.l, args.x), shell.omega() / args.k));
}

double jost_tm(const ModeArgs& args, const ShellModel& shell) {
  if (!(args.k > 0.0)) throw DomainError("jost_tm: wavenumber must be positive");
  return std::exp(log_jost_tm(riccati_quad(args.l, args.x), shell.omega() / args.k));
}

CavityDeterminants cavity_determinants(const ModeArgs& args, const ShellModel& shell, double epsilon) {
  if (!(args.k > 0.0)) throw DomainError("cavity_determinants: wavenumber must be positive");
  if (!(epsilon >= 1.0)) throw DomainError("cavity_determinants: epsilon must be >= 1");
  const double root_eps = std::sqrt(epsilon);
  const ScaledBesselQuad qx = riccati_quad(args.l, args.x);
  const ScaledBesselQuad qz = riccati_quad(args.l, args.z);
  const ScaledBesselQuad qe = riccati_quad(args.l, args.z * root_eps);
  const double c = shell.omega() / args.k;  // Q / x

  // Every product below pairs growing and decaying factors; exponentiate the
  // summed logs so no single factor has to be representable.
  const auto ex = [](double log_sum) { return std::exp(log_sum); };

  // TE: Phi = s(z) + c s(x) [s(z) e(x) - s(x) e(z)],  Phi' = d/dz at fixed x.
  // E = e(z_eps) (> 0), E' = e'(z_eps) (< 0).
  const double le = qe.log_e, lep = qe.log_ep_mag;
  const double e_phi_te_d = ex(le + qz.log_sp) +
                            c * (ex(le + qx.log_s + qz.log_sp + qx.log_e) + ex(le + 2 * qx.log_s + qz.log_ep_mag));
  const double ep_phi_te = ex(lep + qz.log_s) +
                           c * (ex(lep + qx.log_s + qz.log_s + qx.log_e) - ex(lep + 2 * qx.log_s + qz.log_e));
  // Sigma_TE = E Phi'/sqrt(eps) - E' Phi = E Phi'/sqrt(eps) + |E'| Phi
  const double sigma_te = e_phi_te_d / root_eps + ep_phi_te;

  // TM: Phi = s(z) - c s'(x) [s(z) e'(x) - s'(x) e(z)]
  //         = s(z) + c s'(x) [s(z) |e'(x)| + s'(x) e(z)]
  //     Phi' = s'(z) + c s'(x) [s'(z) |e'(x)| - s'(x) |e'(z)|]
  const double e_phi_tm_d = ex(le + qz.log_sp) +
                            c * (ex(le + qx.log_sp + qz.log_sp + qx.log_ep_mag) -
                                 ex(le + 2 * qx.log_sp + qz.log_ep_mag));
  const double ep_phi_tm = ex(lep + qz.log_s) +
                           c * (ex(lep + qx.log_sp + qz.log_s + qx.log_ep_mag) + ex(lep + 2 * qx.log_sp + qz.log_e));
  // Sigma_TM = z^2 { E Phi' - E' Phi / sqrt(eps) }
  const double sigma_tm = args.z * args.z * (e_phi_tm_d + ep_phi_tm / root_eps);

  return {sigma_te, sigma_tm};
}

}  // namespace cpshell
