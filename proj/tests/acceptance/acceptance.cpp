// Acceptance checks. Prints one [PASS]/[FAIL] line per criterion and exits
// non-zero if any criterion fails. All tolerances are fixed below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cpshell/asymptotics.hpp"
#include "cpshell/energy_kernel.hpp"
#include "cpshell/mode_spectrum.hpp"
#include "cpshell/special_functions.hpp"
#include "../oracle/rarefaction.hpp"

using namespace cpshell;

namespace tol {
constexpr double kContactTarget = 3.8, kContactBand = 0.1, kContactSeconds = 10.0;
constexpr double kPlateTarget = 6.4, kPlateBand = 0.2, kPlateSeconds = 1.0;
constexpr double kPrefactorTarget = 0.0156, kPrefactorRel = 0.005;
constexpr double kFarExponent = -7.0, kFarExponentBand = 0.1;
constexpr double kFarCoefficient = 0.0095, kFarCoefficientRel = 0.10, kFarSeconds = 120.0;
constexpr double kNearExponent = -3.0, kNearExponentBand = 0.1, kNearCoefficientRel = 0.05, kNearSeconds = 120.0;
constexpr double kPlateSLarge = 1e-3, kPlateSSmall = 1e-2;
constexpr double kFSmall = 1e-2, kFLarge = 1e-3;
constexpr double kBoyerRel = 1e-3;
constexpr double kAlphaFTarget = 0.0400, kAlphaFRel = 0.01, kTwoAtomRel = 4.0 * 2.220446049250313e-16;
constexpr double kWronskian = 1e-9, kReduction = 1e-9, kRarefaction = 1e-4;
}  // namespace tol

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

int failures = 0;

void report(int id, const char* title, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v = body();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!v.pass) ++failures;
  std::printf("[%s] AC%d %s: %s (%.2f s)\n", v.pass ? "PASS" : "FAIL", id, title, v.detail.c_str(), secs);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<CurvePoint> curve_points(const std::vector<double>& grid, const std::vector<EnergyResult>& r) {
  std::vector<CurvePoint> out;
  for (std::size_t i = 0; i < grid.size(); ++i) out.push_back({grid[i], r[i].energy});
  return out;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  g.back() = hi;
  return g;
}

}  // namespace

int main() {
  const auto c60 = c60_default();
  const auto h = hydrogen();

  report(1, "contact energy C60 + H at d = 0.053 nm", [&] {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = energy(c60, h, 0.053);
    const double secs = seconds_since(t0);
    const double e = std::abs(r.energy);
    const bool ok = r.converged && std::abs(e - tol::kContactTarget) <= tol::kContactBand &&
                    secs <= tol::kContactSeconds;
    return Verdict{ok, fmt("|E| = %.6f eV, target %.1f +/- %.1f eV, l_max %d, est_rel_err %.1e, runtime %.3f s "
                           "(limit %.0f s)",
                           e, tol::kContactTarget, tol::kContactBand, r.l_max_used, r.est_rel_err, secs,
                           tol::kContactSeconds)};
  });

  report(2, "plate contact energy and plate/sphere ratio", [&] {
    const auto t0 = std::chrono::steady_clock::now();
    const double plate = std::abs(plate_energy(h, 0.053));
    const double secs = seconds_since(t0);
    const double sphere = std::abs(energy(c60, h, 0.053).energy);
    const double ratio = plate / sphere;
    const double lo = (tol::kPlateTarget - tol::kPlateBand) / (tol::kContactTarget + tol::kContactBand);
    const double hi = (tol::kPlateTarget + tol::kPlateBand) / (tol::kContactTarget - tol::kContactBand);
    const bool ok = std::abs(plate - tol::kPlateTarget) <= tol::kPlateBand && secs <= tol::kPlateSeconds &&
                    ratio >= lo && ratio <= hi;
    return Verdict{ok, fmt("|E_plate| = %.6f eV, target %.1f +/- %.1f eV, runtime %.2e s; ratio %.4f in [%.4f, %.4f]",
                           plate, tol::kPlateTarget, tol::kPlateBand, secs, ratio, lo, hi)};
  });

  report(3, "plate prefactor 3 hbar c alpha(0) / 8 pi", [&] {
    const double p = plate_energy_scale(h, 1.0);
    const double dev = rel(p, tol::kPrefactorTarget);
    return Verdict{dev <= tol::kPrefactorRel, fmt("%.7f eV nm^4, target %.4f +/- %.1f%%, deviation %.3f%%", p,
                                                  tol::kPrefactorTarget, 100 * tol::kPrefactorRel, 100 * dev)};
  });

  report(4, "far-field law over d in [100, 300] nm", [&] {
    const auto t0 = std::chrono::steady_clock::now();
    const auto grid = log_grid(100.0, 300.0, 11);
    const auto res = energy_curve(c60, h, grid);
    const auto pts = curve_points(grid, res);
    const auto free_fit = fit_power_law(pts, 100.0, 300.0);
    // the coefficient is only comparable in eV nm^7, so it is read with the
    // exponent held at the nominal value
    const auto pinned = fit_power_law(pts, 100.0, 300.0, tol::kFarExponent);
    const double secs = seconds_since(t0);
    bool converged = true;
    for (const auto& r : res) converged = converged && r.converged;
    const bool exp_ok = std::abs(free_fit.exponent - tol::kFarExponent) <= tol::kFarExponentBand;
    const bool coef_ok = rel(pinned.coefficient, tol::kFarCoefficient) <= tol::kFarCoefficientRel;
    return Verdict{converged && exp_ok && coef_ok && secs <= tol::kFarSeconds,
                   fmt("exponent %.4f (target %.1f +/- %.1f) %s; coefficient at d^-7 %.6f eV nm^7 (target %.4f +/- "
                       "%.0f%%) %s; closed-form coefficient %.6f",
                       free_fit.exponent, tol::kFarExponent, tol::kFarExponentBand, exp_ok ? "ok" : "OUT",
                       pinned.coefficient, tol::kFarCoefficient, 100 * tol::kFarCoefficientRel,
                       coef_ok ? "ok" : "OUT", large_d_coefficient(c60, h))};
  });

  report(5, "near-field law over d in [0.002R, 0.01R]", [&] {
    const auto t0 = std::chrono::steady_clock::now();
    const double lo = 0.002 * c60.radius(), hi = 0.01 * c60.radius();
    const auto grid = log_grid(lo, hi, 9);
    const auto res = energy_curve(c60, h, grid);
    const auto pts = curve_points(grid, res);
    const auto free_fit = fit_power_law(pts, lo, hi);
    const auto pinned = fit_power_law(pts, lo, hi, tol::kNearExponent);
    const double secs = seconds_since(t0);
    const double target = units::kHbarC * h.alpha_static * h.k_a / 8.0;
    bool converged = true;
    for (const auto& r : res) converged = converged && r.converged;
    const bool exp_ok = std::abs(free_fit.exponent - tol::kNearExponent) <= tol::kNearExponentBand;
    const bool coef_ok = rel(pinned.coefficient, target) <= tol::kNearCoefficientRel;
    return Verdict{converged && exp_ok && coef_ok && secs <= tol::kNearSeconds,
                   fmt("exponent %.4f (target %.1f +/- %.1f) %s; coefficient at d^-3 %.5e eV nm^3 vs hbar c "
                       "alpha k_a / 8 = %.5e (+/- %.0f%%, deviation %.2f%%) %s",
                       free_fit.exponent, tol::kNearExponent, tol::kNearExponentBand, exp_ok ? "ok" : "OUT",
                       pinned.coefficient, target, 100 * tol::kNearCoefficientRel,
                       100 * rel(pinned.coefficient, target), coef_ok ? "ok" : "OUT")};
  });

  report(6, "plate crossover S(v) limits and shape", [&] {
    const double large = std::abs(plate_S(1e3) - 1.0);
    const double small = std::abs(plate_S(1e-3) / (M_PI * 1e-3 / 3.0) - 1.0);
    bool monotone = true;
    double prev = 0.0;
    for (double v = 1e-4; v <= 1e4; v *= 1.2) {
      const double s = plate_S(v);
      monotone = monotone && s > prev;
      prev = s;
    }
    return Verdict{large <= tol::kPlateSLarge && small <= tol::kPlateSSmall && monotone,
                   fmt("|S(1e3) - 1| = %.2e (<= %.0e), |S(1e-3)/(pi v/3) - 1| = %.2e (<= %.0e), monotone %s", large,
                       tol::kPlateSLarge, small, tol::kPlateSSmall, monotone ? "yes" : "no")};
  });

  report(7, "crossover F(a) endpoints", [&] {
    const double small = std::abs(crossover_F(1e-3) / (2 * M_PI * std::sqrt(6.0) * 1e-3 / 23.0) - 1.0);
    const double large = std::abs(crossover_F(1e3) - 1.0);
    return Verdict{small <= tol::kFSmall && large <= tol::kFLarge,
                   fmt("|F(1e-3)/linear - 1| = %.2e (<= %.0e), |F(1e3) - 1| = %.2e (<= %.0e)", small, tol::kFSmall,
                       large, tol::kFLarge)};
  });

  report(8, "ideal-conductor route vs Q = 1e4", [&] {
    const auto stiff = ShellModel::from_q(c60.radius(), 1e4);
    double worst = 0.0;
    bool converged = true;
    for (double ratio : {0.1, 1.0, 10.0}) {
      const double d = ratio * c60.radius();
      const auto a = energy(stiff, h, d);
      const auto b = energy_boyer(c60.radius(), h, d);
      converged = converged && a.converged && b.converged;
      worst = std::max(worst, rel(a.energy, b.energy));
    }
    return Verdict{converged && worst <= tol::kBoyerRel,
                   fmt("max relative difference %.2e at d/R in {0.1, 1, 10} (<= %.0e)", worst, tol::kBoyerRel)};
  });

  report(9, "shell polarizability and two-atom identity", [&] {
    const double af = shell_static_polarizability(c60);
    double worst = 0.0;
    for (double d : {0.5, 3.0, 50.0, 100.0, 777.0, 1e4})
      worst = std::max(worst, rel(two_atom_energy(h.alpha_static, af, d), large_d_energy(c60, h, d)));
    const bool ok = rel(af, tol::kAlphaFTarget) <= tol::kAlphaFRel && worst <= tol::kTwoAtomRel;
    return Verdict{ok, fmt("alpha_f = %.6f nm^3 = %.4e m^3 (target %.4f +/- %.0f%%); identity max rel %.1e (<= %.1e)",
                           af, af * 1e-27, tol::kAlphaFTarget, 100 * tol::kAlphaFRel, worst, tol::kTwoAtomRel)};
  });

  report(10, "property suites", [&] {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto log_pick = [&](double lo, double hi) { return lo * std::pow(hi / lo, u(rng)); };

    double wronskian = 0.0;
    for (int i = 0; i < 5000; ++i) {
      const int l = static_cast<int>(u(rng) * 201.0);
      const auto q = riccati_quad(std::min(l, 200), log_pick(1e-3, 500.0));
      // s e' - s' e from the log representation; the factors alone overflow
      const double w = -std::exp(q.log_s + q.log_ep_mag) - std::exp(q.log_sp + q.log_e);
      wronskian = std::max(wronskian, std::abs(w + 1.0));
    }

    double reduction = 0.0;
    for (int i = 0; i < 3000; ++i) {
      const auto shell = ShellModel::from_q(0.342, log_pick(1e-4, 10.0));
      const int l = 1 + static_cast<int>(u(rng) * 30.0);
      const auto a = ModeArgs::make(std::min(l, 30), log_pick(1e-3, 1e2), shell, shell.radius() * log_pick(0.1, 10.0));
      const auto sig = cavity_determinants(a, shell, 1.0);
      reduction = std::max(reduction, rel(sig.sigma_te, jost_te(a, shell)));
      reduction = std::max(reduction, rel(sig.sigma_tm, a.z * a.z * jost_tm(a, shell)));
    }

    double rarefaction = 0.0;
    for (const auto& shell : {ShellModel::from_q(1.0, 0.8), ShellModel::from_q(0.342, 0.05)}) {
      for (int l : {1, 2}) {
        for (double k : {0.05, 0.3, 1.0, 3.0}) {
          const auto got = oracle::rarefied_integrand(l, k, shell, h, 0.4);
          const auto want = oracle::closed_form_integrand(l, k, shell, h, 0.4);
          rarefaction = std::max({rarefaction, rel(got.te, want.te), rel(got.tm, want.tm)});
        }
      }
    }

    bool halving = true;
    for (double d : {0.053, 1.0, 30.0}) {
      QuadratureSettings s;
      const auto a = energy(c60, h, d, s);
      s.rel_tol /= 2.0;
      const auto b = energy(c60, h, d, s);
      halving = halving && a.converged && b.converged && rel(a.energy, b.energy) <= a.est_rel_err;
    }

    bool zero = true;
    for (double d : {0.01, 1.0, 100.0}) zero = zero && energy(ShellModel::from_omega(0.342, 0.0), h, d).energy == 0.0;

    const bool ok = wronskian <= tol::kWronskian && reduction <= tol::kReduction &&
                    rarefaction <= tol::kRarefaction && halving && zero;
    return Verdict{ok, fmt("Wronskian %.1e (<= %.0e); eps=1 reduction %.1e (<= %.0e); rarefaction %.1e (<= %.0e); "
                           "tolerance halving %s; Omega = 0 exact zero %s",
                           wronskian, tol::kWronskian, reduction, tol::kReduction, rarefaction, tol::kRarefaction,
                           halving ? "ok" : "FAILED", zero ? "ok" : "FAILED")};
  });

  std::printf("%d of 10 acceptance criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
