#pragma once

// Modified Riccati-Bessel functions
//
//   s_l(x) = sqrt(pi x / 2) I_{l+1/2}(x),   e_l(x) = sqrt(2 x / pi) K_{l+1/2}(x)
//
// and their derivatives, stored as natural logarithms. s_l grows like e^x and
// e_l decays like e^-x, so callers combine logs and exponentiate only the
// final products.

#include <cmath>

namespace cpshell {

struct ScaledBesselQuad {
  double log_s = 0.0;       // ln s_l(x)
  double log_e = 0.0;       // ln e_l(x)
  double log_sp = 0.0;      // ln s'_l(x)
  double log_ep_mag = 0.0;  // ln |e'_l(x)|; e'_l(x) < 0 always

  double s() const { return std::exp(log_s); }
  double e() const { return std::exp(log_e); }
  double s_prime() const { return std::exp(log_sp); }
  double e_prime() const { return -std::exp(log_ep_mag); }
};

/// Ingredients of the uniform (Debye) expansion at scaled argument y = x / nu.
struct DebyePoint {
  double y = 0.0;
  double t_of_y = 0.0;    // 1 / sqrt(1 + y^2)
  double eta_of_y = 0.0;  // sqrt(1 + y^2) + ln(y / (1 + sqrt(1 + y^2)))
};

struct BesselConfig {
  int l_ceiling = 1'000'000;
  double rel_accuracy = 1e-12;
};

/// Orders at or above this use the uniform asymptotic expansion; lower orders
/// use recurrences and a continued fraction.
inline constexpr int kDebyeMinOrder = 30;

/// Throws DomainError for x <= 0, l < 0 or l > config.l_ceiling, and
/// std::overflow_error if a log is not finite.
ScaledBesselQuad riccati_quad(int l, double x, const BesselConfig& config = {});

/// Throws DomainError for y <= 0.
DebyePoint debye_point(double y);

}  // namespace cpshell
