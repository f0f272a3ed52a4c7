#pragma once

// Per-(l, k) integrand of the atom-shell energy, evaluated over a batch of
// wavenumbers. The scalar kernel is the reference; the AVX2 kernel vectorises
// the uniform-expansion regime (l >= kDebyeMinOrder) and falls back to the
// scalar path below it. Selection happens at runtime.

#include <optional>
#include <span>
#include <string_view>

namespace cpshell {

enum class KernelIsa { Scalar, Avx2 };

enum class IntegrandRoute {
  FiniteOmega,  // nu alpha { s^2 e^2 / f_TE + [...] / f_TM }; caller multiplies by Omega
  Boyer,        // nu k alpha { s^2 e^2 / (s e) - [...] / (s' e') }
};

struct IntegrandParams {
  int l = 1;
  double radius = 0.0;         // R
  double cavity_radius = 0.0;  // L = R + d
  double omega = 0.0;          // ignored on the Boyer route
  double alpha0 = 0.0;
  double k_a = 0.0;
  IntegrandRoute route = IntegrandRoute::FiniteOmega;
};

/// Scalar reference for one wavenumber (k > 0).
double integrand_point(const IntegrandParams& p, double k);

void integrand_batch(KernelIsa isa, const IntegrandParams& p, std::span<const double> k, std::span<double> out);

bool kernel_available(KernelIsa isa);

/// Fastest available kernel; the CPSHELL_KERNEL environment variable
/// ("scalar" or "avx2") overrides when that kernel is available.
KernelIsa best_kernel();

std::string_view kernel_name(KernelIsa isa);
std::optional<KernelIsa> parse_kernel_name(std::string_view name);

}  // namespace cpshell
