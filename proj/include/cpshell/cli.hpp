#pragma once

// Command-line front end: energy curves, closed-form limits and power-law fits
// written as CSV / key = value text.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpshell/energy_kernel.hpp"
#include "cpshell/models.hpp"

namespace cpshell::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kConvergence = 3 };

/// Invalid or inconsistent configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  // shell
  std::string shell = "c60";  // c60 | custom | plate
  std::optional<double> radius, omega, q;
  // atom
  std::string atom = "hydrogen";
  std::optional<double> alpha0_au, omega_a_ev;
  std::string atoms_file;
  // distance grid
  std::optional<double> d, d_min, d_max;
  int d_count = 1;
  bool log_grid = false;
  // numerics
  bool boyer = false;
  std::optional<double> tol;
  int threads = 1;
  std::string kernel = "auto";
  // limits
  bool plate_S = false, alpha_f = false, coefficient = false, compare = false;
  std::optional<double> v, v_min, v_max;
  int v_count = 1;
  // fit
  std::string input;
  std::optional<double> fit_min, fit_max, fixed_exponent;

  std::string out;
};

/// Shell/atom/grid/settings after presets, overrides and validation.
struct ResolvedRun {
  bool plate = false;
  ShellModel shell = c60_default();
  OscillatorAtom atom = hydrogen();
  std::vector<double> grid;
  QuadratureSettings settings;
};

/// Throws ConfigError.
ResolvedRun resolve(const RunConfig& cfg);

/// n points from lo to hi (inclusive), linear or logarithmic. Throws ConfigError.
std::vector<double> make_grid(double lo, double hi, int count, bool logarithmic);

/// Full-precision decimal (17 significant digits).
std::string format_number(double v);

int cmd_energy(const RunConfig& cfg, std::ostream& out);
int cmd_limits(const RunConfig& cfg, std::ostream& out);
int cmd_fit(const RunConfig& cfg, std::istream& csv, std::ostream& out);

/// Parses argv and dispatches. Diagnostics go to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cpshell::cli
