#include <charconv>
#include <cmath>
#include <fstream>

#include "cpshell/cli.hpp"
#include "cpshell/errors.hpp"

namespace cpshell::cli {

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

std::vector<double> make_grid(double lo, double hi, int count, bool logarithmic) {
  if (count < 1) throw ConfigError("grid count must be >= 1");
  if (!(lo > 0.0) || !std::isfinite(lo)) throw ConfigError("grid minimum must be positive");
  if (count == 1) return {lo};
  if (!(hi > lo)) throw ConfigError("grid minimum must be below its maximum");
  std::vector<double> g(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / (count - 1);
    g[i] = logarithmic ? lo * std::pow(hi / lo, f) : lo + (hi - lo) * f;
  }
  g.back() = hi;
  return g;
}

namespace {

ShellModel resolve_shell(const RunConfig& cfg) {
  if (cfg.omega && cfg.q) throw ConfigError("give at most one of --omega and --q");
  double radius = 0.0;
  double omega = 0.0;
  if (cfg.shell == "c60" || cfg.shell == "plate") {
    const ShellModel base = c60_default();
    radius = base.radius();
    omega = base.omega();
  } else if (cfg.shell == "custom") {
    if (!cfg.radius) throw ConfigError("--shell custom needs --R");
    if (!cfg.omega && !cfg.q) throw ConfigError("--shell custom needs --omega or --q");
  } else {
    throw ConfigError("unknown shell preset '" + cfg.shell + "' (c60, custom, plate)");
  }
  if (cfg.radius) radius = *cfg.radius;
  if (!(radius > 0.0)) throw ConfigError("shell radius must be positive");
  if (cfg.omega) omega = *cfg.omega;
  if (cfg.q) omega = *cfg.q / radius;
  if (!(omega >= 0.0) || !std::isfinite(omega)) throw ConfigError("plasma wavenumber must be non-negative");
  return ShellModel::from_omega(radius, omega);
}

OscillatorAtom resolve_atom(const RunConfig& cfg) {
  if (cfg.alpha0_au || cfg.omega_a_ev) {
    if (!cfg.alpha0_au || !cfg.omega_a_ev) throw ConfigError("inline atom needs both --alpha0-au and --omega-a-eV");
    if (!(*cfg.alpha0_au > 0.0) || !(*cfg.omega_a_ev > 0.0)) throw ConfigError("atom parameters must be positive");
    return OscillatorAtom::from_atomic_units("custom", *cfg.alpha0_au, *cfg.omega_a_ev);
  }
  std::vector<OscillatorAtom> table = builtin_atoms();
  if (!cfg.atoms_file.empty()) {
    std::ifstream in(cfg.atoms_file);
    if (!in) throw ConfigError("cannot open atoms file '" + cfg.atoms_file + "'");
    try {
      auto extra = load_atom_database(in);
      // file entries shadow built-ins of the same name
      table.insert(table.begin(), extra.begin(), extra.end());
    } catch (const ParseError& e) {
      throw ConfigError(cfg.atoms_file + ": " + e.what());
    } catch (const DomainError& e) {
      throw ConfigError(cfg.atoms_file + ": " + e.what());
    }
  }
  if (auto a = find_atom(table, cfg.atom)) return *a;
  throw ConfigError("unknown atom '" + cfg.atom + "'");
}

}  // namespace

ResolvedRun resolve(const RunConfig& cfg) {
  ResolvedRun run;
  run.shell = resolve_shell(cfg);
  run.plate = cfg.shell == "plate";
  run.atom = resolve_atom(cfg);

  if (cfg.d && (cfg.d_min || cfg.d_max)) throw ConfigError("give either --d or --d-min/--d-max");
  if (cfg.d) {
    if (cfg.d_count != 1) throw ConfigError("--d-count needs --d-min/--d-max");
    run.grid = make_grid(*cfg.d, *cfg.d, 1, false);
  } else if (cfg.d_min) {
    if (!cfg.d_max && cfg.d_count > 1) throw ConfigError("--d-max missing");
    run.grid = make_grid(*cfg.d_min, cfg.d_max.value_or(*cfg.d_min), cfg.d_count, cfg.log_grid);
  }

  if (cfg.tol) {
    if (!(*cfg.tol > 0.0) || !(*cfg.tol < 1.0)) throw ConfigError("--tol must lie in (0, 1)");
    run.settings.rel_tol = *cfg.tol;
  }
  if (cfg.threads < 1) throw ConfigError("--threads must be >= 1");
  run.settings.threads = cfg.threads;
  if (cfg.kernel != "auto") {
    const auto isa = parse_kernel_name(cfg.kernel);
    if (!isa) throw ConfigError("unknown kernel '" + cfg.kernel + "' (auto, scalar, avx2)");
    if (!kernel_available(*isa)) throw ConfigError("kernel '" + cfg.kernel + "' not available on this CPU");
    run.settings.kernel = *isa;
  }
  return run;
}

}  // namespace cpshell::cli
