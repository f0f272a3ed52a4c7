#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cpshell/cli.hpp"
#include "cpshell/errors.hpp"

namespace cpshell::cli {

namespace {

void add_options(CLI::App& app, RunConfig& cfg) {
  auto* shell = app.add_option("--shell", cfg.shell, "Shell preset: c60, custom or plate")
                    ->check(CLI::IsMember({"c60", "custom", "plate"}))
                    ->group("Shell");
  (void)shell;
  app.add_option("--R", cfg.radius, "Shell radius [nm]")->group("Shell");
  auto* omega = app.add_option("--omega", cfg.omega, "Plasma wavenumber Omega [1/nm]")->group("Shell");
  auto* q = app.add_option("--q", cfg.q, "Dimensionless Q = Omega R")->group("Shell");
  omega->excludes(q);

  app.add_option("--atom", cfg.atom, "Atom name (built-in or from --atoms-file)")->group("Atom");
  app.add_option("--alpha0-au", cfg.alpha0_au, "Static polarizability [a.u.]")->group("Atom");
  app.add_option("--omega-a-eV", cfg.omega_a_ev, "Oscillator energy [eV]")->group("Atom");
  app.add_option("--atoms-file", cfg.atoms_file, "Atom table: name alpha0_au omega_a_eV per line")
      ->group("Atom");

  app.add_option("--d", cfg.d, "Single distance [nm]")->group("Grid");
  app.add_option("--d-min", cfg.d_min, "Grid start [nm]")->group("Grid");
  app.add_option("--d-max", cfg.d_max, "Grid end [nm]")->group("Grid");
  app.add_option("--d-count", cfg.d_count, "Grid points")->group("Grid");
  app.add_flag("--log", cfg.log_grid, "Logarithmic grid spacing")->group("Grid");

  app.add_flag("--boyer", cfg.boyer, "Perfectly conducting shell (Omega -> infinity)")->group("Numerics");
  app.add_option("--tol", cfg.tol, "Relative tolerance")->group("Numerics");
  app.add_option("--threads", cfg.threads, "Worker threads for grid evaluation")->group("Numerics");
  app.add_option("--kernel", cfg.kernel, "Integrand kernel: auto, scalar, avx2")->group("Numerics");

  app.add_flag("--plate-S", cfg.plate_S, "limits: plate crossover S(v)")->group("Limits");
  app.add_flag("--alpha-f", cfg.alpha_f, "limits: static shell polarizability")->group("Limits");
  app.add_flag("--coefficient", cfg.coefficient, "limits: d^-7 coefficient")->group("Limits");
  app.add_flag("--compare", cfg.compare, "limits: plate vs shell vs ideal-shell S(d)")->group("Limits");
  app.add_option("--v", cfg.v, "limits --plate-S: single v = d k_a")->group("Limits");
  app.add_option("--v-min", cfg.v_min, "limits --plate-S: v grid start")->group("Limits");
  app.add_option("--v-max", cfg.v_max, "limits --plate-S: v grid end")->group("Limits");
  app.add_option("--v-count", cfg.v_count, "limits --plate-S: v grid points")->group("Limits");

  app.add_option("--input", cfg.input, "fit: energy CSV (default stdin)")->group("Fit");
  app.add_option("--fit-min", cfg.fit_min, "fit: window start [nm]")->group("Fit");
  app.add_option("--fit-max", cfg.fit_max, "fit: window end [nm]")->group("Fit");
  app.add_option("--fixed-exponent", cfg.fixed_exponent, "fit: pin the exponent")->group("Fit");

  app.add_option("--out", cfg.out, "Output file (default stdout)");
}

int dispatch(const std::string& command, const RunConfig& cfg, std::ostream& out) {
  if (command == "energy") return cmd_energy(cfg, out);
  if (command == "limits") return cmd_limits(cfg, out);
  if (cfg.input.empty() || cfg.input == "-") return cmd_fit(cfg, std::cin, out);
  std::ifstream in(cfg.input);
  if (!in) throw ConfigError("cannot open '" + cfg.input + "'");
  return cmd_fit(cfg, in, out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Casimir-Polder energy of an atom outside a conducting spherical shell", "cpshell"};
  app.set_config("--config", "", "key = value configuration file; command-line flags win");
  std::string dump_path;
  app.add_option("--dump-config", dump_path, "Write the effective configuration to a file")
      ->configurable(false);
  add_options(app, cfg);
  app.require_subcommand(1);

  std::string command;
  for (const char* name : {"energy", "limits", "fit"}) {
    auto* sub = app.add_subcommand(name);
    sub->fallthrough();
    sub->callback([&command, name] { command = name; });
  }
  app.get_subcommand("energy")->description("Energy curve E(d) as CSV");
  app.get_subcommand("limits")->description("Closed-form limits as CSV");
  app.get_subcommand("fit")->description("Power-law fit of an energy CSV");

  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (!dump_path.empty()) {
      std::ofstream dump(dump_path);
      if (!dump) throw ConfigError("cannot write '" + dump_path + "'");
      dump << app.config_to_str(false, false);
    }
    if (cfg.out.empty()) return dispatch(command, cfg, out);
    std::ostringstream buffer;
    const int code = dispatch(command, cfg, buffer);
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw ConfigError("cannot write '" + cfg.out + "'");
    file << buffer.str();
    return code;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InsufficientDataError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace cpshell::cli
