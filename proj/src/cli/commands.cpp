#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "cpshell/asymptotics.hpp"
#include "cpshell/cli.hpp"
#include "cpshell/errors.hpp"

namespace cpshell::cli {

namespace {

void write_row(std::ostream& out, std::initializer_list<std::string> fields) {
  bool first = true;
  for (const auto& f : fields) {
    if (!first) out << ',';
    out << f;
    first = false;
  }
  out << '\n';
}

std::string fmt(double v) { return format_number(v); }

}  // namespace

int cmd_energy(const RunConfig& cfg, std::ostream& out) {
  const ResolvedRun run = resolve(cfg);
  if (run.grid.empty()) throw ConfigError("energy needs --d or --d-min/--d-max");
  if (run.plate && cfg.boyer) throw ConfigError("--boyer does not apply to the plate preset");

  write_row(out, {"d_nm", "S_Omega", "E_eV", "l_max_used", "est_rel_err", "status"});
  if (run.plate) {
    for (double d : run.grid) {
      const double s = plate_S(d * run.atom.k_a);
      write_row(out, {fmt(d), fmt(s), fmt(plate_energy(run.atom, d)), "0", fmt(0.0), "ok"});
    }
    return kOk;
  }

  const auto results = cfg.boyer ? energy_boyer_curve(run.shell.radius(), run.atom, run.grid, run.settings)
                                 : energy_curve(run.shell, run.atom, run.grid, run.settings);
  int code = kOk;
  for (const auto& r : results) {
    if (!r.converged) code = kConvergence;
    write_row(out, {fmt(r.distance), fmt(r.s_factor), fmt(r.energy), std::to_string(r.l_max_used),
                    fmt(r.est_rel_err), r.converged ? "ok" : "unconverged"});
  }
  return code;
}

int cmd_limits(const RunConfig& cfg, std::ostream& out) {
  const ResolvedRun run = resolve(cfg);
  const int modes = int(cfg.plate_S) + int(cfg.alpha_f) + int(cfg.coefficient) + int(cfg.compare);
  if (modes > 1) throw ConfigError("--plate-S, --alpha-f, --coefficient and --compare are exclusive");

  if (cfg.plate_S) {
    std::vector<double> vs;
    if (cfg.v && (cfg.v_min || cfg.v_max)) throw ConfigError("give either --v or --v-min/--v-max");
    if (cfg.v) vs = make_grid(*cfg.v, *cfg.v, 1, false);
    else if (cfg.v_min) vs = make_grid(*cfg.v_min, cfg.v_max.value_or(*cfg.v_min), cfg.v_count, cfg.log_grid);
    else throw ConfigError("--plate-S needs --v or --v-min/--v-max");
    write_row(out, {"v", "S"});
    for (double v : vs) write_row(out, {fmt(v), fmt(plate_S(v))});
    return kOk;
  }
  if (cfg.alpha_f) {
    const double a = shell_static_polarizability(run.shell);
    write_row(out, {"alpha_f_nm3", "alpha_f_m3"});
    write_row(out, {fmt(a), fmt(a * 1e-27)});
    return kOk;
  }
  if (cfg.coefficient) {
    write_row(out, {"coef_d7_eV_nm7"});
    write_row(out, {fmt(large_d_coefficient(run.shell, run.atom))});
    return kOk;
  }
  if (run.grid.empty()) throw ConfigError("limits needs --d or --d-min/--d-max");
  if (cfg.compare) {
    // plate vs finite-Omega shell vs ideal shell
    const auto shell = energy_curve(run.shell, run.atom, run.grid, run.settings);
    const auto ideal = energy_boyer_curve(run.shell.radius(), run.atom, run.grid, run.settings);
    int code = kOk;
    write_row(out, {"d_nm", "S_plate", "S_shell", "S_boyer", "status"});
    for (std::size_t i = 0; i < run.grid.size(); ++i) {
      const double d = run.grid[i];
      const bool ok = shell[i].converged && ideal[i].converged;
      if (!ok) code = kConvergence;
      write_row(out, {fmt(d), fmt(plate_S(d * run.atom.k_a)), fmt(shell[i].s_factor), fmt(ideal[i].s_factor),
                      ok ? "ok" : "unconverged"});
    }
    return code;
  }

  const double alpha_f = shell_static_polarizability(run.shell);
  const double coef = large_d_coefficient(run.shell, run.atom);
  write_row(out, {"d_nm", "v", "S_plate", "E_plate_eV", "E_small_d_eV", "S_large_d", "E_large_d_eV",
                  "alpha_f_nm3", "coef_d7_eV_nm7"});
  for (double d : run.grid) {
    const double v = d * run.atom.k_a;
    write_row(out, {fmt(d), fmt(v), fmt(plate_S(v)), fmt(plate_energy(run.atom, d)),
                    fmt(small_d_energy(run.atom, d)), fmt(large_d_S(run.shell, d)),
                    fmt(large_d_energy(run.shell, run.atom, d)), fmt(alpha_f), fmt(coef)});
  }
  return kOk;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, ',')) out.push_back(cur);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_field(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "not a number: '" + s + "'");
  }
}

}  // namespace

int cmd_fit(const RunConfig& cfg, std::istream& csv, std::ostream& out) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<CurvePoint> curve;
  std::ptrdiff_t col_d = -1, col_e = -1;
  std::size_t n_cols = 0;
  while (std::getline(csv, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (col_d < 0) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (fields[i] == "d_nm") col_d = static_cast<std::ptrdiff_t>(i);
        if (fields[i] == "E_eV") col_e = static_cast<std::ptrdiff_t>(i);
      }
      if (col_d < 0 || col_e < 0) throw ParseError(line_no, "header must contain d_nm and E_eV");
      n_cols = fields.size();
      continue;
    }
    if (fields.size() != n_cols) throw ParseError(line_no, "expected " + std::to_string(n_cols) + " fields");
    curve.push_back({parse_field(fields[col_d], line_no), parse_field(fields[col_e], line_no)});
  }
  if (col_d < 0) throw ParseError(line_no, "empty input");

  const double lo = cfg.fit_min.value_or(0.0);
  const double hi = cfg.fit_max.value_or(std::numeric_limits<double>::infinity());
  const PowerLawFit fit = fit_power_law(curve, lo, hi, cfg.fixed_exponent);
  out << "exponent = " << format_number(fit.exponent) << '\n'
      << "coefficient = " << format_number(fit.coefficient) << '\n'
      << "sign = " << (fit.sign < 0 ? "-1" : "1") << '\n'
      << "window = " << format_number(fit.d_min) << ' ' << format_number(fit.d_max) << '\n'
      << "points = " << fit.points << '\n'
      << "residual = " << format_number(fit.residual) << '\n';
  return kOk;
}

}  // namespace cpshell::cli
