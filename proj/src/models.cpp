#include "cpshell/models.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>

#include "cpshell/errors.hpp"

namespace cpshell {

ShellModel ShellModel::from_omega(double radius_nm, double omega_inv_nm) {
  if (!(radius_nm > 0.0) || !std::isfinite(radius_nm))
    throw DomainError("shell radius must be positive");
  if (!(omega_inv_nm >= 0.0) || !std::isfinite(omega_inv_nm))
    throw DomainError("plasma wavenumber must be non-negative");
  return ShellModel(radius_nm, omega_inv_nm);
}

ShellModel ShellModel::from_q(double radius_nm, double q) {
  if (!(radius_nm > 0.0)) throw DomainError("shell radius must be positive");
  return from_omega(radius_nm, q / radius_nm);
}

OscillatorAtom OscillatorAtom::from_atomic_units(std::string name, double alpha0_au, double omega_a_ev) {
  if (!(alpha0_au > 0.0) || !std::isfinite(alpha0_au))
    throw DomainError("static polarizability must be positive");
  if (!(omega_a_ev > 0.0) || !std::isfinite(omega_a_ev))
    throw DomainError("resonance frequency must be positive");
  return {std::move(name), units::au_to_nm3(alpha0_au), units::ev_to_wavenumber(omega_a_ev)};
}

double polarizability_imag_axis(const OscillatorAtom& atom, double k) {
  if (!(k >= 0.0)) throw DomainError("polarizability: wavenumber must be non-negative");
  const double r = k / atom.k_a;
  return atom.alpha_static / (1.0 + r * r);
}

namespace {

double parse_number(const std::string& token, std::size_t line, const char* field) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(line, std::string("cannot parse ") + field + " '" + token + "'");
  return v;
}

}  // namespace

std::vector<OscillatorAtom> load_atom_database(std::istream& in) {
  std::vector<OscillatorAtom> atoms;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 3)
      throw ParseError(line_no, "expected 'name alpha0_au omega_a_eV', got " + std::to_string(tok.size()) +
                                    " fields");
    const double alpha = parse_number(tok[1], line_no, "alpha0_au");
    const double omega = parse_number(tok[2], line_no, "omega_a_eV");
    if (!(alpha > 0.0)) throw ParseError(line_no, "non-positive polarizability");
    if (!(omega > 0.0)) throw ParseError(line_no, "non-positive resonance frequency");
    atoms.push_back(OscillatorAtom::from_atomic_units(tok[0], alpha, omega));
  }
  return atoms;
}

OscillatorAtom hydrogen() { return OscillatorAtom::from_atomic_units("hydrogen", 4.50, 11.65); }

const std::vector<OscillatorAtom>& builtin_atoms() {
  static const std::vector<OscillatorAtom> table{hydrogen()};
  return table;
}

std::optional<OscillatorAtom> find_atom(std::span<const OscillatorAtom> table, std::string_view name) {
  for (const auto& a : table)
    if (a.name == name) return a;
  return std::nullopt;
}

ShellModel c60_default() { return ShellModel::from_q(0.342, 4.94e-4); }

}  // namespace cpshell
