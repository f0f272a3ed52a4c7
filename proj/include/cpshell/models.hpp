#pragma once

// Physical parameters. Internal units: lengths in nm, energies in eV,
// wavenumbers in nm^-1, polarizabilities (volumes) in nm^3.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cpshell {

namespace units {
inline constexpr double kHbarC = 197.3269804;     // eV nm
inline constexpr double kAuVolume = 1.482e-4;     // nm^3 per atomic unit of polarizability
inline constexpr double kPi = 3.14159265358979323846;

constexpr double au_to_nm3(double alpha_au) { return alpha_au * kAuVolume; }
constexpr double nm3_to_au(double alpha_nm3) { return alpha_nm3 / kAuVolume; }
constexpr double ev_to_wavenumber(double energy_ev) { return energy_ev / kHbarC; }
constexpr double wavenumber_to_ev(double k) { return k * kHbarC; }
}  // namespace units

/// Infinitely thin conducting sphere in the hydrodynamic model.
class ShellModel {
 public:
  static ShellModel from_omega(double radius_nm, double omega_inv_nm);
  static ShellModel from_q(double radius_nm, double q);

  double radius() const { return radius_; }
  double omega() const { return omega_; }
  /// Q = Omega R
  double q() const { return omega_ * radius_; }

 private:
  ShellModel(double r, double omega) : radius_(r), omega_(omega) {}
  double radius_;
  double omega_;
};

/// Single-oscillator atom: alpha(i omega) = alpha(0) k_a^2 / (k^2 + k_a^2).
struct OscillatorAtom {
  std::string name;
  double alpha_static = 0.0;  // nm^3
  double k_a = 0.0;           // nm^-1

  static OscillatorAtom from_atomic_units(std::string name, double alpha0_au, double omega_a_ev);
};

double polarizability_imag_axis(const OscillatorAtom& atom, double k);

/// Whitespace-separated "name alpha0_au omega_a_eV" rows; '#' starts a
/// comment, blank lines are skipped. Throws ParseError with the line number.
std::vector<OscillatorAtom> load_atom_database(std::istream& in);

/// Built-in table (hydrogen: 4.50 a.u., 11.65 eV).
const std::vector<OscillatorAtom>& builtin_atoms();
OscillatorAtom hydrogen();

std::optional<OscillatorAtom> find_atom(std::span<const OscillatorAtom> table, std::string_view name);

/// C60: R = 0.342 nm, Q = 4.94e-4.
ShellModel c60_default();

}  // namespace cpshell
