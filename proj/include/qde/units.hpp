#pragma once

// Internal unit convention: hbar = 1. All Hamiltonian entries are angular
// frequencies in rad/ns, times in ns, lengths in nm. Frequencies quoted as
// "2pi x GHz" / "2pi x MHz" convert through the helpers below (1 GHz = 1/ns).

namespace qde::units {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// e^2/(4 pi eps0) in eV nm
inline constexpr double coulomb_eV_nm = 1.439964;

// 1 ueV as a plain frequency in MHz
inline constexpr double ueV_in_MHz = 241.799;

inline constexpr double from_2pi_GHz(double f_GHz) { return two_pi * f_GHz; }
inline constexpr double to_2pi_GHz(double w) { return w / two_pi; }
inline constexpr double from_2pi_MHz(double f_MHz) { return two_pi * f_MHz * 1e-3; }
inline constexpr double to_2pi_MHz(double w) { return w / two_pi * 1e3; }

inline constexpr double from_ueV(double e_ueV) { return from_2pi_MHz(e_ueV * ueV_in_MHz); }
inline constexpr double from_eV(double e_eV) { return from_ueV(e_eV * 1e6); }

}  // namespace qde::units
