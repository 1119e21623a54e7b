#pragma once

#include <numbers>

namespace dickesim::constants {

inline constexpr double pi = std::numbers::pi;

// SI values (CODATA 2018)
inline constexpr double mu0 = 1.25663706212e-6;             // T m / A
inline constexpr double hbar = 1.054571817e-34;             // J s
inline constexpr double gamma_electron = 1.76085963023e11;  // rad s^-1 T^-1

// Unit system: lengths in micrometres, times in seconds, angular
// frequencies in rad/s.  Densities are accepted in cm^-3 at API
// boundaries and converted internally.
inline constexpr double um3_per_m3 = 1e18;
inline constexpr double per_um3_from_per_cm3 = 1e-12;

// Dipolar prefactor mu0 gamma_T gamma_P hbar / (16 pi) for an
// electron-spin target probed by electron-like spins, in rad s^-1 um^3.
inline constexpr double default_dipolar_G =
    mu0 * gamma_electron * gamma_electron * hbar / (16.0 * pi) * um3_per_m3;

// Empirical density--coherence relation rho * T2 = 1.98e12 cm^-3 s,
// quoted valid for rho in [1e16, 1e19] cm^-3.
inline constexpr double rho_T2_product_cm3_s = 1.98e12;
inline constexpr double rho_T2_valid_min_cm3 = 1e16;
inline constexpr double rho_T2_valid_max_cm3 = 1e19;

}  // namespace dickesim::constants
