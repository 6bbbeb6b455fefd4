#pragma once

// Internal unit system: frequencies in units of omega0 = 1e16 1/s, lengths in
// units of c/omega0 (= 29.9792458 nm), transverse wavevectors in omega0/c.
// All quadrature variables are then O(1). Conversions happen at I/O boundaries
// (CLI flags, python bindings, CSV metadata), never inside physics code.

namespace casfilm::units {

inline constexpr double planck_h = 6.62607015e-34;            // J s (exact, SI 2019)
inline constexpr double hbar = 1.0545718176461565e-34;        // J s, h / 2 pi
inline constexpr double c_light = 2.99792458e8;               // m/s (exact)
inline constexpr double omega0 = 1.0e16;                      // 1/s
inline constexpr double length_unit_m = c_light / omega0;     // 2.99792458e-8 m
inline constexpr double length_unit_nm = 29.9792458;          // c/omega0 in nm

constexpr double nm_to_internal(double nm) { return nm / length_unit_nm; }
constexpr double internal_to_nm(double x) { return x * length_unit_nm; }

// angular frequency in 1/s -> omega0 units
constexpr double per_second_to_w0(double omega_si) { return omega_si / omega0; }
constexpr double w0_to_per_second(double omega_w0) { return omega_w0 * omega0; }

// damping rate (omega0 units) from a relaxation time in femtoseconds
constexpr double gamma_w0_from_tau_fs(double tau_fs) {
  return 1.0 / (tau_fs * 1.0e-15 * omega0);
}

} // namespace casfilm::units
