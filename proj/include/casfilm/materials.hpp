#pragma once

#include <array>
#include <complex>
#include <variant>

namespace casfilm {

// Dielectric models evaluated on the imaginary frequency axis, eps(i xi).
// All frequencies are in omega0 units. Parameter validation happens at
// construction; evaluation assumes valid parameters.

struct Drude {
  double omega_p;
  double gamma;
  Drude(double omega_p, double gamma);
};

struct Plasma {
  double omega_p;
  explicit Plasma(double omega_p);
};

struct LorentzOscillator {
  double eps_static;
  double omega_res;
  LorentzOscillator(double eps_static, double omega_res);
};

// Backscattering correction to Drude, truncated at the first scattering
// coefficient c1. c1 = 0 is Drude, c1 = -1 is full backscattering (zero DC
// conductivity).
struct DrudeSmithParams {
  double omega_p;
  double gamma;
  double c1;
  DrudeSmithParams(double omega_p, double gamma, double c1);
};

struct DrudeSmith {
  DrudeSmithParams params;
  DrudeSmith(double omega_p, double gamma, double c1)
      : params(omega_p, gamma, c1) {}
  explicit DrudeSmith(const DrudeSmithParams& p) : params(p) {}
};

using DielectricModel = std::variant<Drude, Plasma, LorentzOscillator, DrudeSmith>;

// eps(i xi), real and >= 1 for every model. Throws std::domain_error for
// xi <= 0; the DC point is a separate limit (epsilon_dc_limit).
double epsilon_iw(const DielectricModel& model, double xi);

// xi -> 0+ limit of eps(i xi). Finite only for Plasma-free insulating cases;
// returns +infinity where the model diverges at DC (Drude, Drude-Smith with
// c1 > -1, Plasma).
double epsilon_dc_limit(const DielectricModel& model);

// Complex conductivity sigma(omega) on the real axis (Gaussian units, in the
// omega0/(4 pi) scale), first-coefficient truncation.
std::complex<double> conductivity_drude_smith(const DrudeSmithParams& p, double omega);

// sigma(0) / sigma_Drude(0) = 1 + c1. Evaluated in tenths so the one-decimal
// c1 values used in practice give exact decimal ratios (10*c1 is exact for
// c1 = 0, -0.7, -1).
double dc_conductivity_ratio(const DrudeSmithParams& p);

// One row of the thin-film parameter table: best-fit Drude-Smith parameters
// as printed in the terahertz measurements (omega_p in 1e15 1/s, tau in fs).
struct FilmRecord {
  double thickness_nm;
  double omega_p_1e15;   // plasma frequency, as printed
  double tau_fs;         // relaxation time 1/gamma, as printed
  double c1;
  double dc_ratio;       // sigma(0)/sigma_D(0), as printed

  // Parameters converted to internal omega0 units.
  DrudeSmithParams drude_smith() const;
};

// The five measured film rows, thickest first.
const std::array<FilmRecord, 5>& table1_registry();

// Row lookup by exact printed thickness. Throws std::out_of_range for
// thicknesses not in the table.
const FilmRecord& table1_film(double thickness_nm);

// Bulk-Au half-space default: Drude with the 20 nm row's parameters (the
// thickness at which bulk values are recovered).
Drude bulk_gold();

// Default substrate: silicon as a single Lorentz oscillator.
LorentzOscillator silicon_substrate();

} // namespace casfilm
