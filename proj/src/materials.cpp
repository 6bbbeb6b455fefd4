#include "casfilm/materials.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "casfilm/units.hpp"

namespace casfilm {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// Shared by Drude and DrudeSmith(c1=0) so the two evaluate bitwise
// identically.
inline double drude_term(double omega_p, double gamma, double xi) {
  return omega_p * omega_p / (xi * (xi + gamma));
}

void check_xi(double xi) {
  if (!(xi > 0.0))
    throw std::domain_error("epsilon_iw: xi must be > 0 (the DC point is a separate limit)");
}

} // namespace

Drude::Drude(double omega_p_, double gamma_) : omega_p(omega_p_), gamma(gamma_) {
  require(omega_p > 0.0, "Drude: omega_p must be > 0");
  require(gamma > 0.0, "Drude: gamma must be > 0");
}

Plasma::Plasma(double omega_p_) : omega_p(omega_p_) {
  require(omega_p > 0.0, "Plasma: omega_p must be > 0");
}

LorentzOscillator::LorentzOscillator(double eps_static_, double omega_res_)
    : eps_static(eps_static_), omega_res(omega_res_) {
  require(eps_static > 1.0, "LorentzOscillator: eps_static must be > 1");
  require(omega_res > 0.0, "LorentzOscillator: omega_res must be > 0");
}

DrudeSmithParams::DrudeSmithParams(double omega_p_, double gamma_, double c1_)
    : omega_p(omega_p_), gamma(gamma_), c1(c1_) {
  require(omega_p > 0.0, "DrudeSmithParams: omega_p must be > 0");
  require(gamma > 0.0, "DrudeSmithParams: gamma must be > 0");
  require(c1 >= -1.0 && c1 <= 0.0, "DrudeSmithParams: c1 must lie in [-1, 0]");
}

double epsilon_iw(const DielectricModel& model, double xi) {
  check_xi(xi);
  return std::visit(
      [xi](const auto& m) -> double {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, Drude>) {
          return 1.0 + drude_term(m.omega_p, m.gamma, xi);
        } else if constexpr (std::is_same_v<M, Plasma>) {
          return 1.0 + m.omega_p * m.omega_p / (xi * xi);
        } else if constexpr (std::is_same_v<M, LorentzOscillator>) {
          return 1.0 + (m.eps_static - 1.0) /
                           (1.0 + xi * xi / (m.omega_res * m.omega_res));
        } else {
          const auto& p = m.params;
          // Rotated closed form of the complex-frequency Drude-Smith
          // permittivity at omega = i xi; the bracket stays in [1+c1, 1].
          return 1.0 + drude_term(p.omega_p, p.gamma, xi) *
                           (1.0 + p.c1 * p.gamma / (xi + p.gamma));
        }
      },
      model);
}

double epsilon_dc_limit(const DielectricModel& model) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return std::visit(
      [](const auto& m) -> double {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, Drude>) {
          return inf;
        } else if constexpr (std::is_same_v<M, Plasma>) {
          return inf;
        } else if constexpr (std::is_same_v<M, LorentzOscillator>) {
          return m.eps_static;
        } else {
          const auto& p = m.params;
          if (p.c1 > -1.0) return inf;
          // c1 = -1: the diverging Drude factor is cancelled by the bracket,
          // leaving 1 + (omega_p/gamma)^2.
          return 1.0 + (p.omega_p / p.gamma) * (p.omega_p / p.gamma);
        }
      },
      model);
}

std::complex<double> conductivity_drude_smith(const DrudeSmithParams& p, double omega) {
  if (!(omega >= 0.0))
    throw std::domain_error("conductivity_drude_smith: omega must be >= 0");
  const std::complex<double> denom(p.gamma, -omega);
  const double pre = p.omega_p * p.omega_p / (4.0 * M_PI);
  return pre / denom * (1.0 + p.c1 * p.gamma / denom);
}

double dc_conductivity_ratio(const DrudeSmithParams& p) {
  return (10.0 + 10.0 * p.c1) / 10.0;
}

DrudeSmithParams FilmRecord::drude_smith() const {
  return DrudeSmithParams(omega_p_1e15 * 1.0e15 / units::omega0,
                          units::gamma_w0_from_tau_fs(tau_fs), c1);
}

const std::array<FilmRecord, 5>& table1_registry() {
  static const std::array<FilmRecord, 5> rows = {{
      {20.0, 13.19, 18.0, 0.0, 1.0},
      {15.0, 10.05, 19.0, 0.0, 1.0},
      {10.0, 6.28, 19.0, 0.0, 1.0},
      {6.4, 1.25, 80.0, -0.7, 0.3},
      {4.0, 1.88, 20.0, -1.0, 0.0},
  }};
  return rows;
}

const FilmRecord& table1_film(double thickness_nm) {
  for (const auto& row : table1_registry())
    if (row.thickness_nm == thickness_nm) return row;
  throw std::out_of_range("table1_film: no measured row for this thickness");
}

Drude bulk_gold() {
  const auto p = table1_film(20.0).drude_smith();
  return Drude(p.omega_p, p.gamma);
}

LorentzOscillator silicon_substrate() { return LorentzOscillator(11.87, 0.66); }

} // namespace casfilm
