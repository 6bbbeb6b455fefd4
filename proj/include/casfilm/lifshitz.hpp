#pragma once

#include <stdexcept>

#include "casfilm/materials.hpp"

namespace casfilm {

// Two facing bodies across a vacuum gap: body 1 a half-space, body 2 a film
// of given thickness on a half-space substrate. Lengths in c/omega0 units.
// thickness = +inf makes body 2 a half-space of the film material;
// thickness = 0 leaves bare substrate.
struct LayeredStack {
  DielectricModel body1;
  DielectricModel film;
  double thickness;
  DielectricModel substrate;
  double gap;

  LayeredStack(DielectricModel body1, DielectricModel film, double thickness,
               DielectricModel substrate, double gap);

  static LayeredStack half_spaces(DielectricModel body1, DielectricModel body2,
                                  double gap);
};

// Integration variables for the force integral: the primary smooth (xi, Q)
// plane, or the (k, Q) plane as a cross-check route.
enum class VariableMap { xi_q, k_q };

struct QuadratureSpec {
  double rel_tol = 1e-6;
  double abs_tol = 0.0;           // absolute floor, Pa
  int max_refinements = 20;
  VariableMap transform = VariableMap::xi_q;
};

struct ForceResult {
  double pressure = 0.0;   // magnitude, Pa (the force is attractive)
  double eta = 0.0;        // pressure / ideal-conductor pressure
  double est_error = 0.0;  // quadrature error estimate, Pa
  long evaluations = 0;    // integrand calls
};

class ConvergenceError : public std::runtime_error {
 public:
  ForceResult best;
  explicit ConvergenceError(const ForceResult& best_result);
};

// Ideal-conductor pressure magnitude hbar c pi^2 / (240 L^4) in Pa, for a
// gap in c/omega0 units. Throws std::domain_error for gap <= 0.
double ideal_casimir_pressure(double gap);

// Density of the force integral in the (xi, Q) plane: Q k (G_s + G_p) with
// G = r1 r2 e^{-2kL} / (1 - r1 r2 e^{-2kL}) per polarization.
double integrand(const LayeredStack& stack, double xi, double Q);

// Evaluates the double integral adaptively to spec tolerances. Throws
// ConvergenceError (carrying the best estimate and achieved error) if the
// tolerance is not met within max_refinements rounds.
ForceResult casimir_force(const LayeredStack& stack,
                          const QuadratureSpec& spec = {});

double reduction_factor(const LayeredStack& stack,
                        const QuadratureSpec& spec = {});

} // namespace casfilm
