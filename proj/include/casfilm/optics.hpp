#pragma once

#include "casfilm/materials.hpp"

namespace casfilm {

// One (xi, Q) evaluation point on the imaginary frequency axis. xi in omega0
// units, Q in omega0/c units, k = sqrt(xi^2 + Q^2).
struct WaveContext {
  double xi;
  double Q;
  double k;
  WaveContext(double xi, double Q);
};

// Reflection amplitudes for s (TE) and p (TM) polarization. Real on the
// imaginary axis for passive media.
struct LayerReflection {
  double rs;
  double rp;
};

// Single-interface Fresnel amplitudes for light going from medium i into
// medium j, both with real eps(i xi) >= 1.
LayerReflection fresnel(const WaveContext& ctx, double eps_i, double eps_j);

// Phase thickness delta of a film of thickness d (c/omega0 units): the
// exponent entering exp(-2 delta) in the layered reflection. Equals
// d * kappa_film on the rotated axis. Throws std::domain_error for d <= 0.
double optical_length(const WaveContext& ctx, double eps_film, double d);

// Reflection off a film of thickness d on a half-space substrate, seen from
// vacuum: r = (r01 + r12 e^{-2 delta}) / (1 + r01 r12 e^{-2 delta}) per
// polarization. d = 0 collapses to the vacuum/substrate interface and
// d = +inf to the vacuum/film interface.
LayerReflection layer_reflection(const WaveContext& ctx, double eps_film,
                                 double d, double eps_substrate);

// Percent difference 100 |delta(film) - delta(reference)| / delta(film) of
// the optical length when the film is described by two different models.
double optical_length_percent_diff(const WaveContext& ctx,
                                   const DielectricModel& film,
                                   const DielectricModel& reference, double d);

} // namespace casfilm
