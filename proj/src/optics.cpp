#include "casfilm/optics.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace casfilm {

namespace {

// All radicands are positive on the imaginary axis with eps >= 1; the
// positive branch is the only one needed.
inline double kappa(double eps, double xi, double Q) {
  const double radicand = eps * xi * xi + Q * Q;
  assert(radicand >= 0.0);
  return std::sqrt(radicand);
}

inline LayerReflection fresnel_from_kappas(double kappa_i, double kappa_j,
                                           double eps_i, double eps_j) {
  const double rs = (kappa_i - kappa_j) / (kappa_i + kappa_j);
  const double rp = (eps_j * kappa_i - eps_i * kappa_j) /
                    (eps_j * kappa_i + eps_i * kappa_j);
  return {rs, rp};
}

// exp(-2 delta) underflows below the double range for 2 delta > 745; clamp
// instead of evaluating into denormals.
inline double attenuation(double two_delta) {
  return two_delta > 745.0 ? 0.0 : std::exp(-two_delta);
}

inline double compose(double r01, double r12, double e2d) {
  return (r01 + r12 * e2d) / (1.0 + r01 * r12 * e2d);
}

} // namespace

WaveContext::WaveContext(double xi_, double Q_) : xi(xi_), Q(Q_), k(0.0) {
  if (!(xi > 0.0)) throw std::domain_error("WaveContext: xi must be > 0");
  if (!(Q >= 0.0)) throw std::domain_error("WaveContext: Q must be >= 0");
  k = std::sqrt(xi * xi + Q * Q);
}

LayerReflection fresnel(const WaveContext& ctx, double eps_i, double eps_j) {
  return fresnel_from_kappas(kappa(eps_i, ctx.xi, ctx.Q),
                             kappa(eps_j, ctx.xi, ctx.Q), eps_i, eps_j);
}

double optical_length(const WaveContext& ctx, double eps_film, double d) {
  if (!(d > 0.0)) throw std::domain_error("optical_length: d must be > 0");
  const double radicand = ctx.xi * ctx.xi * (eps_film - 1.0) + ctx.k * ctx.k;
  assert(radicand >= 0.0);
  return d * std::sqrt(radicand);
}

LayerReflection layer_reflection(const WaveContext& ctx, double eps_film,
                                 double d, double eps_substrate) {
  if (!(d >= 0.0)) throw std::domain_error("layer_reflection: d must be >= 0");
  const double k0 = ctx.k;
  const double k1 = kappa(eps_film, ctx.xi, ctx.Q);
  const auto r01 = fresnel_from_kappas(k0, k1, 1.0, eps_film);
  if (std::isinf(d)) return r01;  // half-space film

  const double k2 = kappa(eps_substrate, ctx.xi, ctx.Q);
  const auto r12 = fresnel_from_kappas(k1, k2, eps_film, eps_substrate);
  const double e2d =
      d == 0.0 ? 1.0 : attenuation(2.0 * optical_length(ctx, eps_film, d));
  return {compose(r01.rs, r12.rs, e2d), compose(r01.rp, r12.rp, e2d)};
}

double optical_length_percent_diff(const WaveContext& ctx,
                                   const DielectricModel& film,
                                   const DielectricModel& reference, double d) {
  const double delta_film = optical_length(ctx, epsilon_iw(film, ctx.xi), d);
  const double delta_ref = optical_length(ctx, epsilon_iw(reference, ctx.xi), d);
  return 100.0 * std::abs(delta_film - delta_ref) / delta_film;
}

} // namespace casfilm
