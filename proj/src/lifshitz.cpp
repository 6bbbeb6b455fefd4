#include "casfilm/lifshitz.hpp"

#include <cassert>
#include <cmath>
#include <span>

#include "casfilm/optics.hpp"
#include "casfilm/quadrature.hpp"
#include "casfilm/units.hpp"

namespace casfilm {

namespace {

// hbar c (omega0/c)^4: converts the reduced double integral to Pa.
const double kPressureScale =
    units::hbar * units::omega0 / (units::length_unit_m * units::length_unit_m *
                                   units::length_unit_m);

inline double clamped_exp_neg(double x) { return x > 745.0 ? 0.0 : std::exp(-x); }

// Core density at one (xi, Q) node with the three permittivities already
// evaluated. Shared by the public integrand and the quadrature rows so both
// paths run identical arithmetic.
inline double density(const LayeredStack& stack, double xi, double Q,
                      double eps1, double eps_film, double eps_sub) {
  const WaveContext ctx(xi, Q);
  const auto r1 = fresnel(ctx, 1.0, eps1);
  const auto r2 = layer_reflection(ctx, eps_film, stack.thickness, eps_sub);
  const double ekl = clamped_exp_neg(2.0 * ctx.k * stack.gap);
  const double xs = r1.rs * r2.rs * ekl;
  const double xp = r1.rp * r2.rp * ekl;
  // |r1 r2 e^{-2kL}| < 1 for passive media; the product form of G stays
  // finite when either reflectivity vanishes.
  assert(std::abs(xs) < 1.0 && std::abs(xp) < 1.0);
  return Q * ctx.k * (xs / (1.0 - xs) + xp / (1.0 - xp));
}

struct EpsTriple {
  double body1, film, substrate;
};

inline EpsTriple eval_eps(const LayeredStack& stack, double xi) {
  return {epsilon_iw(stack.body1, xi), epsilon_iw(stack.film, xi),
          std::isinf(stack.thickness) ? 1.0 : epsilon_iw(stack.substrate, xi)};
}

// Primary route: rows at fixed xi reuse the three dielectric evaluations
// across all 15 Q nodes of a panel.
struct XiQRows {
  const LayeredStack& stack;
  quad::RationalMap map_xi;
  quad::RationalMap map_q;

  void row(double t1, std::span<const double> t2, std::span<double> out) const {
    const double xi = map_xi(t1);
    const double jac1 = map_xi.jacobian(t1);
    const EpsTriple eps = eval_eps(stack, xi);
    for (std::size_t j = 0; j < t2.size(); ++j) {
      const double Q = map_q(t2[j]);
      out[j] = density(stack, xi, Q, eps.body1, eps.film, eps.substrate) *
               jac1 * map_q.jacobian(t2[j]);
    }
  }
};

// Cross-check route in the printed (k, Q) variables: outer Q, inner
// k = Q cosh u so the k^2/sqrt(k^2 - Q^2) weight becomes the smooth
// Q^2 cosh^2 u. The frequency xi = Q sinh u varies along both axes, so no
// row reuse is possible here.
struct KQRows {
  const LayeredStack& stack;
  quad::RationalMap map_q;
  quad::RationalMap map_u;

  void row(double t1, std::span<const double> t2, std::span<double> out) const {
    const double Q = map_q(t1);
    const double jac1 = map_q.jacobian(t1);
    for (std::size_t j = 0; j < t2.size(); ++j) {
      const double u = map_u(t2[j]);
      const double cosh_u = u > 700.0 ? std::numeric_limits<double>::infinity()
                                      : std::cosh(u);
      if (2.0 * Q * cosh_u * stack.gap > 745.0) {
        out[j] = 0.0;  // exponential cutoff; avoids sinh/cosh overflow
        continue;
      }
      const double xi = Q * std::sinh(u);
      const EpsTriple eps = eval_eps(stack, xi);
      // density carries the Q k weight of the (xi, Q) form; rescale to the
      // Q^3 cosh^2 u weight of the (k, Q) form, with k = Q cosh u.
      const double d = density(stack, xi, Q, eps.body1, eps.film, eps.substrate);
      out[j] = d / (Q * std::sqrt(xi * xi + Q * Q)) * Q * Q * Q * cosh_u *
               cosh_u * jac1 * map_u.jacobian(t2[j]);
    }
  }
};

} // namespace

LayeredStack::LayeredStack(DielectricModel body1_, DielectricModel film_,
                           double thickness_, DielectricModel substrate_,
                           double gap_)
    : body1(std::move(body1_)),
      film(std::move(film_)),
      thickness(thickness_),
      substrate(std::move(substrate_)),
      gap(gap_) {
  if (!(gap > 0.0)) throw std::invalid_argument("LayeredStack: gap must be > 0");
  if (!(thickness >= 0.0))
    throw std::invalid_argument("LayeredStack: thickness must be >= 0");
}

LayeredStack LayeredStack::half_spaces(DielectricModel body1,
                                       DielectricModel body2, double gap) {
  return LayeredStack(std::move(body1), body2,
                      std::numeric_limits<double>::infinity(), std::move(body2),
                      gap);
}

ConvergenceError::ConvergenceError(const ForceResult& best_result)
    : std::runtime_error("casimir_force: quadrature tolerance not met"),
      best(best_result) {}

double ideal_casimir_pressure(double gap) {
  if (!(gap > 0.0))
    throw std::domain_error("ideal_casimir_pressure: gap must be > 0");
  const double L_m = gap * units::length_unit_m;
  return units::hbar * units::c_light * M_PI * M_PI /
         (240.0 * (L_m * L_m) * (L_m * L_m));
}

double integrand(const LayeredStack& stack, double xi, double Q) {
  if (!(xi > 0.0)) throw std::domain_error("integrand: xi must be > 0");
  if (!(Q >= 0.0)) throw std::domain_error("integrand: Q must be >= 0");
  if (Q == 0.0) return 0.0;  // the Q weight kills the axis
  const EpsTriple eps = eval_eps(stack, xi);
  return density(stack, xi, Q, eps.body1, eps.film, eps.substrate);
}

ForceResult casimir_force(const LayeredStack& stack, const QuadratureSpec& spec) {
  if (!(spec.rel_tol > 0.0 && spec.rel_tol <= 1e-2))
    throw std::invalid_argument("QuadratureSpec: rel_tol must lie in (0, 1e-2]");
  if (spec.max_refinements < 1)
    throw std::invalid_argument("QuadratureSpec: max_refinements must be >= 1");

  const double prefactor = kPressureScale / (2.0 * M_PI * M_PI);
  quad::Options opt;
  opt.rel_tol = spec.rel_tol;
  opt.abs_tol = spec.abs_tol / prefactor;
  opt.max_rounds = spec.max_refinements;

  quad::Result qr;
  if (spec.transform == VariableMap::xi_q) {
    // xi on an omega0-order scale, Q on the 1/(2L) scale of the exponential
    // cutoff.
    XiQRows rows{stack, {1.0}, {0.5 / stack.gap}};
    qr = quad::integrate2d(rows, opt);
  } else {
    KQRows rows{stack, {0.5 / stack.gap}, {1.0}};
    qr = quad::integrate2d(rows, opt);
  }

  ForceResult res;
  res.pressure = prefactor * qr.value;
  res.eta = res.pressure / ideal_casimir_pressure(stack.gap);
  res.est_error = prefactor * qr.abs_error;
  res.evaluations = qr.evaluations;
  if (!qr.converged) throw ConvergenceError(res);
  return res;
}

double reduction_factor(const LayeredStack& stack, const QuadratureSpec& spec) {
  return casimir_force(stack, spec).eta;
}

} // namespace casfilm
