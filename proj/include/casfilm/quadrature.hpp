#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

// Two-dimensional adaptive quadrature on the open unit square, built from
// tensor 15-point Gauss-Kronrod panels. The integrand is evaluated row by
// row (fixed first coordinate, 15 second coordinates) so implementations can
// hoist per-row work such as dielectric function evaluations.
//
// Refinement: each round bisects every panel whose error exceeds its
// area-proportional share of the tolerance, splitting along the axis whose
// embedded 7-point Gauss rule disagrees more with the Kronrod rule. All
// bookkeeping is sequential and the final sum runs in a canonical panel
// order, so results are bitwise reproducible.

namespace casfilm::quad {

// QUADPACK dqk15 abscissae and weights, nodes in ascending order on (-1, 1).
// The 7-point Gauss subset sits at the odd indices.
inline constexpr int kPanelNodes = 15;

inline constexpr std::array<double, 15> kNodes = {
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.0,
    0.207784955007898467600689403773245,  0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,  0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,  0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

inline constexpr std::array<double, 15> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

// Gauss weight for node i, zero at the Kronrod-only (even) indices.
inline constexpr std::array<double, 15> kGaussWeights = {
    0.0, 0.129484966168869693270611432679082,
    0.0, 0.279705391489276667901467771423780,
    0.0, 0.381830050505118944950369775488975,
    0.0, 0.417959183673469387755102040816327,
    0.0, 0.381830050505118944950369775488975,
    0.0, 0.279705391489276667901467771423780,
    0.0, 0.129484966168869693270611432679082,
    0.0};

// x = scale * t / (1 - t) maps the open unit interval onto (0, inf).
struct RationalMap {
  double scale;
  double operator()(double t) const { return scale * t / (1.0 - t); }
  double jacobian(double t) const {
    const double u = 1.0 - t;
    return scale / (u * u);
  }
};

struct Options {
  double rel_tol = 1e-6;
  double abs_tol = 0.0;
  int max_rounds = 20;
  int initial_splits = 4;          // seed grid per axis
  std::size_t max_panels = 65536;  // hard safety cap
};

struct Result {
  double value = 0.0;
  double abs_error = 0.0;
  long evaluations = 0;
  int rounds = 0;
  bool converged = false;
};

namespace detail {

struct Panel {
  double a1, b1, a2, b2;
  double value;
  double err;       // err1 + err2
  double err_axis1; // |KK - GK|: first-axis rule degradation
  double err_axis2; // |KK - KG|
  double area() const { return (b1 - a1) * (b2 - a2); }
};

// Neumaier-compensated sum in the order given.
inline double compensated_sum(const std::vector<double>& xs) {
  double s = 0.0, comp = 0.0;
  for (double x : xs) {
    const double t = s + x;
    comp += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
    s = t;
  }
  return s + comp;
}

} // namespace detail

// F must provide: void row(double t1, std::span<const double> t2,
//                          std::span<double> out)
// writing the transformed integrand (jacobians included) at the 15 points
// (t1, t2[j]) of the open unit square.
template <class F>
Result integrate2d(F&& f, const Options& opt) {
  using detail::Panel;

  std::array<double, kPanelNodes> t2{};
  std::array<double, kPanelNodes> vals{};
  long evaluations = 0;

  auto evaluate = [&](Panel& p) {
    const double c1 = 0.5 * (p.a1 + p.b1), h1 = 0.5 * (p.b1 - p.a1);
    const double c2 = 0.5 * (p.a2 + p.b2), h2 = 0.5 * (p.b2 - p.a2);
    for (int j = 0; j < kPanelNodes; ++j) t2[j] = c2 + h2 * kNodes[j];

    double kk = 0.0, gk = 0.0, kg = 0.0;
    for (int i = 0; i < kPanelNodes; ++i) {
      f.row(c1 + h1 * kNodes[i], std::span<const double>(t2),
            std::span<double>(vals));
      double row_k = 0.0, row_g = 0.0;
      for (int j = 0; j < kPanelNodes; ++j) {
        row_k += kKronrodWeights[j] * vals[j];
        row_g += kGaussWeights[j] * vals[j];
      }
      kk += kKronrodWeights[i] * row_k;
      gk += kGaussWeights[i] * row_k;
      kg += kKronrodWeights[i] * row_g;
    }
    evaluations += kPanelNodes * kPanelNodes;

    const double scale = h1 * h2;
    p.value = scale * kk;
    p.err_axis1 = std::abs(scale * (kk - gk));
    p.err_axis2 = std::abs(scale * (kk - kg));
    p.err = p.err_axis1 + p.err_axis2;
  };

  std::vector<Panel> panels;
  const int n0 = std::max(1, opt.initial_splits);
  panels.reserve(static_cast<std::size_t>(n0) * n0);
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n0; ++j) {
      Panel p{i / double(n0), (i + 1) / double(n0),
              j / double(n0), (j + 1) / double(n0),
              0.0, 0.0, 0.0, 0.0};
      evaluate(p);
      panels.push_back(p);
    }

  auto totals = [&]() {
    double est = 0.0, err = 0.0;
    for (const auto& p : panels) {
      est += p.value;
      err += p.err;
    }
    return std::pair{est, err};
  };

  Result res;
  int round = 0;
  for (;; ++round) {
    auto [est, err] = totals();
    const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(est));
    res.converged = err <= tol;
    if (res.converged || round >= opt.max_rounds ||
        panels.size() > opt.max_panels)
      break;

    std::vector<std::size_t> marked;
    for (std::size_t i = 0; i < panels.size(); ++i)
      if (panels[i].err > tol * panels[i].area()) marked.push_back(i);
    if (marked.empty()) {
      // err > tol implies at least one panel exceeds its share; guard anyway.
      std::size_t worst = 0;
      for (std::size_t i = 1; i < panels.size(); ++i)
        if (panels[i].err > panels[worst].err) worst = i;
      marked.push_back(worst);
    }

    for (std::size_t idx : marked) {
      Panel left = panels[idx], right = panels[idx];
      if (panels[idx].err_axis1 >= panels[idx].err_axis2) {
        const double mid = 0.5 * (panels[idx].a1 + panels[idx].b1);
        left.b1 = mid;
        right.a1 = mid;
      } else {
        const double mid = 0.5 * (panels[idx].a2 + panels[idx].b2);
        left.b2 = mid;
        right.a2 = mid;
      }
      evaluate(left);
      evaluate(right);
      panels[idx] = left;
      panels.push_back(right);
    }
  }

  // Canonical order: the sum must not depend on the split history.
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) {
    if (x.a1 != y.a1) return x.a1 < y.a1;
    return x.a2 < y.a2;
  });
  std::vector<double> vs, es;
  vs.reserve(panels.size());
  es.reserve(panels.size());
  for (const auto& p : panels) {
    vs.push_back(p.value);
    es.push_back(p.err);
  }
  res.value = detail::compensated_sum(vs);
  res.abs_error = detail::compensated_sum(es);
  res.evaluations = evaluations;
  res.rounds = round;
  return res;
}

} // namespace casfilm::quad
