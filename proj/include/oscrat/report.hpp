#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "oscrat/calculus.hpp"
#include "oscrat/common.hpp"
#include "oscrat/oscillatory.hpp"
#include "oscrat/testfn.hpp"

namespace oscrat {

/// Discrete error norms of an approximant against a reference, evaluated on
/// one uniform grid: the sup norm, the L^2 norm, the H^1 norm (function plus
/// first derivative) and the L^1 norm of the derivative error.
struct ErrorRecord {
  double sup = 0.0;
  double l2 = 0.0;
  double h1 = 0.0;
  double l1_derivative = 0.0;
};

struct EvalGrid {
  double x_max = 60.0;
  int points = 4001;
};

/// Error norms over the uniform grid on [-x_max, x_max].  The approximant
/// derivative comes from coefficient-space differentiation; the reference
/// derivative from its exact handles (or a stencil fallback).  L^2/L^1
/// integrals use the composite trapezoid rule on the same grid.
inline ErrorRecord error_report(const OscillatoryFunction& approx, const TestCase& reference,
                                const EvalGrid& grid = {}) {
  if (grid.points < 2) throw std::invalid_argument("error_report: need at least two points");
  const OscillatoryFunction deriv = differentiate_osc(approx);
  const double h = 2.0 * grid.x_max / (grid.points - 1);
  ErrorRecord rec;
  double sum2 = 0.0, comp2 = 0.0;
  double sum2d = 0.0, comp2d = 0.0;
  double sum1d = 0.0, comp1d = 0.0;
  for (int i = 0; i < grid.points; ++i) {
    const double x = -grid.x_max + h * i;
    const double w = (i == 0 || i == grid.points - 1) ? 0.5 : 1.0;
    const double e = std::abs(approx(x) - reference.value(x));
    const double ed = std::abs(deriv(x) - reference.derivative(x));
    rec.sup = std::max(rec.sup, e);
    detail::kahan_add(sum2, comp2, w * e * e);
    detail::kahan_add(sum2d, comp2d, w * ed * ed);
    detail::kahan_add(sum1d, comp1d, w * ed);
  }
  rec.l2 = std::sqrt(h * sum2);
  rec.h1 = std::sqrt(h * (sum2 + sum2d));
  rec.l1_derivative = h * sum1d;
  return rec;
}

/// Per-order error norms of the interpolation sweep plus the decay orders
/// between consecutive n (slopes of -log sup error against log n; they grow
/// without bound for spectrally convergent references).
struct ConvergenceReport {
  std::vector<int> n_values;
  std::vector<ErrorRecord> errors;
  std::vector<double> fitted_orders;
};

inline ConvergenceReport convergence_sweep(const TestCase& reference,
                                           const std::vector<int>& n_values, double beta,
                                           const EvalGrid& grid = {}) {
  if (n_values.empty()) throw std::invalid_argument("convergence_sweep: no orders given");
  if (!std::is_sorted(n_values.begin(), n_values.end())) {
    throw std::invalid_argument("convergence_sweep: orders must be increasing");
  }
  const MobiusMap map(beta);
  ConvergenceReport report;
  report.n_values = n_values;
  for (int n : n_values) {
    report.errors.push_back(error_report(approximate(reference, n, map), reference, grid));
  }
  for (std::size_t i = 0; i + 1 < n_values.size(); ++i) {
    const double e0 = std::max(report.errors[i].sup, 1e-300);
    const double e1 = std::max(report.errors[i + 1].sup, 1e-300);
    report.fitted_orders.push_back(-(std::log(e1) - std::log(e0)) /
                                   (std::log(double(n_values[i + 1])) - std::log(double(n_values[i]))));
  }
  return report;
}

/// Least-squares line fit with the coefficient of determination.
struct LinearFit {
  double intercept = 0.0;
  double slope = 0.0;
  double r_squared = 0.0;
};

inline LinearFit fit_linear(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit_linear: need matching samples, at least two");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += r * r;
  }
  fit.r_squared = (syy == 0.0) ? 1.0 : 1.0 - ss_res / syy;
  return fit;
}

}  // namespace oscrat
