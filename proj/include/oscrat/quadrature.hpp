#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "oscrat/common.hpp"

namespace oscrat {

struct IntegralEstimate {
  complex_t value{0.0, 0.0};
  double error = 0.0;
};

namespace detail {

struct AdaptiveSimpson {
  const std::function<complex_t(double)>& f;
  int max_depth;
  complex_t total{0.0, 0.0};
  double err_total = 0.0;

  static complex_t rule(complex_t fa, complex_t fm, complex_t fb, double width) {
    return (width / 6.0) * (fa + 4.0 * fm + fb);
  }

  void refine(double a, double b, complex_t fa, complex_t fm, complex_t fb, complex_t whole,
              double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const complex_t flm = f(lm);
    const complex_t frm = f(rm);
    const complex_t left = rule(fa, flm, fm, m - a);
    const complex_t right = rule(fm, frm, fb, b - m);
    const complex_t delta = (left + right) - whole;
    if (depth >= max_depth || std::abs(delta) <= 15.0 * tol || m <= a || b <= m) {
      total += left + right + delta / 15.0;
      err_total += std::abs(delta) / 15.0;
      return;
    }
    refine(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1);
    refine(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace detail

/// Adaptive Simpson quadrature of a complex-valued integrand over [a, b]
/// with an absolute tolerance.  `breakpoints` forces initial panel edges
/// (values outside (a, b) are ignored); panels are otherwise at most
/// `max_panel_width` wide.
inline IntegralEstimate integrate_adaptive(const std::function<complex_t(double)>& f, double a,
                                           double b, double abs_tol,
                                           double max_panel_width = 0.0,
                                           const std::vector<double>& breakpoints = {},
                                           int max_depth = 48) {
  if (!(b > a)) return {};
  std::vector<double> edges{a, b};
  for (double x : breakpoints) {
    if (x > a && x < b) edges.push_back(x);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (max_panel_width > 0.0) {
    std::vector<double> dense;
    dense.push_back(edges.front());
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      const double w = edges[i + 1] - edges[i];
      const int pieces = std::max(1, static_cast<int>(std::ceil(w / max_panel_width)));
      for (int p = 1; p <= pieces; ++p) dense.push_back(edges[i] + w * p / pieces);
    }
    edges = std::move(dense);
  }

  detail::AdaptiveSimpson engine{f, max_depth};
  const double tol_per_panel = abs_tol / static_cast<double>(edges.size() - 1);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double lo = edges[i];
    const double hi = edges[i + 1];
    const double mid = 0.5 * (lo + hi);
    const complex_t flo = f(lo);
    const complex_t fmid = f(mid);
    const complex_t fhi = f(hi);
    engine.refine(lo, hi, flo, fmid, fhi,
                  detail::AdaptiveSimpson::rule(flo, fmid, fhi, hi - lo), tol_per_panel, 0);
  }
  return {engine.total, engine.err_total};
}

/// Geometrically shrinking breakpoints around `center`, used to resolve a
/// near-singular factor of known width `min_width`.
inline std::vector<double> cluster_breakpoints(double center, double half_width,
                                               double min_width) {
  std::vector<double> out{center};
  for (double w = half_width; w > min_width; w *= 0.5) {
    out.push_back(center - w);
    out.push_back(center + w);
  }
  return out;
}

/// Options for the principal-value integrators.  The symmetric truncation
/// radius sweeps from r_inner out to at most r_max.
struct PvOptions {
  double r_inner = 50.0;
  double r_max = 400.0;
  double tol = 1e-8;
  int max_shells = 24;
};

/// PV integral over the real line of e^{-i k x} f(x), by symmetric
/// truncation with tail acceleration:
///
///  * k = 0: the truncated integrals I(R), R doubling from r_inner, have a
///    tail expansion in odd powers of 1/R (even powers cancel by symmetry);
///    Richardson extrapolation removes them.
///  * k != 0: truncation radii advance by half oscillation periods, making
///    the tail contributions alternate; iterated pairwise averaging then
///    converges like (kR)^{-q}.
///
/// Panels never exceed a tenth of the oscillation period.  Throws
/// ConvergenceError when the accelerated sweep does not settle below tol.
inline complex_t pv_oscillatory_integral(const std::function<complex_t(double)>& f, double k,
                                         const PvOptions& opt = {},
                                         const std::vector<double>& interior_breaks = {}) {
  const std::function<complex_t(double)> g = [&f, k](double x) {
    return std::polar(1.0, -k * x) * f(x);
  };
  const double panel_w =
      (k == 0.0) ? 5.0 : std::min(5.0, 2.0 * pi / (10.0 * std::abs(k)));
  const double seg_tol = opt.tol / (4.0 * (2.0 * opt.max_shells + 2.0));

  if (k == 0.0) {
    std::vector<complex_t> partial;  // I(R) for R = r_inner * 2^m
    complex_t acc =
        integrate_adaptive(g, -opt.r_inner, opt.r_inner, seg_tol, panel_w, interior_breaks)
            .value;
    partial.push_back(acc);
    for (double r = opt.r_inner; 2.0 * r <= opt.r_max * (1.0 + 1e-12); r *= 2.0) {
      acc += integrate_adaptive(g, r, 2.0 * r, seg_tol, panel_w).value;
      acc += integrate_adaptive(g, -2.0 * r, -r, seg_tol, panel_w).value;
      partial.push_back(acc);
    }
    // Richardson in 1/R against the odd-power tail a/R + b/R^3 + ...
    std::vector<complex_t> row = partial;
    complex_t best = row.back();
    double last_diff = std::abs(row.size() > 1 ? row[row.size() - 1] - row[row.size() - 2]
                                               : complex_t{1.0, 0.0});
    for (std::size_t level = 0; row.size() > 1; ++level) {
      const double factor = std::pow(2.0, 2.0 * level + 1.0);
      std::vector<complex_t> next(row.size() - 1);
      for (std::size_t i = 0; i + 1 < row.size(); ++i) {
        next[i] = (factor * row[i + 1] - row[i]) / (factor - 1.0);
      }
      row = std::move(next);
      const double diff = std::abs(row.back() - best);
      best = row.back();
      last_diff = diff;
    }
    if (last_diff > opt.tol) {
      throw ConvergenceError("pv_oscillatory_integral: truncation sweep did not converge");
    }
    return best;
  }

  const double h = pi / std::abs(k);
  const int shells =
      std::min(opt.max_shells, static_cast<int>(std::floor((opt.r_max - opt.r_inner) / h)));
  if (shells < 4) {
    throw ConvergenceError(
        "pv_oscillatory_integral: truncation range too short for this wavenumber");
  }
  std::vector<complex_t> partial;
  complex_t acc =
      integrate_adaptive(g, -opt.r_inner, opt.r_inner, seg_tol, panel_w, interior_breaks).value;
  partial.push_back(acc);
  for (int m = 0; m < shells; ++m) {
    const double lo = opt.r_inner + m * h;
    const double hi = lo + h;
    acc += integrate_adaptive(g, lo, hi, seg_tol, panel_w).value;
    acc += integrate_adaptive(g, -hi, -lo, seg_tol, panel_w).value;
    partial.push_back(acc);
  }
  // Iterated averaging of the alternating truncation sequence.
  std::vector<complex_t> row = partial;
  complex_t best = row.back();
  double best_diff = std::numeric_limits<double>::infinity();
  complex_t prev_apex = row.front();
  while (row.size() > 1) {
    std::vector<complex_t> next(row.size() - 1);
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      next[i] = 0.5 * (row[i] + row[i + 1]);
    }
    row = std::move(next);
    const double diff = std::abs(row.back() - prev_apex);
    prev_apex = row.back();
    if (diff < best_diff) {
      best_diff = diff;
      best = row.back();
    }
  }
  if (best_diff > opt.tol) {
    throw ConvergenceError("pv_oscillatory_integral: tail averaging did not converge");
  }
  return best;
}

/// Independent quadrature oracle for the Fourier transform convention
///   F f(k) = PV int e^{-i k x} f(x) dx.
/// `truncation` is the largest truncation radius of the sweep.
inline complex_t oracle_fourier(const std::function<complex_t(double)>& f, double k,
                                double truncation = 400.0, double tol = 1e-8) {
  PvOptions opt;
  opt.r_max = truncation;
  opt.r_inner = std::min(50.0, truncation / 8.0);
  opt.tol = tol;
  return pv_oscillatory_integral(f, k, opt);
}

/// Independent quadrature oracle for the oscillatory Cauchy integral
///   (1 / 2 pi i) PV int e^{-i k x} f(x) / (x - z) dx,   Im z != 0.
/// The panel layout is refined geometrically around Re z so that the
/// near-singular factor is resolved down to |Im z| / 4.
inline complex_t oracle_cauchy(const std::function<complex_t(double)>& f, double k, complex_t z,
                               double tol = 1e-8) {
  if (z.imag() == 0.0) {
    throw std::invalid_argument("oracle_cauchy: z must lie off the real axis");
  }
  const std::function<complex_t(double)> slow = [&f, z](double x) { return f(x) / (x - z); };
  PvOptions opt;
  opt.tol = tol * 2.0 * pi;
  const auto breaks =
      cluster_breakpoints(z.real(), 4.0, std::max(std::abs(z.imag()) / 4.0, 1e-14));
  const complex_t integral = pv_oscillatory_integral(slow, k, opt, breaks);
  return integral / (2.0 * pi * im);
}

}  // namespace oscrat
