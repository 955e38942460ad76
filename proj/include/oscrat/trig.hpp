#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "oscrat/common.hpp"
#include "oscrat/fft.hpp"
#include "oscrat/quadrature.hpp"

namespace oscrat {

/// Uniform grid theta_l = 2 pi l / n on the periodic interval, together with
/// the split n = n_plus + n_minus + 1 that fixes the retained mode range
/// k = -n_minus .. n_plus for both even and odd n.
struct TrigGrid {
  explicit TrigGrid(int order) : n(order) {
    if (n < 1) throw std::invalid_argument("TrigGrid: order must be >= 1");
    n_plus = n / 2;
    n_minus = (n - 1) / 2;
    nodes.resize(n);
    for (int l = 0; l < n; ++l) nodes[l] = 2.0 * pi * l / n;
  }

  int n;
  int n_plus;
  int n_minus;
  std::vector<double> nodes;
};

/// Discrete Fourier coefficients F~_k for k = -n_minus .. n_plus, stored in
/// ascending k with coeffs[k + n_minus].
struct TrigCoefficients {
  TrigGrid grid;
  std::vector<complex_t> coeffs;

  complex_t at(int k) const {
    if (k < -grid.n_minus || k > grid.n_plus) return {0.0, 0.0};
    return coeffs[static_cast<std::size_t>(k + grid.n_minus)];
  }
};

/// Discrete Fourier transform of order n,
///   F~_k = (1/n) sum_j e^{-i k theta_j} F(theta_j),
/// computed with a fast transform and reindexed onto k = -n_minus .. n_plus.
inline TrigCoefficients dft(const TrigGrid& grid, std::span<const complex_t> samples) {
  const int n = grid.n;
  if (static_cast<int>(samples.size()) != n) {
    throw std::invalid_argument("dft: sample count must equal the grid order");
  }
  std::vector<complex_t> work(samples.begin(), samples.end());
  detail::fft(work, /*forward=*/true);
  std::vector<complex_t> coeffs(n);
  for (int k = -grid.n_minus; k <= grid.n_plus; ++k) {
    coeffs[static_cast<std::size_t>(k + grid.n_minus)] =
        work[static_cast<std::size_t>((k + n) % n)] / static_cast<double>(n);
  }
  return {grid, std::move(coeffs)};
}

/// Trigonometric interpolant  sum_{k=-n_minus}^{n_plus} e^{i k theta} F~_k.
/// Reproduces the samples at the grid nodes to roundoff.
inline complex_t trig_eval(const TrigCoefficients& c, double theta) {
  const complex_t u = std::polar(1.0, theta);
  complex_t acc{0.0, 0.0};
  for (std::size_t m = c.coeffs.size(); m-- > 0;) acc = acc * u + c.coeffs[m];
  return acc * std::polar(1.0, -c.grid.n_minus * theta);
}

/// Dirichlet kernel D_n(theta) = sum_{k=-n_minus}^{n_plus} e^{i k theta}
/// (order 0) or its derivative (order 1).  Evaluated through the closed form
///   D_n(theta) = sin((n_minus + 1/2) theta) / sin(theta/2) + sigma e^{i theta n_plus},
/// where sigma = 1 exactly when n is even; near theta = 0 the literal sum is
/// used instead.  The correction carries the theta-dependent exponent
/// e^{i theta n_plus}: only that reading agrees with the literal sum, which
/// the test suite checks.
inline complex_t dirichlet_kernel(int n, double theta, int order = 0) {
  if (n < 1) throw std::invalid_argument("dirichlet_kernel: n must be >= 1");
  if (order != 0 && order != 1) {
    throw std::invalid_argument("dirichlet_kernel: order must be 0 or 1");
  }
  const int n_plus = n / 2;
  const int n_minus = (n - 1) / 2;
  const double half = 0.5 * theta;
  const double s = std::sin(half);
  // near the period the ratio form cancels badly; fall back to the sum
  if (std::abs(s) < 0.02) {
    complex_t acc{0.0, 0.0};
    for (int k = -n_minus; k <= n_plus; ++k) {
      const complex_t e = std::polar(1.0, k * theta);
      acc += (order == 0) ? e : im * static_cast<double>(k) * e;
    }
    return acc;
  }
  const double a = n_minus + 0.5;
  const bool even = (n_plus > n_minus);
  if (order == 0) {
    complex_t val{std::sin(a * theta) / s, 0.0};
    if (even) val += std::polar(1.0, n_plus * theta);
    return val;
  }
  const double c = std::cos(half);
  complex_t val{(a * std::cos(a * theta) * s - 0.5 * c * std::sin(a * theta)) / (s * s), 0.0};
  if (even) val += im * static_cast<double>(n_plus) * std::polar(1.0, n_plus * theta);
  return val;
}

namespace detail {

/// Composite Simpson of g over [0, 2 pi] with `intervals` panels (even).
template <class G>
double simpson_periodic(const G& g, long intervals) {
  const double h = 2.0 * pi / static_cast<double>(intervals);
  double sum = g(0.0) + g(2.0 * pi);
  double comp = 0.0;
  for (long i = 1; i < intervals; ++i) {
    kahan_add(sum, comp, (i % 2 == 1 ? 4.0 : 2.0) * g(i * h));
  }
  return sum * h / 3.0;
}

}  // namespace detail

/// Numerical L^p norm of D_n or D_n' over the period.  Composite quadrature
/// on a grid resolving the fastest oscillation (at least 40 n points), with
/// the grid doubled until the norm settles to 1e-6 relative.
inline double kernel_norm(int n, double p, int order = 0) {
  if (n < 1) throw std::invalid_argument("kernel_norm: n must be >= 1");
  if (!(p >= 1.0)) throw std::invalid_argument("kernel_norm: p must be >= 1");
  const auto g = [n, p, order](double theta) {
    return std::pow(std::abs(dirichlet_kernel(n, theta, order)), p);
  };
  long intervals = std::max<long>(40L * n, 512L);
  if (intervals % 2 != 0) ++intervals;
  double norm = std::pow(detail::simpson_periodic(g, intervals), 1.0 / p);
  for (int pass = 0; pass < 8; ++pass) {
    intervals *= 2;
    const double refined = std::pow(detail::simpson_periodic(g, intervals), 1.0 / p);
    const double change = std::abs(refined - norm);
    norm = refined;
    if (change <= 1e-6 * std::abs(norm)) break;
  }
  return norm;
}

/// Lebesgue function maximum max_theta (1/n) sum_l |D_n(theta - theta_l)|,
/// scanned on a grid of 40 n points; always >= 1, with equality at n = 1.
inline double lebesgue_constant(int n) {
  if (n < 1) throw std::invalid_argument("lebesgue_constant: n must be >= 1");
  const TrigGrid grid(n);
  const long points = 40L * n;
  double best = 0.0;
  for (long i = 0; i < points; ++i) {
    const double theta = 2.0 * pi * i / points;
    double sum = 0.0;
    double comp = 0.0;
    for (int l = 0; l < n; ++l) {
      detail::kahan_add(sum, comp, std::abs(dirichlet_kernel(n, theta - grid.nodes[l])));
    }
    best = std::max(best, sum / n);
  }
  return best;
}

/// Quadrature oracle for the continuous Fourier coefficient
///   F^_k = (1 / 2 pi) int_0^{2 pi} e^{-i k theta} F(theta) dtheta,
/// used to probe aliasing of the discrete transform against the true
/// coefficients.  Throws ConvergenceError when the adaptive error estimate
/// exceeds the requested tolerance.
inline complex_t fourier_coefficient_oracle(const std::function<complex_t(double)>& F, int k,
                                            double tol = 1e-10) {
  const std::function<complex_t(double)> g = [&F, k](double theta) {
    return std::polar(1.0, -k * theta) * F(theta);
  };
  const double panel_w = 2.0 * pi / std::max(8.0, 6.0 * std::abs(k));
  const auto est = integrate_adaptive(g, 0.0, 2.0 * pi, tol * pi, panel_w);
  if (est.error > tol * 2.0 * pi) {
    throw ConvergenceError("fourier_coefficient_oracle: quadrature did not converge");
  }
  return est.value / (2.0 * pi);
}

}  // namespace oscrat
