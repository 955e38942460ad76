#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oscrat/common.hpp"
#include "oscrat/mobius.hpp"
#include "oscrat/oscillatory.hpp"
#include "oscrat/specfun.hpp"
#include "oscrat/trig.hpp"

namespace oscrat {

/// Fourier transform of one basis element,
///   omega_j(k) = PV int e^{-i k x} R_j(x) dx
///              = 0                                          sign(j) = -sign(k)
///              = -2 pi |j| beta                             k = 0 (PV value)
///              = -4 pi beta e^{-|k| beta} L_{|j|-1}^{(1)}(2 |k| beta)   otherwise,
/// and omega_0 = 0.  The Laguerre order (superscript 1) is pinned by the
/// residue computation at -i beta — the plain sum over the pole expansion of
/// R_j yields sum_m C(j,m)(-1)^m (2 k beta)^{m-1}/(m-1)! = -L_{j-1}^{(1)} —
/// and is verified against the principal-value quadrature oracle in the
/// tests.  Consistently, the PV value at k = 0 is the midpoint of the two
/// one-sided limits -4 pi beta L_{j-1}^{(1)}(0) = -4 pi j beta and 0.
inline double fourier_weight(int j, double k, double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("fourier_weight: beta must be positive");
  if (j == 0) return 0.0;
  if ((j > 0 && k < 0.0) || (j < 0 && k > 0.0)) return 0.0;
  const double aj = std::abs(j);
  if (k == 0.0) return -2.0 * pi * aj * beta;
  return -4.0 * pi * beta * std::exp(-std::abs(k) * beta) *
         laguerre(static_cast<int>(aj) - 1, 1, 2.0 * std::abs(k) * beta);
}

/// omega_j(k) tabulated over a contiguous index range.  omega_0 = 0 and the
/// whole sign-mismatched side vanishes.
struct FourierWeightTable {
  MobiusMap map;
  double k;
  int j_min;
  int j_max;
  std::vector<double> weights;

  double at(int j) const {
    if (j < j_min || j > j_max) return 0.0;
    return weights[static_cast<std::size_t>(j - j_min)];
  }
};

inline FourierWeightTable fourier_weight_table(const MobiusMap& map, double k, int j_min,
                                               int j_max) {
  if (j_min > j_max) throw std::invalid_argument("fourier_weight_table: empty index range");
  FourierWeightTable table{map, k, j_min, j_max,
                           std::vector<double>(static_cast<std::size_t>(j_max - j_min + 1), 0.0)};
  const double beta = map.beta();
  if (k == 0.0) {
    for (int j = j_min; j <= j_max; ++j) {
      if (j != 0) table.weights[static_cast<std::size_t>(j - j_min)] = -2.0 * pi * std::abs(j) * beta;
    }
    return table;
  }
  // One Laguerre recurrence sweep covers the whole sign-matching side.
  const int side = (k > 0.0) ? 1 : -1;
  const int top = (side > 0) ? j_max : -j_min;
  if (top < 1) return table;
  const double x = 2.0 * std::abs(k) * beta;
  const double scale = -4.0 * pi * beta * std::exp(-std::abs(k) * beta);
  std::vector<double> lag(static_cast<std::size_t>(top), 0.0);  // L_d^{(1)}(x), d = 0..top-1
  lag[0] = 1.0;
  if (top > 1) lag[1] = 2.0 - x;
  for (int d = 1; d + 1 < top; ++d) {
    lag[static_cast<std::size_t>(d + 1)] =
        ((2.0 * d + 2.0 - x) * lag[static_cast<std::size_t>(d)] -
         (d + 1.0) * lag[static_cast<std::size_t>(d - 1)]) /
        (d + 1.0);
  }
  for (int m = 1; m <= top; ++m) {
    const int j = side * m;
    if (j >= j_min && j <= j_max) {
      table.weights[static_cast<std::size_t>(j - j_min)] = scale * lag[static_cast<std::size_t>(m - 1)];
    }
  }
  return table;
}

/// Fourier transform of the whole oscillatory function at wavenumber k:
/// modulation shifts each part, F[e^{-i k_m x} g_m](k) = F g_m(k + k_m), so
/// the result is  sum_m sum_j alpha_{j,m} omega_j(k + k_m).  At the jump
/// points k = -k_m the principal-value branch of omega is returned.
inline complex_t fourier_transform(const OscillatoryFunction& g, double k) {
  complex_t acc{0.0, 0.0};
  for (const auto& part : g.parts()) {
    const double kappa = k + part.wavenumber;
    const RationalExpansion& e = part.expansion;
    const auto table = fourier_weight_table(g.map(), kappa, e.j_min(), e.j_max());
    for (int j = e.j_min(); j <= e.j_max(); ++j) {
      if (j == 0) continue;
      acc += e.stored(j) * table.at(j);
    }
  }
  return acc;
}

/// Quadrature weights w_l with nodes x_l = T(theta_l): for any f sampled on
/// the mapped grid (the l = 0 node sits at infinity and carries the decay
/// limit), sum_l w_l f(x_l) equals the Fourier transform of the order-n
/// interpolant of f at wavenumber k.  That identity forces
///   w_l = (1/n) sum_j omega_j(k) e^{-i j theta_l}.
inline std::vector<complex_t> quadrature_weights(int n, double k, const MobiusMap& map) {
  if (n < 1) throw std::invalid_argument("quadrature_weights: n must be >= 1");
  TrigGrid grid(n);
  const auto table = fourier_weight_table(map, k, -grid.n_minus, grid.n_plus);
  TrigCoefficients c{grid, std::vector<complex_t>(static_cast<std::size_t>(n))};
  for (int j = -grid.n_minus; j <= grid.n_plus; ++j) {
    c.coeffs[static_cast<std::size_t>(j + grid.n_minus)] = complex_t{table.at(j) / n, 0.0};
  }
  std::vector<complex_t> w(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    w[static_cast<std::size_t>(l)] = trig_eval(c, -grid.nodes[static_cast<std::size_t>(l)]);
  }
  return w;
}

/// Coefficient-space differentiation.  Each basis element maps to three
/// neighbours through one uniform rule,
///   R_j' = -i j/(2 beta) R_{j-1} + i j/beta R_j - i j/(2 beta) R_{j+1},
/// valid for every j != 0: conjugating the j > 0 identity flips both the
/// index signs and the i, which leaves the formula unchanged.  The
/// off-diagonal factors carry the 1/2 — the rule is self-consistent with
/// the direct derivative 2 i beta/(z + i beta)^2 = i/beta R_1 - i/(2 beta) R_2
/// — and both choices (the 1/2 and the uniform sign) are pinned by the
/// finite-difference oracle in the tests; tabulations without the 1/2, or
/// with an extra sign(j) on the negative side, fail it.  The R_0 output
/// slot is identically zero as a function and is stored as 0.
inline RationalExpansion differentiate(const RationalExpansion& e) {
  const double beta = e.map().beta();
  const int lo = e.j_min() - 1;
  const int hi = e.j_max() + 1;
  std::vector<complex_t> out(static_cast<std::size_t>(hi - lo + 1), complex_t{0.0, 0.0});
  const auto slot = [lo, &out](int j) -> complex_t& {
    return out[static_cast<std::size_t>(j - lo)];
  };
  for (int j = e.j_min(); j <= e.j_max(); ++j) {
    if (j == 0) continue;
    const complex_t a = e.stored(j);
    if (a == complex_t{0.0, 0.0}) continue;
    const complex_t off = -im * (static_cast<double>(j) / (2.0 * beta)) * a;
    const complex_t diag = im * (static_cast<double>(j) / beta) * a;
    slot(j - 1) += off;
    slot(j) += diag;
    slot(j + 1) += off;
  }
  slot(0) = complex_t{0.0, 0.0};
  return RationalExpansion(e.map(), lo, hi, std::move(out));
}

/// Differentiation of the modulated sum: the product rule gives
///   D [e^{-i k x} g] = e^{-i k x} (g' - i k g),
/// so each part keeps its wavenumber.
inline OscillatoryFunction differentiate_osc(const OscillatoryFunction& g) {
  OscillatoryFunction out(g.map());
  for (const auto& part : g.parts()) {
    detail::CoefficientTable acc;
    acc.add_expansion(differentiate(part.expansion));
    acc.add_expansion(part.expansion, -im * part.wavenumber);
    auto combined = acc.to_expansion(g.map());
    // re-zero the R_0 slot picked up from the -i k g term
    std::vector<complex_t> coeffs = combined.coeffs();
    coeffs[static_cast<std::size_t>(-combined.j_min())] = complex_t{0.0, 0.0};
    out.add_part(part.wavenumber,
                 RationalExpansion(g.map(), combined.j_min(), combined.j_max(), std::move(coeffs)));
  }
  return out;
}

}  // namespace oscrat
