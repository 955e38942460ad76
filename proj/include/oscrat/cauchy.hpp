#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oscrat/common.hpp"
#include "oscrat/mobius.hpp"
#include "oscrat/oscillatory.hpp"
#include "oscrat/specfun.hpp"

namespace oscrat {

/// Boundary value side of the Cauchy transform: plus approaches the real
/// axis from above, minus from below.
enum class CauchySide { plus, minus };

namespace detail {

inline double parity(int m) { return (m % 2 == 0) ? 1.0 : -1.0; }

/// eta_{j,n}(k) for n = 1..j in slot n (slot 0 unused), canonical arguments
/// j >= 1, k > 0:
///
///   eta_{j,n}(k) = -(-1)^n e^{-k beta} sum_{q=n}^{j} C(q,n) c_q,
///   c_q          = sum_{m=q}^{j} (-1)^m C(j,m) (2 k beta)^{m-q} / (m-q)!.
///
/// These are the expansion coefficients of the upper boundary value of the
/// Cauchy transform of R_{j,k} over the non-oscillatory basis {R_{n,0}},
/// obtained by a residue computation at the pole -i beta.  Equivalently
/// c_q = (-1)^q L_{j-q}^{(q)}(2 k beta), which the tests cross-check.  The
/// alternating sums lose accuracy for large j (the row is exact at small j:
/// eta_{1,1} = -e^{-k beta}, eta_{2,1} = 2 k beta e^{-k beta},
/// eta_{2,2} = -e^{-k beta}).
inline std::vector<double> eta_row(int j, double k, double beta) {
  const double x = 2.0 * k * beta;
  const double damp = std::exp(-k * beta);
  std::vector<double> c(static_cast<std::size_t>(j) + 1, 0.0);
  for (int q = 1; q <= j; ++q) {
    double sum = 0.0;
    double comp = 0.0;
    double w = 1.0;  // x^{m-q} / (m-q)!
    for (int m = q; m <= j; ++m) {
      kahan_add(sum, comp, parity(m) * binomial_real(j, m) * w);
      w *= x / static_cast<double>(m - q + 1);
    }
    c[static_cast<std::size_t>(q)] = sum;
  }
  std::vector<double> eta(static_cast<std::size_t>(j) + 1, 0.0);
  for (int n = 1; n <= j; ++n) {
    double sum = 0.0;
    double comp = 0.0;
    for (int q = n; q <= j; ++q) {
      kahan_add(sum, comp, binomial_real(q, n) * c[static_cast<std::size_t>(q)]);
    }
    eta[static_cast<std::size_t>(n)] = -parity(n) * damp * sum;
  }
  return eta;
}

}  // namespace detail

/// An alternative closed form for the same coefficients, in terms of a
/// binomial factor and the terminating Kummer function, retained for
/// diagnostics only:
///
///   gamma_{j,n}(k) = -(j/n) e^{-|k| beta} C(j-1, n) 1F1(n-j, 1+n, 2|k| beta).
///
/// Read with the standard binomial convention this expression yields
/// eta_{1,1} = 0 through the associated alternating sum, contradicting the
/// direct residue computation C^+ R_{1,k} = e^{-k beta} R_{1,0}; the
/// alternative reading C(j-1, n-1) fixes j = 1 but fails the j = 2 residue
/// values.  The residue-derived eta_row above is therefore authoritative,
/// and is validated wholesale against the quadrature oracle in the tests
/// (deciding cases: eta_{1,1}, eta_{2,1}, eta_{2,2}).
inline double gamma_literal(int j, int nn, double k, double beta) {
  if (j < 1) throw std::invalid_argument("gamma_literal: j must be >= 1");
  if (nn < 1 || nn > j) throw std::invalid_argument("gamma_literal: n must lie in [1, j]");
  const double x = 2.0 * std::abs(k) * beta;
  return -(static_cast<double>(j) / nn) * std::exp(-std::abs(k) * beta) *
         binomial_real(j - 1, nn) * kummer_terminating(nn - j, 1 + nn, x);
}

/// eta_{j,n}(k) in the only regime where it enters the transform, k j > 0;
/// mirror symmetry eta_{-j,n}(-k) = eta_{j,n}(k) reduces everything to the
/// canonical j >= 1, k > 0 row.
inline double eta_coeff(int j, int nn, double k, double beta) {
  if (j == 0) throw std::invalid_argument("eta_coeff: j must be nonzero");
  if (k * j <= 0.0) throw std::domain_error("eta_coeff: requires k * j > 0");
  const int aj = std::abs(j);
  if (nn < 1 || nn > aj) throw std::invalid_argument("eta_coeff: n must lie in [1, |j|]");
  return detail::eta_row(aj, std::abs(k), beta)[static_cast<std::size_t>(nn)];
}

/// Boundary values of the Cauchy transform on one basis element R_{j,k}:
///
///   k j < 0:  C^+ = R_{j,k} (j>0) / 0 (j<0);   C^- = 0 (j>0) / -R_{j,k} (j<0).
///   k j > 0:  C^+ = -sum eta_{j,n} R_{n,0}              (j>0)
///             C^+ = R_{j,k} + sum eta_{j,n} R_{-n,0}    (j<0)
///             C^- = -R_{j,k} - sum eta_{j,n} R_{n,0}    (j>0)
///             C^- = sum eta_{j,n} R_{-n,0}              (j<0),
///
/// and at k = 0 the k -> 0 limit of the k j < 0 branch (R_j is analytic in
/// the half plane that matches the sign of j).  In every case
/// plus - minus = R_{j,k} exactly, coefficient by coefficient.
inline OscillatoryFunction cauchy_basis(int j, double k, CauchySide side, const MobiusMap& map) {
  if (j == 0) throw std::invalid_argument("cauchy_basis: j must be nonzero");
  OscillatoryFunction out(map);
  const bool plus = (side == CauchySide::plus);
  if (k == 0.0) {
    if (plus && j > 0) out.add_term(0.0, j, {1.0, 0.0});
    if (!plus && j < 0) out.add_term(0.0, j, {-1.0, 0.0});
    return out;
  }
  if (k * j < 0.0) {
    if (plus && j > 0) out.add_term(k, j, {1.0, 0.0});
    if (!plus && j < 0) out.add_term(k, j, {-1.0, 0.0});
    return out;
  }
  const int aj = std::abs(j);
  const auto eta = detail::eta_row(aj, std::abs(k), map.beta());
  detail::CoefficientTable still;
  if (j > 0) {
    for (int n = 1; n <= aj; ++n) still.add(n, {-eta[static_cast<std::size_t>(n)], 0.0});
    if (!plus) out.add_term(k, j, {-1.0, 0.0});
  } else {
    for (int n = 1; n <= aj; ++n) still.add(-n, {eta[static_cast<std::size_t>(n)], 0.0});
    if (plus) out.add_term(k, j, {1.0, 0.0});
  }
  out.add_part(0.0, still.to_expansion(map));
  return out;
}

/// Linear extension of cauchy_basis over every coefficient of every part;
/// outputs are merged by wavenumber (the eta sums all land on wavenumber 0).
inline OscillatoryFunction cauchy_apply(const OscillatoryFunction& g, CauchySide side) {
  const MobiusMap& map = g.map();
  const double beta = map.beta();
  const bool plus = (side == CauchySide::plus);
  OscillatoryFunction out(map);
  for (const auto& part : g.parts()) {
    const double k = part.wavenumber;
    const RationalExpansion& e = part.expansion;
    detail::CoefficientTable osc;    // terms that keep the part's wavenumber
    detail::CoefficientTable still;  // terms on wavenumber 0
    for (int j = e.j_min(); j <= e.j_max(); ++j) {
      if (j == 0) continue;
      const complex_t a = e.stored(j);
      if (a == complex_t{0.0, 0.0}) continue;
      if (k == 0.0) {
        if (plus && j > 0) still.add(j, a);
        if (!plus && j < 0) still.add(j, -a);
        continue;
      }
      if (k * j < 0.0) {
        if (plus && j > 0) osc.add(j, a);
        if (!plus && j < 0) osc.add(j, -a);
        continue;
      }
      const int aj = std::abs(j);
      const auto eta = detail::eta_row(aj, std::abs(k), beta);
      if (j > 0) {
        for (int n = 1; n <= aj; ++n) still.add(n, -a * eta[static_cast<std::size_t>(n)]);
        if (!plus) osc.add(j, -a);
      } else {
        for (int n = 1; n <= aj; ++n) still.add(-n, a * eta[static_cast<std::size_t>(n)]);
        if (plus) osc.add(j, a);
      }
    }
    if (!osc.empty()) out.add_part(k, osc.to_expansion(map));
    if (!still.empty()) out.add_part(0.0, still.to_expansion(map));
  }
  return out;
}

struct OffAxisValue {
  complex_t value;
  /// Raised when the input carries indices beyond |j| = 30: the closed form
  /// then relies on delicate cancellation between terms that individually
  /// blow up at the hidden pole, and accuracy degrades.
  bool stability_warning = false;
};

/// The Cauchy transform evaluated off the real axis: the plus-side closed
/// form continues analytically into the upper half plane, the minus-side
/// form into the lower half plane.
inline OffAxisValue cauchy_offaxis(const OscillatoryFunction& g, complex_t z) {
  if (z.imag() == 0.0) {
    throw std::invalid_argument("cauchy_offaxis: z must lie off the real axis");
  }
  const CauchySide side = (z.imag() > 0.0) ? CauchySide::plus : CauchySide::minus;
  const OscillatoryFunction h = cauchy_apply(g, side);
  return {h(z), g.max_abs_index() > 30};
}

}  // namespace oscrat
