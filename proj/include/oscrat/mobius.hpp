#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oscrat/common.hpp"

namespace oscrat {

/// A point of the extended complex plane: either a finite value or the
/// point at infinity.  The change of variables T sends theta = 0 to
/// infinity, so the infinite point is a legitimate, frequently produced
/// value and gets an explicit variant rather than a NaN/Inf encoding.
class ExtendedPoint {
 public:
  ExtendedPoint() = default;
  ExtendedPoint(complex_t z) : value_(z) {}
  ExtendedPoint(double x) : value_(x) {}

  static ExtendedPoint infinity() {
    ExtendedPoint p;
    p.infinite_ = true;
    return p;
  }

  bool is_infinity() const { return infinite_; }

  /// The finite value; throws std::logic_error for the point at infinity.
  complex_t value() const {
    if (infinite_) {
      throw std::logic_error("ExtendedPoint: value() called on the point at infinity");
    }
    return value_;
  }

  friend bool operator==(const ExtendedPoint& a, const ExtendedPoint& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
    return a.value_ == b.value_;
  }

 private:
  complex_t value_{0.0};
  bool infinite_ = false;
};

/// The one-parameter Moebius family
///
///   M(z) = (z - i beta) / (z + i beta),     beta > 0,
///
/// which maps the real axis onto the unit circle, together with the
/// circle <-> line change of variables
///
///   x = T(theta) = M^{-1}(e^{i theta}) = -beta cot(theta / 2),  T(0) = infinity.
///
/// On the real axis M is unimodular, M(x) = e^{i phi(x)} with
/// phi(x) = -2 atan2(beta, x); integer powers are taken in this angle form
/// so that |M(x)^j| stays exactly 1.
class MobiusMap {
 public:
  explicit MobiusMap(double beta) : beta_(beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("MobiusMap: beta must be positive");
  }

  double beta() const { return beta_; }

  /// Pole of M^j for j > 0 (and zero of M).
  complex_t pole_lower() const { return {0.0, -beta_}; }
  /// Pole of M^j for j < 0.
  complex_t pole_upper() const { return {0.0, beta_}; }

  /// phi(x) with M(x) = e^{i phi(x)} for real x; lies in (-2 pi, 0).
  double angle(double x) const { return -2.0 * std::atan2(beta_, x); }

  /// M itself.  -i beta maps to infinity, infinity maps to 1.
  ExtendedPoint forward(const ExtendedPoint& z) const {
    if (z.is_infinity()) return ExtendedPoint(complex_t{1.0, 0.0});
    const complex_t v = z.value();
    if (v == pole_lower()) return ExtendedPoint::infinity();
    return ExtendedPoint((v - im * beta_) / (v + im * beta_));
  }

  /// M^{-1}.  1 maps to infinity, infinity maps to -i beta.
  ExtendedPoint inverse(const ExtendedPoint& w) const {
    if (w.is_infinity()) return ExtendedPoint(pole_lower());
    const complex_t v = w.value();
    if (v == complex_t{1.0, 0.0}) return ExtendedPoint::infinity();
    return ExtendedPoint(-im * beta_ * (v + 1.0) / (v - 1.0));
  }

  /// T(theta) = M^{-1}(e^{i theta}); real for theta != 0 (mod 2 pi).
  ExtendedPoint circle_to_line(double theta) const {
    double t = std::fmod(theta, 2.0 * pi);
    if (t < 0.0) t += 2.0 * pi;
    if (t == 0.0) return ExtendedPoint::infinity();
    const double half = 0.5 * t;
    return ExtendedPoint(-beta_ * std::cos(half) / std::sin(half));
  }

  /// T^{-1}(x) in (0, 2 pi).
  double line_to_circle(double x) const { return angle(x) + 2.0 * pi; }

 private:
  double beta_;
};

namespace detail {

/// base^e by binary exponentiation, e >= 0.
inline complex_t pow_int(complex_t base, unsigned e) {
  complex_t acc{1.0, 0.0};
  while (e != 0) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace detail

/// Basis element R_j(x) = M(x)^j - 1 on the real axis.  R_0 is identically
/// zero and |R_j(x)| <= 2; conjugation flips the index: conj(R_j) = R_{-j}.
inline complex_t basis_r(const MobiusMap& map, int j, double x) {
  if (j == 0) return {0.0, 0.0};
  const double phi = map.angle(x);
  return std::polar(1.0, j * phi) - 1.0;
}

/// R_j(z) off the real axis.  M^j is accumulated by binary exponentiation of
/// M (j > 0) or 1/M (j < 0); the angle form is only valid on the axis.
/// Throws std::domain_error at the pole (-i beta for j > 0, i beta for j < 0).
inline complex_t basis_r(const MobiusMap& map, int j, complex_t z) {
  if (z.imag() == 0.0) return basis_r(map, j, z.real());
  if (j == 0) return {0.0, 0.0};
  const complex_t num = z - im * map.beta();
  const complex_t den = z + im * map.beta();
  if (j > 0) {
    if (den == 0.0) throw std::domain_error("basis_r: evaluation at the pole -i*beta");
    return detail::pow_int(num / den, static_cast<unsigned>(j)) - 1.0;
  }
  if (num == 0.0) throw std::domain_error("basis_r: evaluation at the pole i*beta");
  return detail::pow_int(den / num, static_cast<unsigned>(-j)) - 1.0;
}

/// Oscillatory basis element R_{j,k}(x) = e^{-i k x} R_j(x), real axis only.
inline complex_t basis_rjk(const MobiusMap& map, int j, double k, double x) {
  if (j == 0) return {0.0, 0.0};
  return std::polar(1.0, -k * x) * basis_r(map, j, x);
}

/// One symbolic term of a basis combination: coefficient * R_{index, wavenumber}.
struct BasisTerm {
  int index;
  double wavenumber;
  int coefficient;

  friend bool operator==(const BasisTerm&, const BasisTerm&) = default;
};

/// Product rule for the oscillatory basis:
///
///   R_{j,k1} R_{l,k2} = R_{l+j,k1+k2} - R_{j,k1+k2} - R_{l,k1+k2}.
///
/// Terms with index 0 are dropped (R_0 = 0) and coincident
/// (index, wavenumber) pairs are merged; a factor of R_0 makes the whole
/// product vanish and yields the empty list.
inline std::vector<BasisTerm> product_reduce(int j, double k1, int l, double k2) {
  if (j == 0 || l == 0) return {};
  const double k = k1 + k2;
  std::vector<BasisTerm> out;
  const auto add = [&](int index, int coefficient) {
    if (index == 0) return;
    for (auto& t : out) {
      if (t.index == index && t.wavenumber == k) {
        t.coefficient += coefficient;
        return;
      }
    }
    out.push_back({index, k, coefficient});
  };
  add(l + j, 1);
  add(j, -1);
  add(l, -1);
  std::erase_if(out, [](const BasisTerm& t) { return t.coefficient == 0; });
  return out;
}

}  // namespace oscrat
