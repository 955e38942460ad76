#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oscrat/approx.hpp"
#include "oscrat/common.hpp"
#include "oscrat/mobius.hpp"
#include "oscrat/oscillatory.hpp"

namespace oscrat {

/// One modulated part of a reference function: the smooth envelope f_m, its
/// modulation wavenumber k_m, and optional closed-form transform/derivative
/// handles.  When present, the exact handles are authoritative for oracle
/// comparisons.
struct TestFunction {
  std::string name;
  std::function<complex_t(double)> envelope;
  double wavenumber = 0.0;
  complex_t limit_at_infinity{0.0, 0.0};
  std::function<complex_t(double)> exact_fourier;     // transform of the envelope, or empty
  std::function<complex_t(double)> exact_derivative;  // derivative of the envelope, or empty
};

/// A reference function  f(x) = sum_m e^{-i k_m x} f_m(x)  given as its
/// parts, mirroring the structure of OscillatoryFunction so each part can be
/// interpolated separately.
struct TestCase {
  std::string name;
  std::vector<TestFunction> parts;

  complex_t value(double x) const {
    complex_t acc{0.0, 0.0};
    for (const auto& p : parts) acc += std::polar(1.0, -p.wavenumber * x) * p.envelope(x);
    return acc;
  }

  bool has_exact_derivative() const {
    for (const auto& p : parts) {
      if (!p.exact_derivative) return false;
    }
    return true;
  }

  /// Derivative of the modulated sum; falls back to a five-point stencil on
  /// value() when a part lacks its exact handle.
  complex_t derivative(double x) const {
    if (!has_exact_derivative()) {
      const double h = 1e-4 * std::max(1.0, std::abs(x));
      return (-value(x + 2 * h) + 8.0 * value(x + h) - 8.0 * value(x - h) + value(x - 2 * h)) /
             (12.0 * h);
    }
    complex_t acc{0.0, 0.0};
    for (const auto& p : parts) {
      const complex_t mod = std::polar(1.0, -p.wavenumber * x);
      acc += mod * (p.exact_derivative(x) - im * p.wavenumber * p.envelope(x));
    }
    return acc;
  }

  bool has_exact_fourier() const {
    for (const auto& p : parts) {
      if (!p.exact_fourier) return false;
    }
    return true;
  }

  /// Exact transform, using F[e^{-i k_m x} f_m](k) = F f_m(k + k_m).
  complex_t fourier(double k) const {
    complex_t acc{0.0, 0.0};
    for (const auto& p : parts) {
      if (!p.exact_fourier) throw std::logic_error("TestCase: missing exact transform handle");
      acc += p.exact_fourier(k + p.wavenumber);
    }
    return acc;
  }
};

/// Interpolates every part of a reference at order n and assembles the
/// modulated approximant.
inline OscillatoryFunction approximate(const TestCase& reference, int n, const MobiusMap& map) {
  OscillatoryFunction out(map);
  for (const auto& p : reference.parts) {
    out.add_part(p.wavenumber, interpolate(p.envelope, p.limit_at_infinity, n, map));
  }
  return out;
}

namespace detail {

inline TestFunction gaussian_part(double wavenumber) {
  TestFunction f;
  f.name = "gaussian";
  f.wavenumber = wavenumber;
  f.envelope = [](double x) { return complex_t{std::exp(-x * x), 0.0}; };
  f.exact_fourier = [](double k) {
    return complex_t{std::sqrt(pi) * std::exp(-k * k / 4.0), 0.0};
  };
  f.exact_derivative = [](double x) { return complex_t{-2.0 * x * std::exp(-x * x), 0.0}; };
  return f;
}

inline TestFunction rational_part(double wavenumber) {
  TestFunction f;
  f.name = "rational";
  f.wavenumber = wavenumber;
  const complex_t shift{1.0, 1.0};  // envelope 1 / (x + 1 + i), pole at -1 - i
  f.envelope = [shift](double x) { return 1.0 / (x + shift); };
  f.exact_fourier = [](double k) -> complex_t {
    // residue at x = -1 - i, closing downward for k > 0
    if (k > 0.0) return -2.0 * pi * im * std::exp(im * k) * std::exp(-k);
    if (k == 0.0) return -pi * im;  // principal value: midpoint of the jump
    return {0.0, 0.0};
  };
  f.exact_derivative = [shift](double x) { return -1.0 / ((x + shift) * (x + shift)); };
  return f;
}

inline TestFunction basis_r1_part(const MobiusMap& map) {
  TestFunction f;
  f.name = "basis-r1";
  const double beta = map.beta();
  f.envelope = [map](double x) { return basis_r(map, 1, x); };
  f.exact_fourier = [beta](double k) -> complex_t {
    if (k > 0.0) return {-4.0 * pi * beta * std::exp(-k * beta), 0.0};
    if (k == 0.0) return {-2.0 * pi * beta, 0.0};
    return {0.0, 0.0};
  };
  f.exact_derivative = [beta](double x) {
    const complex_t d = x + im * beta;
    return 2.0 * im * beta / (d * d);
  };
  return f;
}

}  // namespace detail

/// Built-in reference catalog:
///   gaussian  — e^{-x^2}, unmodulated
///   rational  — 1 / (x + 1 + i), unmodulated
///   twopart   — e^{-2ix} gaussian + e^{3ix} rational (wavenumbers 2 and -3)
///   basis-r1  — the basis element R_1 for the given map (exactly
///               representable at any order)
inline TestCase make_test_case(const std::string& name, const MobiusMap& map) {
  TestCase tc;
  tc.name = name;
  if (name == "gaussian") {
    tc.parts.push_back(detail::gaussian_part(0.0));
  } else if (name == "rational") {
    tc.parts.push_back(detail::rational_part(0.0));
  } else if (name == "twopart") {
    tc.parts.push_back(detail::gaussian_part(2.0));
    tc.parts.push_back(detail::rational_part(-3.0));
  } else if (name == "basis-r1") {
    tc.parts.push_back(detail::basis_r1_part(map));
  } else {
    throw std::invalid_argument("make_test_case: unknown reference '" + name + "'");
  }
  return tc;
}

}  // namespace oscrat
