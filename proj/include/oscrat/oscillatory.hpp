#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "oscrat/approx.hpp"
#include "oscrat/common.hpp"
#include "oscrat/mobius.hpp"

namespace oscrat {

namespace detail {

/// Growable coefficient table indexed by basis index j, used to assemble
/// expansions term by term.
class CoefficientTable {
 public:
  void add(int j, complex_t value) {
    if (entries_.empty()) {
      lo_ = hi_ = j;
      entries_.push_back(value);
      return;
    }
    if (j < lo_) {
      entries_.insert(entries_.begin(), static_cast<std::size_t>(lo_ - j), complex_t{0.0, 0.0});
      lo_ = j;
    } else if (j > hi_) {
      entries_.insert(entries_.end(), static_cast<std::size_t>(j - hi_), complex_t{0.0, 0.0});
      hi_ = j;
    }
    entries_[static_cast<std::size_t>(j - lo_)] += value;
  }

  void add_expansion(const RationalExpansion& e, complex_t scale = {1.0, 0.0}) {
    for (int j = e.j_min(); j <= e.j_max(); ++j) {
      const complex_t c = e.stored(j);
      if (c != complex_t{0.0, 0.0}) add(j, scale * c);
    }
  }

  bool empty() const { return entries_.empty(); }

  RationalExpansion to_expansion(const MobiusMap& map) const {
    int lo = std::min(lo_, 0);
    int hi = std::max(hi_, 0);
    if (entries_.empty()) lo = hi = 0;
    std::vector<complex_t> coeffs(static_cast<std::size_t>(hi - lo + 1), complex_t{0.0, 0.0});
    for (int j = lo_; j <= hi_ && !entries_.empty(); ++j) {
      coeffs[static_cast<std::size_t>(j - lo)] = entries_[static_cast<std::size_t>(j - lo_)];
    }
    return RationalExpansion(map, lo, hi, std::move(coeffs));
  }

 private:
  int lo_ = 0;
  int hi_ = 0;
  std::vector<complex_t> entries_;
};

}  // namespace detail

/// A finite sum  sum_m e^{-i k_m x} g_m(x)  of modulated rational expansions
/// sharing one map.  Wavenumbers are pairwise distinct; adding a part with
/// an existing wavenumber merges coefficients.  The class is closed under
/// the Cauchy transforms, the Fourier transform and differentiation.
class OscillatoryFunction {
 public:
  struct Part {
    double wavenumber;
    RationalExpansion expansion;
  };

  explicit OscillatoryFunction(const MobiusMap& map) : map_(map) {}

  OscillatoryFunction(double wavenumber, RationalExpansion expansion)
      : map_(expansion.map()) {
    parts_.push_back({wavenumber, std::move(expansion)});
  }

  const MobiusMap& map() const { return map_; }
  const std::vector<Part>& parts() const { return parts_; }

  bool is_zero() const {
    return std::all_of(parts_.begin(), parts_.end(),
                       [](const Part& p) { return p.expansion.is_zero(); });
  }

  /// Largest |j| carried by any part; 0 for the zero function.
  int max_abs_index() const {
    int m = 0;
    for (const auto& p : parts_) {
      m = std::max({m, -p.expansion.j_min(), p.expansion.j_max()});
    }
    return m;
  }

  void add_part(double wavenumber, const RationalExpansion& e) {
    if (e.map().beta() != map_.beta()) {
      throw std::invalid_argument("OscillatoryFunction: parts must share one map");
    }
    for (auto& p : parts_) {
      if (p.wavenumber == wavenumber) {
        detail::CoefficientTable acc;
        acc.add_expansion(p.expansion);
        acc.add_expansion(e);
        p.expansion = acc.to_expansion(map_);
        return;
      }
    }
    parts_.push_back({wavenumber, e});
    std::sort(parts_.begin(), parts_.end(),
              [](const Part& a, const Part& b) { return a.wavenumber < b.wavenumber; });
  }

  /// Adds coeff * R_{j, wavenumber}.
  void add_term(double wavenumber, int j, complex_t coeff) {
    detail::CoefficientTable acc;
    acc.add(j, coeff);
    add_part(wavenumber, acc.to_expansion(map_));
  }

  complex_t operator()(double x) const {
    complex_t acc{0.0, 0.0};
    for (const auto& p : parts_) acc += std::polar(1.0, -p.wavenumber * x) * p.expansion(x);
    return acc;
  }

  complex_t operator()(complex_t z) const {
    complex_t acc{0.0, 0.0};
    for (const auto& p : parts_) acc += std::exp(-im * p.wavenumber * z) * p.expansion(z);
    return acc;
  }

  OscillatoryFunction& operator+=(const OscillatoryFunction& other) {
    for (const auto& p : other.parts_) add_part(p.wavenumber, p.expansion);
    return *this;
  }

  OscillatoryFunction& operator*=(complex_t s) {
    for (auto& p : parts_) {
      detail::CoefficientTable acc;
      acc.add_expansion(p.expansion, s);
      p.expansion = acc.to_expansion(map_);
    }
    return *this;
  }

  friend OscillatoryFunction operator+(OscillatoryFunction a, const OscillatoryFunction& b) {
    a += b;
    return a;
  }

  friend OscillatoryFunction operator-(OscillatoryFunction a, const OscillatoryFunction& b) {
    OscillatoryFunction neg = b;
    neg *= complex_t{-1.0, 0.0};
    a += neg;
    return a;
  }

  friend OscillatoryFunction operator*(complex_t s, OscillatoryFunction g) {
    g *= s;
    return g;
  }

 private:
  MobiusMap map_;
  std::vector<Part> parts_;
};

}  // namespace oscrat
