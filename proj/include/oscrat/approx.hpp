#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oscrat/common.hpp"
#include "oscrat/mobius.hpp"
#include "oscrat/trig.hpp"

namespace oscrat {

/// A finite combination  sum_j alpha_j R_j(x)  of the rational basis, with
/// j = j_min .. j_max and j_min <= 0 <= j_max.  The j = 0 slot is stored
/// (interpolation produces it, and the coefficient-sum identity needs it)
/// but contributes nothing to evaluation since R_0 is identically zero;
/// coefficient(0) reports 0 accordingly.  Evaluation at the point at
/// infinity is 0 because every basis element vanishes there.
class RationalExpansion {
 public:
  RationalExpansion(const MobiusMap& map, int j_min, int j_max, std::vector<complex_t> coeffs)
      : map_(map), j_min_(j_min), j_max_(j_max), coeffs_(std::move(coeffs)) {
    if (j_min_ > 0 || j_max_ < 0) {
      throw std::invalid_argument("RationalExpansion: index range must contain 0");
    }
    if (coeffs_.size() != static_cast<std::size_t>(j_max_ - j_min_ + 1)) {
      throw std::invalid_argument("RationalExpansion: coefficient count mismatch");
    }
  }

  const MobiusMap& map() const { return map_; }
  int j_min() const { return j_min_; }
  int j_max() const { return j_max_; }
  const std::vector<complex_t>& coeffs() const { return coeffs_; }

  /// Raw stored coefficient, 0 outside the index range.
  complex_t stored(int j) const {
    if (j < j_min_ || j > j_max_) return {0.0, 0.0};
    return coeffs_[static_cast<std::size_t>(j - j_min_)];
  }

  /// Basis weight of R_j: 0 for j = 0 (R_0 carries no function content) and
  /// outside the stored range.
  complex_t coefficient(int j) const {
    if (j == 0) return {0.0, 0.0};
    return stored(j);
  }

  /// Sum of all stored coefficients; for an interpolant this equals the
  /// sample used at the infinite node.
  complex_t coefficient_sum() const {
    complex_t s{0.0, 0.0};
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  bool is_zero() const {
    for (int j = j_min_; j <= j_max_; ++j) {
      if (j != 0 && stored(j) != complex_t{0.0, 0.0}) return false;
    }
    return true;
  }

  complex_t operator()(double x) const {
    return eval_powers(std::polar(1.0, map_.angle(x)), std::polar(1.0, -map_.angle(x)));
  }

  complex_t operator()(complex_t z) const {
    if (z.imag() == 0.0) return (*this)(z.real());
    if (z == map_.pole_lower()) {
      require_side_empty(/*positive=*/true, "evaluation at the pole -i*beta");
      return eval_powers({0.0, 0.0}, {0.0, 0.0}, /*skip_positive=*/true);
    }
    if (z == map_.pole_upper()) {
      require_side_empty(/*positive=*/false, "evaluation at the pole i*beta");
      return eval_powers({0.0, 0.0}, {0.0, 0.0}, /*skip_positive=*/false, /*skip_negative=*/true);
    }
    const complex_t num = z - im * map_.beta();
    const complex_t den = z + im * map_.beta();
    return eval_powers(num / den, den / num);
  }

  complex_t operator()(const ExtendedPoint& p) const {
    if (p.is_infinity()) return {0.0, 0.0};
    return (*this)(p.value());
  }

 private:
  void require_side_empty(bool positive, const char* what) const {
    if (positive) {
      for (int j = 1; j <= j_max_; ++j) {
        if (stored(j) != complex_t{0.0, 0.0}) throw std::domain_error(std::string("RationalExpansion: ") + what);
      }
    } else {
      for (int j = j_min_; j < 0; ++j) {
        if (stored(j) != complex_t{0.0, 0.0}) throw std::domain_error(std::string("RationalExpansion: ") + what);
      }
    }
  }

  /// Horner evaluation of sum_{j>0} a_j u^j + sum_{j<0} a_j w^{|j|} - sum_{j!=0} a_j.
  complex_t eval_powers(complex_t u, complex_t w, bool skip_positive = false,
                        bool skip_negative = false) const {
    complex_t tail{0.0, 0.0};
    for (int j = j_min_; j <= j_max_; ++j) {
      if (j != 0) tail += stored(j);
    }
    complex_t pos{0.0, 0.0};
    if (!skip_positive && j_max_ >= 1) {
      pos = stored(j_max_);
      for (int j = j_max_ - 1; j >= 1; --j) pos = pos * u + stored(j);
      pos *= u;
    }
    complex_t neg{0.0, 0.0};
    if (!skip_negative && j_min_ <= -1) {
      neg = stored(j_min_);
      for (int j = j_min_ + 1; j <= -1; ++j) neg = neg * w + stored(j);
      neg *= w;
    }
    return pos + neg - tail;
  }

  MobiusMap map_;
  int j_min_;
  int j_max_;
  std::vector<complex_t> coeffs_;
};

/// Rational interpolation of f on the mapped grid x_l = T(theta_l):
/// the theta_0 = 0 node sits at infinity, so the caller supplies the limit
/// there (0 for decaying functions), and the coefficients are the discrete
/// Fourier transform of the samples.  The resulting combination
/// sum alpha_j R_j reproduces f(x_l) - limit at every finite node; its
/// coefficient sum equals the limit to roundoff.
inline RationalExpansion interpolate(const std::function<complex_t(double)>& f,
                                     complex_t limit_at_infinity, int n, const MobiusMap& map) {
  if (n < 2) throw std::invalid_argument("interpolate: n must be >= 2");
  TrigGrid grid(n);
  std::vector<complex_t> samples(static_cast<std::size_t>(n));
  samples[0] = limit_at_infinity;
  for (int l = 1; l < n; ++l) {
    const double x = map.circle_to_line(grid.nodes[static_cast<std::size_t>(l)]).value().real();
    samples[static_cast<std::size_t>(l)] = f(x);
  }
  auto c = dft(grid, samples);
  return RationalExpansion(map, -grid.n_minus, grid.n_plus, std::move(c.coeffs));
}

}  // namespace oscrat
