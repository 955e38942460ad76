#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "oscrat/common.hpp"

namespace oscrat {

/// Binomial coefficient with the standard convention: 0 for r < 0 or r > m.
/// Exact integer arithmetic; intermediate products are carried in 128 bits,
/// so every representable result up to m = 62 (and many beyond) is exact.
/// Throws std::overflow_error once the value leaves the 64-bit range.
inline std::int64_t binomial(int m, int r) {
  if (m < 0) throw std::invalid_argument("binomial: m must be >= 0");
  if (r < 0 || r > m) return 0;
  r = std::min(r, m - r);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned __int128>(m - r + i) / static_cast<unsigned>(i);
    if (acc > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max())) {
      throw std::overflow_error("binomial: result exceeds 64-bit range");
    }
  }
  return static_cast<std::int64_t>(acc);
}

/// Floating-point binomial for index ranges where the exact value no longer
/// fits in 64 bits (large expansion orders).  Accuracy degrades gracefully
/// with m, matching the documented instability of the closed forms that
/// consume it.
inline double binomial_real(int m, int r) {
  if (m < 0) throw std::invalid_argument("binomial_real: m must be >= 0");
  if (r < 0 || r > m) return 0.0;
  r = std::min(r, m - r);
  double acc = 1.0;
  for (int i = 1; i <= r; ++i) acc *= static_cast<double>(m - r + i) / i;
  return acc;
}

/// Terminating Kummer function
///   1F1(a, b, z) = sum_{l=0}^{|a|} (a)_l / (b)_l * z^l / l!
/// for a a non-positive integer (the series is a polynomial of degree |a|);
/// positive a is rejected.  Summed with compensated addition; accuracy of
/// the alternating sum degrades for |a| beyond roughly 30 with large |z|.
inline double kummer_terminating(int a, int b, double z) {
  if (a > 0) {
    throw std::invalid_argument("kummer_terminating: a must be a non-positive integer");
  }
  if (b < 1) throw std::invalid_argument("kummer_terminating: b must be >= 1");
  double sum = 1.0;
  double comp = 0.0;
  double term = 1.0;
  const int degree = -a;
  for (int l = 0; l < degree; ++l) {
    term *= static_cast<double>(a + l) / (b + l) * z / (l + 1);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

/// Generalized Laguerre polynomial L_nn^{(alpha)}(x) by the forward
/// three-term recurrence
///   (m+1) L_{m+1} = (2m + 1 + alpha - x) L_m - (m + alpha) L_{m-1},
/// with L_nn^{(alpha)}(0) = binomial(nn + alpha, nn).
inline double laguerre(int nn, int alpha, double x) {
  if (nn < 0) throw std::invalid_argument("laguerre: degree must be >= 0");
  if (alpha < 0) throw std::invalid_argument("laguerre: alpha must be >= 0");
  double prev = 1.0;
  if (nn == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (int m = 1; m < nn; ++m) {
    const double next = ((2.0 * m + 1.0 + alpha - x) * cur - (m + alpha) * prev) / (m + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace oscrat
