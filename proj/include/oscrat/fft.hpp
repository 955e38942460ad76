#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "oscrat/common.hpp"

namespace oscrat::detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

/// In-place iterative radix-2 transform, unnormalized:
///   X_k = sum_j a_j exp(sign * 2 pi i j k / n),  n a power of two.
inline void fft_radix2(std::vector<complex_t>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * pi / static_cast<double>(len);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t q = 0; q < len / 2; ++q) {
        const complex_t w = std::polar(1.0, ang * static_cast<double>(q));
        const complex_t u = a[i + q];
        const complex_t v = a[i + q + len / 2] * w;
        a[i + q] = u + v;
        a[i + q + len / 2] = u - v;
      }
    }
  }
}

/// Arbitrary-length transform via the chirp-z (Bluestein) reduction to a
/// power-of-two convolution; same normalization as fft_radix2.
inline void fft_bluestein(std::vector<complex_t>& a, int sign) {
  const std::size_t n = a.size();
  const std::size_t m = next_pow2(2 * n - 1);
  // chirp_j = exp(sign * i pi j^2 / n); j^2 is reduced mod 2n exactly.
  std::vector<complex_t> chirp(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t t = (j * j) % (2 * n);
    chirp[j] = std::polar(1.0, sign * pi * static_cast<double>(t) / static_cast<double>(n));
  }
  std::vector<complex_t> b(m, complex_t{0.0, 0.0});
  std::vector<complex_t> c(m, complex_t{0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) b[j] = a[j] * chirp[j];
  c[0] = std::conj(chirp[0]);
  for (std::size_t j = 1; j < n; ++j) c[j] = c[m - j] = std::conj(chirp[j]);
  fft_radix2(b, -1);
  fft_radix2(c, -1);
  for (std::size_t j = 0; j < m; ++j) b[j] *= c[j];
  fft_radix2(b, +1);
  for (std::size_t k = 0; k < n; ++k) a[k] = chirp[k] * b[k] / static_cast<double>(m);
}

/// X_k = sum_j a_j exp(-2 pi i j k / n) when forward, conjugate kernel
/// otherwise.  Unnormalized.
inline void fft(std::vector<complex_t>& a, bool forward) {
  if (a.size() <= 1) return;
  const int sign = forward ? -1 : +1;
  if (is_pow2(a.size())) {
    fft_radix2(a, sign);
  } else {
    fft_bluestein(a, sign);
  }
}

}  // namespace oscrat::detail
