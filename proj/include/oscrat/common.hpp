#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>

namespace oscrat {

using complex_t = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr complex_t im{0.0, 1.0};

/// Thrown when an adaptive or iterative routine cannot reach the requested
/// tolerance within its resource limits.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void kahan_add(double& sum, double& comp, double term) {
  const double y = term - comp;
  const double t = sum + y;
  comp = (t - sum) - y;
  sum = t;
}

}  // namespace detail

}  // namespace oscrat
