#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oscrat/trig.hpp"

using namespace oscrat;

namespace {

// Literal O(n^2) transform, the oracle for the fast path.
std::vector<complex_t> literal_dft(const std::vector<complex_t>& samples) {
  const int n = static_cast<int>(samples.size());
  const int n_plus = n / 2;
  const int n_minus = (n - 1) / 2;
  std::vector<complex_t> out(samples.size());
  for (int k = -n_minus; k <= n_plus; ++k) {
    complex_t acc{0.0, 0.0};
    for (int j = 0; j < n; ++j) {
      acc += std::polar(1.0, -k * 2.0 * pi * j / n) * samples[static_cast<std::size_t>(j)];
    }
    out[static_cast<std::size_t>(k + n_minus)] = acc / static_cast<double>(n);
  }
  return out;
}

// Literal exponential sum for the Dirichlet kernel and its derivative.
complex_t literal_dirichlet(int n, double theta, int order) {
  const int n_plus = n / 2;
  const int n_minus = (n - 1) / 2;
  complex_t acc{0.0, 0.0};
  for (int k = -n_minus; k <= n_plus; ++k) {
    const complex_t e = std::polar(1.0, k * theta);
    acc += (order == 0) ? e : im * static_cast<double>(k) * e;
  }
  return acc;
}

}  // namespace

TEST_SUITE_BEGIN("trig");

TEST_CASE("grid splits the mode range for even and odd orders") {
  for (int n = 1; n <= 9; ++n) {
    TrigGrid grid(n);
    CHECK(grid.n_plus + grid.n_minus + 1 == n);
    for (int l = 0; l + 1 < n; ++l) CHECK(grid.nodes[l] < grid.nodes[l + 1]);
    CHECK(grid.nodes[0] == 0.0);
    CHECK(grid.nodes[n - 1] < 2.0 * pi);
  }
  CHECK_THROWS_AS(TrigGrid(0), std::invalid_argument);
}

TEST_CASE("dft of elementary samples") {
  TrigGrid grid(8);
  std::vector<complex_t> ones(8, complex_t{1.0, 0.0});
  auto c = dft(grid, ones);
  CHECK(std::abs(c.at(0) - complex_t{1.0, 0.0}) < 1e-15);
  for (int k = -grid.n_minus; k <= grid.n_plus; ++k) {
    if (k != 0) CHECK(std::abs(c.at(k)) < 1e-15);
  }

  std::vector<complex_t> mode(8);
  for (int l = 0; l < 8; ++l) mode[l] = std::polar(1.0, grid.nodes[l]);
  auto c1 = dft(grid, mode);
  CHECK(std::abs(c1.at(1) - complex_t{1.0, 0.0}) < 1e-15);
  for (int k = -grid.n_minus; k <= grid.n_plus; ++k) {
    if (k != 1) CHECK(std::abs(c1.at(k)) < 1e-14);
  }

  CHECK_THROWS_AS(dft(grid, std::vector<complex_t>(5)), std::invalid_argument);
}

TEST_CASE("fast transform matches the literal sum across orders") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  for (int n : {2, 3, 5, 8, 12, 16, 27, 64, 100}) {
    TrigGrid grid(n);
    std::vector<complex_t> samples(static_cast<std::size_t>(n));
    for (auto& s : samples) s = complex_t{value(rng), value(rng)};
    const auto fast = dft(grid, samples);
    const auto slow = literal_dft(samples);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      CHECK(std::abs(fast.coeffs[i] - slow[i]) < 1e-12);
    }
  }
}

TEST_CASE("aliasing: mode j + m n is indistinguishable from mode j") {
  for (int n : {7, 8}) {
    TrigGrid grid(n);
    const int n_plus = grid.n_plus;
    for (int j = -grid.n_minus; j <= n_plus; ++j) {
      for (int m : {1, 2, 3}) {
        // Integer reduction of (j + m n) l mod n makes the sample vectors
        // bitwise identical, so the transforms agree exactly.
        std::vector<complex_t> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
        for (int l = 0; l < n; ++l) {
          const int r = ((j % n + n) % n * l) % n;
          const int r_alias = (((j + m * n) % n + n) % n * l) % n;
          lo[static_cast<std::size_t>(l)] = std::polar(1.0, 2.0 * pi * r / n);
          hi[static_cast<std::size_t>(l)] = std::polar(1.0, 2.0 * pi * r_alias / n);
        }
        const auto clo = dft(grid, lo);
        const auto chi = dft(grid, hi);
        for (std::size_t i = 0; i < clo.coeffs.size(); ++i) {
          CHECK(clo.coeffs[i] == chi.coeffs[i]);
        }
      }
    }
  }
}

TEST_CASE("aliasing against the continuous coefficient oracle") {
  // F(theta) = e^{i theta} + e^{i (1 + n) theta} has true coefficients 1 at
  // modes 1 and 1 + n; the discrete transform piles both onto mode 1.
  const int n = 8;
  TrigGrid grid(n);
  const auto F = [n](double theta) {
    return std::polar(1.0, theta) + std::polar(1.0, (1.0 + n) * theta);
  };
  std::vector<complex_t> samples(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) samples[static_cast<std::size_t>(l)] = F(grid.nodes[l]);
  const auto c = dft(grid, samples);
  CHECK(std::abs(c.at(1) - complex_t{2.0, 0.0}) < 1e-12);
  CHECK(std::abs(fourier_coefficient_oracle(F, 1, 1e-10) - complex_t{1.0, 0.0}) < 1e-9);
  CHECK(std::abs(fourier_coefficient_oracle(F, 1 + n, 1e-10) - complex_t{1.0, 0.0}) < 1e-9);
}

TEST_CASE("interpolant reproduces samples at the nodes") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  for (int n : {2, 5, 16, 129, 256, 1024}) {
    TrigGrid grid(n);
    std::vector<complex_t> samples(static_cast<std::size_t>(n));
    for (auto& s : samples) s = complex_t{value(rng), value(rng)};
    const auto c = dft(grid, samples);
    double worst = 0.0;
    for (int l = 0; l < n; ++l) {
      worst = std::max(worst,
                       std::abs(trig_eval(c, grid.nodes[l]) - samples[static_cast<std::size_t>(l)]));
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("trig_eval pointwise examples") {
  TrigGrid grid(8);
  std::vector<complex_t> ones(8, complex_t{1.0, 0.0});
  const auto c = dft(grid, ones);
  CHECK(std::abs(trig_eval(c, 0.123) - complex_t{1.0, 0.0}) < 1e-14);

  // single coefficient at k = 1
  TrigCoefficients single{TrigGrid(3), {complex_t{0, 0}, complex_t{0, 0}, complex_t{0, 0}}};
  single.coeffs[static_cast<std::size_t>(1 + single.grid.n_minus)] = complex_t{1.0, 0.0};
  CHECK(std::abs(trig_eval(single, pi / 2.0) - im) < 1e-15);

  // smooth periodic sample reproduction
  const int n = 64;
  TrigGrid fine(n);
  const auto F = [](double theta) {
    const double s = std::sin(0.5 * theta);
    return complex_t{theta == 0.0 ? 0.0 : std::exp(-1.0 / (s * s)), 0.0};
  };
  std::vector<complex_t> samples(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) samples[static_cast<std::size_t>(l)] = F(fine.nodes[l]);
  const auto cf = dft(fine, samples);
  for (int l = 1; l < n; ++l) {
    CHECK(std::abs(trig_eval(cf, fine.nodes[l]) - samples[static_cast<std::size_t>(l)]) <
          1e-13 * (1.0 + std::abs(samples[static_cast<std::size_t>(l)])));
  }
}

TEST_CASE("dirichlet kernel values") {
  CHECK(std::abs(dirichlet_kernel(5, 0.0) - complex_t{5.0, 0.0}) < 1e-12);
  CHECK(std::abs(dirichlet_kernel(5, 2.0 * pi * 2.0 / 5.0)) < 1e-12);
  CHECK(std::abs(dirichlet_kernel(4, pi)) < 1e-12);
  CHECK_THROWS_AS(dirichlet_kernel(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(dirichlet_kernel(4, 1.0, 2), std::invalid_argument);
}

TEST_CASE("dirichlet closed form equals the literal sum") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
  for (int trial = 0; trial < 1000; ++trial) {
    const double theta = angle(rng);
    for (int n : {2, 3, 16, 17, 128, 256}) {
      for (int order : {0, 1}) {
        const complex_t closed = dirichlet_kernel(n, theta, order);
        const complex_t literal = literal_dirichlet(n, theta, order);
        const double scale = (order == 0) ? n : double(n) * n;
        CHECK(std::abs(closed - literal) < 1e-12 * scale);
      }
    }
  }
}

TEST_CASE("kernel norms: exact L2 values and growth exponents") {
  // ||D_n||_2 = sqrt(2 pi n) by orthogonality.
  for (int n : {4, 9, 32}) {
    CHECK(kernel_norm(n, 2.0) == doctest::Approx(std::sqrt(2.0 * pi * n)).epsilon(1e-5));
  }
  CHECK(kernel_norm(1, 1.0) == doctest::Approx(2.0 * pi).epsilon(1e-8));

  std::vector<double> logn, l1, log2d;
  for (int n = 64; n <= 1024; n *= 2) {
    logn.push_back(std::log(double(n)));
    l1.push_back(kernel_norm(n, 1.0, 0));
    log2d.push_back(std::log(kernel_norm(n, 2.0, 1)));
  }
  // The L1 norm grows like log n: increments per doubling are positive and
  // nearly constant.
  std::vector<double> inc;
  for (std::size_t i = 0; i + 1 < l1.size(); ++i) inc.push_back(l1[i + 1] - l1[i]);
  for (double d : inc) CHECK(d > 0.0);
  for (std::size_t i = 0; i + 1 < inc.size(); ++i) {
    CHECK(std::abs(inc[i + 1] - inc[i]) < 0.2 * inc[i]);
  }
  // ||D_n'||_2 ~ n^{3/2}
  double slope_sum = 0.0;
  for (std::size_t i = 0; i + 1 < log2d.size(); ++i) {
    slope_sum += (log2d[i + 1] - log2d[i]) / (logn[i + 1] - logn[i]);
  }
  const double slope = slope_sum / double(log2d.size() - 1);
  CHECK(slope == doctest::Approx(1.5).epsilon(0.05));
}

TEST_CASE("lebesgue constant: base cases and logarithmic growth") {
  CHECK(lebesgue_constant(1) == doctest::Approx(1.0));
  CHECK(lebesgue_constant(2) >= 1.0);

  std::vector<double> logn, lam;
  for (int n = 8; n <= 1024; n *= 2) {
    logn.push_back(std::log(double(n)));
    lam.push_back(lebesgue_constant(n));
  }
  for (std::size_t i = 0; i + 1 < lam.size(); ++i) CHECK(lam[i] < lam[i + 1]);
  // a + b log n explains the sweep
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    mx += logn[i];
    my += lam[i];
  }
  mx /= double(lam.size());
  my /= double(lam.size());
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    sxx += (logn[i] - mx) * (logn[i] - mx);
    sxy += (logn[i] - mx) * (lam[i] - my);
    syy += (lam[i] - my) * (lam[i] - my);
  }
  const double slope = sxy / sxx;
  double ss_res = 0;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    const double r = lam[i] - (my + slope * (logn[i] - mx));
    ss_res += r * r;
  }
  CHECK(slope > 0.0);
  CHECK(1.0 - ss_res / syy >= 0.99);
}

TEST_CASE("fourier coefficient oracle basics") {
  const auto one = [](double) { return complex_t{1.0, 0.0}; };
  CHECK(std::abs(fourier_coefficient_oracle(one, 0, 1e-10) - complex_t{1.0, 0.0}) < 1e-9);
  CHECK(std::abs(fourier_coefficient_oracle(one, 3, 1e-10)) < 1e-9);
  const auto mode2 = [](double theta) { return std::polar(1.0, 2.0 * theta); };
  CHECK(std::abs(fourier_coefficient_oracle(mode2, 2, 1e-10) - complex_t{1.0, 0.0}) < 1e-9);
}

TEST_SUITE_END();
