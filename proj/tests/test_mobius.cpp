#include <doctest.h>

#include <cmath>
#include <random>

#include "oscrat/mobius.hpp"

using namespace oscrat;

TEST_SUITE_BEGIN("mobius");

TEST_CASE("construction rejects non-positive beta") {
  CHECK_THROWS_AS(MobiusMap(0.0), std::invalid_argument);
  CHECK_THROWS_AS(MobiusMap(-1.5), std::invalid_argument);
  CHECK_NOTHROW(MobiusMap(0.25));
}

TEST_CASE("forward map special points") {
  MobiusMap map(1.0);
  // numerator vanishes at z = i*beta
  CHECK(std::abs(map.forward(complex_t{0.0, 1.0}).value()) == doctest::Approx(0.0));
  CHECK(map.forward(map.pole_lower()).is_infinity());
  CHECK(map.forward(ExtendedPoint::infinity()).value() == complex_t{1.0, 0.0});
  CHECK(map.forward(complex_t{0.0, 0.0}).value() == complex_t{-1.0, 0.0});
}

TEST_CASE("inverse map special points") {
  MobiusMap map(2.0);
  CHECK(map.inverse(complex_t{1.0, 0.0}).is_infinity());
  CHECK(map.inverse(ExtendedPoint::infinity()).value() == complex_t{0.0, -2.0});
}

TEST_CASE("forward and inverse compose to the identity") {
  MobiusMap map(0.7);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    const complex_t z{coord(rng), coord(rng)};
    const ExtendedPoint back = map.inverse(map.forward(z));
    if (back.is_infinity()) continue;  // z happened to hit the pole image
    CHECK(std::abs(back.value() - z) < 1e-12 * (1.0 + std::abs(z)));
  }
  CHECK(map.inverse(map.forward(map.pole_lower())) == ExtendedPoint(map.pole_lower()));
  CHECK(map.forward(map.inverse(ExtendedPoint::infinity())).is_infinity());
}

TEST_CASE("circle_to_line special values") {
  CHECK(std::abs(MobiusMap(1.0).circle_to_line(pi).value()) < 1e-15);
  CHECK(MobiusMap(3.0).circle_to_line(0.0).is_infinity());
  CHECK(MobiusMap(1.0).line_to_circle(0.0) == doctest::Approx(pi));
}

TEST_CASE("circle/line round trip over the whole period") {
  for (double beta : {0.5, 1.0, 2.0}) {
    MobiusMap map(beta);
    for (int i = 1; i < 400; ++i) {
      const double theta = 2.0 * pi * i / 400.0;
      const double x = map.circle_to_line(theta).value().real();
      CHECK(map.line_to_circle(x) == doctest::Approx(theta).epsilon(1e-12));
    }
  }
}

TEST_CASE("basis examples") {
  MobiusMap map(1.0);
  CHECK(basis_r(map, 0, 5.3) == complex_t{0.0, 0.0});
  CHECK(std::abs(basis_r(map, 1, 0.0) - complex_t{-2.0, 0.0}) < 1e-15);
  CHECK(std::abs(basis_r(map, -4, 1.7) - std::conj(basis_r(map, 4, 1.7))) < 1e-15);
}

TEST_CASE("basis is bounded by 2 and conjugate-symmetric on the axis") {
  std::mt19937 rng(22);
  std::uniform_real_distribution<double> coord(-100.0, 100.0);
  for (double beta : {0.5, 1.0, 2.0}) {
    MobiusMap map(beta);
    for (int trial = 0; trial < 100; ++trial) {
      const double x = coord(rng);
      for (int j = -64; j <= 64; ++j) {
        const complex_t v = basis_r(map, j, x);
        CHECK(std::abs(v) <= 2.0 + 1e-14);
        CHECK(std::abs(std::conj(v) - basis_r(map, -j, x)) < 1e-15);
      }
    }
  }
}

TEST_CASE("off-axis powers agree with direct computation and flag poles") {
  MobiusMap map(1.0);
  const complex_t z{0.3, 0.8};
  const complex_t m = (z - im) / (z + im);
  CHECK(std::abs(basis_r(map, 3, z) - (m * m * m - 1.0)) < 1e-14);
  CHECK(std::abs(basis_r(map, -2, z) - (1.0 / (m * m) - 1.0)) < 1e-13);
  CHECK_THROWS_AS(basis_r(map, 2, complex_t{0.0, -1.0}), std::domain_error);
  CHECK_THROWS_AS(basis_r(map, -2, complex_t{0.0, 1.0}), std::domain_error);
  CHECK_NOTHROW(basis_r(map, 2, complex_t{0.0, 1.0}));  // pole only on the other side
}

TEST_CASE("oscillatory basis element") {
  MobiusMap map(1.0);
  CHECK(std::abs(basis_rjk(map, 1, 0.0, 0.0) - complex_t{-2.0, 0.0}) < 1e-15);
  CHECK(basis_rjk(map, 0, 7.0, 2.0) == complex_t{0.0, 0.0});
  CHECK(std::abs(basis_rjk(map, 1, 3.7, 1e9)) < 1e-8);  // vanishes toward infinity
  const double x = 0.37;
  CHECK(std::abs(basis_rjk(map, 5, 2.5, x) - std::polar(1.0, -2.5 * x) * basis_r(map, 5, x)) <
        1e-15);
}

TEST_CASE("product_reduce instantiations") {
  const std::vector<BasisTerm> square = product_reduce(1, 0.0, 1, 0.0);
  REQUIRE(square.size() == 2);
  CHECK(square[0] == BasisTerm{2, 0.0, 1});
  CHECK(square[1] == BasisTerm{1, 0.0, -2});

  CHECK(product_reduce(0, 1.0, 5, 2.0).empty());

  const std::vector<BasisTerm> cancel = product_reduce(2, 1.0, -2, -1.0);
  REQUIRE(cancel.size() == 2);
  CHECK(cancel[0] == BasisTerm{2, 0.0, -1});
  CHECK(cancel[1] == BasisTerm{-2, 0.0, -1});
}

TEST_CASE("product_reduce matches pointwise multiplication") {
  MobiusMap map(1.0);
  std::mt19937 rng(33);
  std::uniform_int_distribution<int> idx(-20, 20);
  std::uniform_real_distribution<double> wave(-5.0, 5.0);
  std::uniform_real_distribution<double> coord(-30.0, 30.0);
  for (int trial = 0; trial < 300; ++trial) {
    const int j = idx(rng);
    const int l = idx(rng);
    const double k1 = wave(rng);
    const double k2 = wave(rng);
    const double x = coord(rng);
    const complex_t direct = basis_rjk(map, j, k1, x) * basis_rjk(map, l, k2, x);
    complex_t reduced{0.0, 0.0};
    for (const auto& term : product_reduce(j, k1, l, k2)) {
      reduced += static_cast<double>(term.coefficient) *
                 basis_rjk(map, term.index, term.wavenumber, x);
    }
    CHECK(std::abs(direct - reduced) < 1e-13);
  }
}

TEST_SUITE_END();
