#include <doctest.h>

#include <cmath>

#include "oscrat/oscillatory.hpp"

using namespace oscrat;

TEST_SUITE_BEGIN("oscillatory");

TEST_CASE("parts with one wavenumber merge by coefficient addition") {
  MobiusMap map(1.0);
  OscillatoryFunction g(map);
  g.add_term(2.0, 1, {1.0, 0.0});
  g.add_term(-1.0, 3, {0.5, 0.0});
  g.add_term(2.0, 4, {0.0, 1.0});
  g.add_term(2.0, 1, {1.5, 0.0});
  REQUIRE(g.parts().size() == 2);
  CHECK(g.parts()[0].wavenumber == -1.0);  // kept sorted
  CHECK(g.parts()[1].wavenumber == 2.0);
  CHECK(g.parts()[1].expansion.coefficient(1) == complex_t{2.5, 0.0});
  CHECK(g.parts()[1].expansion.coefficient(4) == complex_t{0.0, 1.0});
  CHECK(g.max_abs_index() == 4);
}

TEST_CASE("maps must agree when merging") {
  MobiusMap a(1.0);
  MobiusMap b(2.0);
  OscillatoryFunction g(a);
  OscillatoryFunction h(b);
  h.add_term(0.0, 1, {1.0, 0.0});
  CHECK_THROWS_AS(g += h, std::invalid_argument);
}

TEST_CASE("evaluation is the modulated sum of the parts") {
  MobiusMap map(0.7);
  OscillatoryFunction g(map);
  g.add_term(2.0, 1, {1.0, -0.5});
  g.add_term(-3.0, -2, {0.25, 0.0});
  for (double x : {-4.2, 0.0, 1.3}) {
    const complex_t expected = std::polar(1.0, -2.0 * x) * complex_t{1.0, -0.5} *
                                   basis_r(map, 1, x) +
                               std::polar(1.0, 3.0 * x) * 0.25 * basis_r(map, -2, x);
    CHECK(std::abs(g(x) - expected) < 1e-14);
  }
}

TEST_CASE("arithmetic: subtraction cancels exactly") {
  MobiusMap map(1.0);
  OscillatoryFunction g(map);
  g.add_term(1.0, 2, {0.3, 0.7});
  g.add_term(0.0, -1, {1.0, 0.0});
  const auto zero = g - g;
  CHECK(zero.is_zero());
  auto scaled = g;
  scaled *= complex_t{2.0, 0.0};
  CHECK(std::abs(scaled(0.9) - 2.0 * g(0.9)) < 1e-15);
}

TEST_SUITE_END();
