#include <doctest.h>

#include <random>

#include "doublet/poly.hpp"

using namespace doublet;

TEST_CASE("polynomial arithmetic agrees with pointwise evaluation") {
  std::mt19937_64 g(21);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 40; ++i) {
    Poly a(4), b(3);
    for (auto& c : a) c = u(g);
    for (auto& c : b) c = u(g);
    Poly prod = poly_mul(a, b);
    Poly sum = poly_add(a, b);
    Poly da = poly_derivative(a);
    for (double x = -2.0; x <= 2.0; x += 0.37) {
      CHECK(poly_eval(prod, x) ==
            doctest::Approx(poly_eval(a, x) * poly_eval(b, x)).epsilon(1e-12));
      CHECK(poly_eval(sum, x) ==
            doctest::Approx(poly_eval(a, x) + poly_eval(b, x)).epsilon(1e-12));
      double fd = (poly_eval(a, x + 1e-6) - poly_eval(a, x - 1e-6)) / 2e-6;
      CHECK(poly_eval(da, x) == doctest::Approx(fd).epsilon(1e-6));
      CHECK(poly_eval(poly_scale(a, 2.5), x) ==
            doctest::Approx(2.5 * poly_eval(a, x)).epsilon(1e-13));
    }
  }
}

TEST_CASE("Sturm real-root counts on crafted cases") {
  CHECK(sturm_real_root_count({1.0, 0.0, 1.0}) == 0);     // X^2 + 1
  CHECK(sturm_real_root_count({-1.0, 0.0, 1.0}) == 2);    // X^2 - 1
  CHECK(sturm_real_root_count({0.0, -1.0, 0.0, 1.0}) == 3);  // X^3 - X
  CHECK(sturm_real_root_count({-6.0, 11.0, -6.0, 1.0}) == 3);  // (X-1)(X-2)(X-3)
  // (X - 1)^3 (X^2 + 4): one distinct real root.
  // (X^3 - 3X^2 + 3X - 1)(X^2 + 4)
  CHECK(sturm_real_root_count({-4.0, 12.0, -13.0, 7.0, -3.0, 1.0}) == 1);
  // X^5 + X + 1: derivative 5X^4 + 1 > 0, exactly one real root.
  CHECK(sturm_real_root_count({1.0, 1.0, 0.0, 0.0, 0.0, 1.0}) == 1);
  // X^4 + 1: no real roots.
  CHECK(sturm_real_root_count({1.0, 0.0, 0.0, 0.0, 1.0}) == 0);
}

TEST_CASE("Sturm count on random quintics matches bisection sampling") {
  std::mt19937_64 g(22);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 60; ++i) {
    Poly p(6);
    for (auto& c : p) c = u(g);
    if (std::abs(p[5]) < 0.1) p[5] = 1.0;
    // Count sign changes on a fine grid over a Cauchy-style bound; with
    // generic random coefficients roots are simple and well separated.
    double bound = 1.0;
    for (int j = 0; j < 5; ++j)
      bound = std::max(bound, 2.0 * std::abs(p[j] / p[5]));
    int changes = 0;
    double prev = poly_eval(p, -bound);
    const int n = 20000;
    for (int j = 1; j <= n; ++j) {
      double x = -bound + 2.0 * bound * j / n;
      double v = poly_eval(p, x);
      if (prev != 0.0 && v != 0.0 && (prev < 0.0) != (v < 0.0)) ++changes;
      if (v != 0.0) prev = v;
    }
    CHECK(sturm_real_root_count(p) == changes);
  }
}
