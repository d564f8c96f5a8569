#include <doctest.h>

#include "dunkl/orthopoly.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numbers>

using namespace dunkl;

TEST_CASE("laguerre low degrees") {
  const auto l1 = laguerre(1, 0.37);
  CHECK(l1.degree() == 1);
  CHECK(l1.coeff(0) == doctest::Approx(1.37));
  CHECK(l1.coeff(1) == -1.0);
  const auto l2 = laguerre(2, 0.0);
  CHECK(l2.coeff(0) == 1.0);
  CHECK(l2.coeff(1) == -2.0);
  CHECK(l2.coeff(2) == 0.5);
  CHECK_THROWS_AS(laguerre(-1, 0.0), DomainError);
}

TEST_CASE("laguerre against the explicit series") {
  for (double a : {-2.5, -0.5, 0.0, 1.3, 4.7})
    for (int k = 0; k <= 8; ++k) {
      const auto l = laguerre(k, a);
      CHECK(l.degree() == k);
      for (double z : {0.0, 0.4, 1.7, 5.2}) {
        const double ref = oracle::laguerre_series(k, a, z);
        CHECK(l(z) == doctest::Approx(ref).epsilon(1e-12).scale(1.0));
      }
    }
  // exact coefficients for k = 3, a = -5/2
  const auto q = laguerre<Rational>(3, Rational(-5, 2));
  for (int j = 0; j <= 3; ++j) {
    // C(k+a, k-j) (-1)^j / j!
    Rational c(1);
    for (int i = 0; i < 3 - j; ++i)
      c *= (Rational(1, 2) - i) / (i + 1);
    for (int i = 1; i <= j; ++i)
      c /= i;
    if (j % 2)
      c = -c;
    CHECK(q.coeff(j) == c);
  }
}

TEST_CASE("jacobi") {
  CHECK(jacobi(0, 0.4, 0.9).degree() == 0);
  CHECK(jacobi(0, 0.4, 0.9).coeff(0) == 1.0);
  for (double t : {-0.8, 0.0, 0.3, 1.0}) {
    const double a = 0.4, b = 1.9;
    CHECK(jacobi(1, a, b)(t) == doctest::Approx((a + 1) + (a + b + 2) * (t - 1) / 2));
  }
  const double v = jacobi(4, 0.8, 1.2)(0.3);
  CHECK(v == doctest::Approx(oracle::jacobi_series(4, 0.8, 1.2, 0.3)).epsilon(1e-13));
  for (double a : {-0.5, 0.3, 2.1})
    for (double b : {-0.5, 0.8})
      for (int n = 0; n <= 7; ++n)
        for (double t : {-0.95, -0.2, 0.55})
          CHECK(jacobi(n, a, b)(t) == doctest::Approx(oracle::jacobi_series(n, a, b, t)).epsilon(1e-12).scale(1.0));
  CHECK_THROWS_AS(jacobi(2, -1.0, 0.5), DomainError);
}

TEST_CASE("log gamma") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-15));
  // Gamma(7.3) = 6.3 * 5.3 * ... * 1.3 * Gamma(1.3)
  double g = 0.897470696306277188;
  for (double x = 1.3; x < 7.0; x += 1.0)
    g *= x;
  CHECK(log_gamma(7.3) == doctest::Approx(std::log(g)).epsilon(1e-14));
  CHECK(log_factorial(10) == doctest::Approx(std::log(3628800.0)).epsilon(1e-15));
}
