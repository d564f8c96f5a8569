#include <doctest.h>

#include "dunkl/basestates.hpp"
#include "dunkl/error.hpp"
#include "dunkl/radial_ext.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <cmath>

using namespace dunkl;

namespace {

double radial_overlap(const RadialForm& f, const RadialForm& g, const Parameters& p) {
  return oracle::tanh_sinh(
      [&](double r, double, double) { return eval_radial(f, r, 0) * eval_radial(g, r, 0) * std::pow(r, 2 * p.sum() + 1); },
      0.0, 16.0);
}

ExtensionSpec spec(const char* s) { return ExtensionSpec::parse(s); }

}  // namespace

TEST_CASE("seed polynomials") {
  const auto g1 = g_factor(spec("I:1"), 1.7);
  REQUIRE(g1.poly.degree() == 1);
  CHECK(g1.poly.coeff(0) == doctest::Approx(1.7));
  CHECK(g1.poly.coeff(1) == 1.0);
  const auto g2 = g_factor(spec("II:1"), 2.0);
  REQUIRE(g2.poly.degree() == 1);
  CHECK(std::abs(g2.poly.coeff(0)) == 2.0);
  CHECK(g2.poly.coeff(0) == g2.poly.coeff(1) * 2.0);
  CHECK_THROWS_AS(g_factor(ExtensionSpec{ExtensionType::III, 1}, 3.0), AdmissibilityError);
  // II needs m < alpha + 1
  CHECK_THROWS_AS(g_factor(spec("II:3"), 1.5), AdmissibilityError);
  // exact and double coefficients agree
  const auto g3 = g_factor(spec("III:2"), 3.0);
  for (int j = 0; j <= 2; ++j)
    CHECK(g3.poly.coeff(j) == g3.exact.coeff(j).get_d());
}

TEST_CASE("extended potential") {
  for (double a : {1.0, 2.3}) {
    const auto g = g_factor(spec("I:1"), a);
    for (double rho : {0.1, 0.8, 2.5}) {
      const double z = rho * rho;
      CHECK(extended_potential(g, rho) ==
            doctest::Approx(0.5 * z + 2 / (z + a) - 4 * a / ((z + a) * (z + a))).epsilon(1e-13));
    }
  }
  // 1/2 rho^2 - (d/drho)^2 log g(rho^2), by finite differences
  const auto g = g_factor(spec("I:2"), 1.4);
  auto logg = [&](double r) { return std::log(std::abs(g.poly(r * r))); };
  const double rho = 0.9;
  const double ref = 0.5 * rho * rho - oracle::second_derivative(logg, rho, 2e-2);
  CHECK(extended_potential(g, rho) == doctest::Approx(ref).epsilon(1e-9));
  CHECK(extended_potential_shift(g, rho) == doctest::Approx(ref - 0.5 * rho * rho).epsilon(1e-8));
}

TEST_CASE("exceptional polynomials") {
  const auto y = xm_laguerre(spec("I:1"), 1, 1.0);
  CHECK(y.poly.degree() == 1);
  CHECK(y.cert.dimension == 1);
  const auto y0 = xm_laguerre(spec("III:2"), 0, 3.0);
  CHECK(y0.poly.degree() == 0);
  CHECK_THROWS_AS(xm_laguerre(spec("I:1"), 0, 1.0), AdmissibilityError);
  CHECK_THROWS_AS(xm_laguerre(spec("III:2"), 2, 3.0), AdmissibilityError);
  CHECK(admissible_k(spec("III:2"), 0));
  CHECK_FALSE(admissible_k(spec("III:2"), 1));
  CHECK(admissible_k(spec("III:2"), 3));
  CHECK_FALSE(admissible_k(spec("II:2"), 1));

  // exact and floating kernels give the same polynomial
  for (const char* s : {"I:2", "II:1", "III:2"})
    for (int k : {3, 5}) {
      const auto e = xm_laguerre(spec(s), k, 3.0, NullspaceMethod::Exact);
      const auto f = xm_laguerre(spec(s), k, 3.0, NullspaceMethod::Floating);
      CHECK(f.cert.method == NullspaceMethod::Floating);
      CHECK(f.cert.smallest_ratio <= kKernelSmallRatio);
      for (int j = 0; j <= k; ++j)
        CHECK(f.poly.coeff(j) == doctest::Approx(e.poly.coeff(j)).epsilon(1e-8).scale(1e-6));
    }

  // off the spectrum the kernel disappears
  CHECK_THROWS_AS(xm_laguerre(spec("I:1"), 2, 1.0, NullspaceMethod::Exact, 1e-3), NullspaceDimensionError);
  CHECK_THROWS_AS(xm_laguerre(spec("II:1"), 2, 1.0, NullspaceMethod::Floating, -1e-3), NullspaceDimensionError);
}

TEST_CASE("extended radial states") {
  const auto p = validate_parameters(0.3, 0.7);
  const PointFunction none = [](double) { return 0.0; };
  const auto s = extended_radial_state(spec("I:1"), 1, HalfInt::integer(0), p);
  CHECK(s.energy == doctest::Approx(2.0).epsilon(1e-15));
  const auto s3 = extended_radial_state(spec("III:2"), 0, HalfInt::integer(1), p);
  CHECK(s3.energy == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));

  const auto q = validate_parameters(0.2, 0.2);
  const auto s2 = extended_radial_state(spec("II:1"), 2, HalfInt::from_twice(1), q);
  CHECK(radial_overlap(s2.form, s2.form, q) == doctest::Approx(1.0).epsilon(1e-9));

  // eigenfunctions of the extended radial operator
  for (const char* sp : {"I:1", "I:2", "II:1", "III:2"}) {
    const HalfInt n = HalfInt::integer(1);
    const auto g = g_factor(spec(sp), alpha(n, p));
    const PointFunction shift = [&g](double rho) { return extended_potential_shift(g, rho); };
    for (int k = 0; k <= 5; ++k) {
      if (!admissible_k(spec(sp), k))
        continue;
      const auto st = extended_radial_state(spec(sp), k, n, p);
      CHECK(radial_overlap(st.form, st.form, p) == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(st.norm_constant > 0);
      for (double rho : {0.3, 1.1, 2.2, 3.7}) {
        const double f = eval_radial(st.form, rho, 0);
        const double res = apply_radial_operator(st.form, p, separation_constant(n, p), shift, rho) - st.energy * f;
        CHECK(std::abs(res) <= 1e-9 * std::max(1.0, std::abs(f)));
      }
    }
  }
}

TEST_CASE("level keys") {
  // type I: 2k - 2m + 2n for k = m..kmax
  const auto keys = extended_level_keys(spec("I:2"), HalfInt::integer(1), 6);
  CHECK(keys == std::vector<int>{2, 4, 6, 8, 10});
  auto k3 = extended_level_keys(spec("III:2"), HalfInt::integer(1), 6);
  std::sort(k3.begin(), k3.end());
  CHECK(k3 == std::vector<int>{-2, 4, 6, 8, 10});
}
