#include <doctest.h>

#include "dunkl/basestates.hpp"
#include "dunkl/error.hpp"
#include "dunkl/quasiforms.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numbers>

using namespace dunkl;

namespace {
const PointFunction none = [](double) { return 0.0; };
}

TEST_CASE("radial evaluation") {
  const auto gauss = RadialForm::make(1.0, 0.0, true, PolyD::constant(1.0));
  CHECK(eval_radial(gauss, 1.0, 2) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  CHECK(eval_radial(gauss, 2.0, 2) == doctest::Approx(3.0 * std::exp(-2.0)).epsilon(1e-14));
  const auto sq = RadialForm::make(1.0, 2.0, false, PolyD::constant(1.0));
  CHECK(eval_radial(sq, 3.0, 1) == doctest::Approx(6.0).epsilon(1e-15));

  // a form with every feature switched on, against finite differences
  const auto f = RadialForm::make(0.8, 1.3, true, PolyD{0.5, -1.2, 0.3}, PolyD{1.5, 0.4, 0.2});
  auto v = [&](double r) { return eval_radial(f, r, 0); };
  const double d1 = oracle::first_derivative(v, 1.37, 1e-2);
  const double d2 = oracle::second_derivative(v, 1.37, 2e-2);
  CHECK(eval_radial(f, 1.37, 1) == doctest::Approx(d1).epsilon(1e-9));
  CHECK(eval_radial(f, 1.37, 2) == doctest::Approx(d2).epsilon(1e-8));
  const auto j = radial_jet(f, 1.37);
  CHECK(j.v == eval_radial(f, 1.37, 0));

  // denominators must not vanish on the half-line
  CHECK_THROWS_AS(RadialForm::make(1.0, 0.0, true, PolyD::constant(1.0), PolyD{-1.0, 1.0}), Error);
}

TEST_CASE("angular evaluation") {
  const auto c = AngularForm::make(1.0, 1.0, 0.0, PolyD::constant(1.0));
  for (double phi : {0.3, 2.0, 4.1})
    CHECK(eval_angular(c, phi, 2) == doctest::Approx(-std::cos(phi)).epsilon(1e-14));
  const auto t = AngularForm::make(1.0, 0.0, 0.0, PolyD{0.0, 1.0});
  CHECK(eval_angular(t, std::numbers::pi / 4, 0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));

  const auto g = AngularForm::make(1.1, 1.0, 2.0, PolyD{0.3, -0.7, 0.25}, PolyD{1.8, 0.5});
  auto v = [&](double x) { return eval_angular(g, x, 0); };
  CHECK(eval_angular(g, 0.9, 1) == doctest::Approx(oracle::first_derivative(v, 0.9)).epsilon(1e-9));
  CHECK(eval_angular(g, 0.9, 2) == doctest::Approx(oracle::second_derivative(v, 0.9, 2e-2)).epsilon(1e-8));
  CHECK(g.parity1() == 1);
  CHECK(g.parity2() == 0);
  // parities under phi -> pi - phi and phi -> -phi
  CHECK(v(std::numbers::pi - 0.9) == doctest::Approx(-v(0.9)).epsilon(1e-13));
  CHECK(v(2 * std::numbers::pi - 0.9) == doctest::Approx(v(0.9)).epsilon(1e-13));
  CHECK_THROWS_AS(AngularForm::make(1.0, 0.0, 0.0, PolyD::constant(1.0), PolyD{0.5, 1.0}), Error);
}

TEST_CASE("radial operator") {
  const auto p = validate_parameters(0.3, 0.7);
  const auto r0 = radial_state(0, HalfInt::integer(0), p);
  CHECK(apply_radial_operator(r0, p, 0.0, none, 1.1) ==
        doctest::Approx(2.0 * eval_radial(r0, 1.1, 0)).epsilon(1e-13));
  const auto p0 = validate_parameters(0, 0);
  const auto one = RadialForm::make(1.0, 0.0, false, PolyD::constant(1.0));
  for (double rho : {0.2, 1.0, 3.3})
    CHECK(apply_radial_operator(one, p0, 0.0, none, rho) == doctest::Approx(0.5 * rho * rho).epsilon(1e-14));
}

TEST_CASE("angular operator") {
  const auto p = validate_parameters(0.3, 0.7);
  const auto g0 = angular_state(SectorLabel::make(0, 0), HalfInt::integer(0), p);
  CHECK(apply_angular_operator(g0, p, SectorLabel::make(0, 0), none, 0.7) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
  const auto g = angular_state(SectorLabel::make(0, 1), HalfInt::from_twice(1), p);
  for (double phi : {0.4, 1.9, 3.6, 5.5})
    CHECK(apply_angular_operator(g, p, SectorLabel::make(0, 1), none, phi) ==
          doctest::Approx(1.5 * eval_angular(g, phi, 0)).epsilon(1e-12));
  const auto p0 = validate_parameters(0, 0);
  const auto c = AngularForm::make(0.4, 0.0, 0.0, PolyD::constant(1.0));
  CHECK(apply_angular_operator(c, p0, SectorLabel::make(0, 0), none, 1.2) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  // a function outside the sector is rejected
  CHECK_THROWS_AS(apply_angular_operator(g, p, SectorLabel::make(0, 0), none, 0.4), ParityError);
}
