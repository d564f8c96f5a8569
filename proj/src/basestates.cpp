#include "dunkl/basestates.hpp"

#include "dunkl/error.hpp"
#include "dunkl/orthopoly.hpp"

#include <cmath>
#include <numbers>

namespace dunkl {

AngularForm angular_state(SectorLabel sector, HalfInt n, const Parameters& p) {
  if (!admissible_n(sector, n))
    throw DomainError("n = " + std::to_string(n.value()) + " is not allowed in sector " +
                      sector.str());
  const double nv = n.value();
  const int e1 = sector.eps1, e2 = sector.eps2;
  const double s = p.sum();
  const int degree = (n.twice - e1 - e2) / 2;

  // ln[(2n+s) Gamma(n+s+(e1+e2)/2)]; at n = 0 (sector (0,0)) this is ln Gamma(s+1)
  const double log_lead = (n.twice == 0) ? log_gamma(s + 1.0)
                                         : std::log(2.0 * nv + s) + log_gamma(nv + s + 0.5 * (e1 + e2));
  const double log_norm2 = log_lead + log_factorial(degree) - std::log(2.0) -
                           log_gamma(nv + p.mu1() + 0.5 * (1 + e1 - e2)) -
                           log_gamma(nv + p.mu2() + 0.5 * (1 + e2 - e1));
  const double c = std::exp(0.5 * log_norm2);
  PolyD jac = jacobi<double>(degree, p.mu1() + e1 - 0.5, p.mu2() + e2 - 0.5);
  return AngularForm::make(c, e1, e2, std::move(jac));
}

double separation_constant(HalfInt n, const Parameters& p) {
  const double nv = n.value();
  return 4.0 * nv * (nv + p.sum());
}

RadialForm radial_state(int k, HalfInt n, const Parameters& p) {
  if (k < 0)
    throw DomainError("radial index k must be nonnegative");
  if (n.twice < 0)
    throw DomainError("n must be nonnegative");
  const double a = alpha(n, p);
  const double log_c2 = std::log(2.0) + log_factorial(k) - log_gamma(k + a + 1.0);
  return RadialForm::make(std::exp(0.5 * log_c2), static_cast<double>(n.twice), true,
                          laguerre<double>(k, a));
}

BoundState assemble(const QuantumNumbers& qn, const Parameters& p) {
  const auto checked = QuantumNumbers::make(qn.sector, qn.n, qn.k);
  return BoundState{checked,
                    radial_state(checked.k, checked.n, p),
                    angular_state(checked.sector, checked.n, p),
                    level_energy(checked.level(), p),
                    separation_constant(checked.n, p)};
}

double polar_angle(double x1, double x2) {
  double phi = std::atan2(x2, x1);
  if (phi < 0.0)
    phi += 2.0 * std::numbers::pi;
  return phi;
}

double eval_product(const RadialForm& radial, const AngularForm& angular, double x1, double x2) {
  const double rho = std::hypot(x1, x2);
  if (rho == 0.0) {
    if (radial.power() > 0.0)
      return 0.0;
    const bool constant_angle = angular.cos_power() == 0.0 && angular.sin_power() == 0.0 &&
                                angular.num().degree() <= 0 && angular.den().degree() == 0;
    if (radial.power() == 0.0 && constant_angle) {
      const double r0 = radial.scale() * radial.num()(0.0) / radial.den()(0.0);
      return r0 * angular.scale() * angular.num()(0.0) / angular.den()(0.0);
    }
    throw DomainError("wavefunction has no direction-independent limit at the origin");
  }
  return eval_radial(radial, rho, 0) * eval_angular(angular, polar_angle(x1, x2), 0);
}

double eval_wavefunction(const BoundState& state, double x1, double x2) {
  return eval_product(state.radial, state.angular, x1, x2);
}

} // namespace dunkl
