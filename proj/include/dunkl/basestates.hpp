#ifndef DUNKL_BASESTATES_HPP
#define DUNKL_BASESTATES_HPP

#include "dunkl/params.hpp"
#include "dunkl/quasiforms.hpp"

namespace dunkl {

struct BoundState {
  QuantumNumbers qn;
  RadialForm radial;
  AngularForm angular;
  double energy;
  double msq;
};

/// Normalized angular factor of sector (eps1, eps2):
/// c cos^eps1 sin^eps2 P^{(mu1+eps1-1/2, mu2+eps2-1/2)}_{n-(eps1+eps2)/2}(-cos 2phi).
AngularForm angular_state(SectorLabel sector, HalfInt n, const Parameters& p);

/// M^2 = 4n(n + mu1 + mu2).
double separation_constant(HalfInt n, const Parameters& p);

/// sqrt(2 k! / Gamma(k+2n+mu1+mu2+1)) rho^{2n} e^{-rho^2/2} L_k^{(2n+mu1+mu2)}(rho^2).
RadialForm radial_state(int k, HalfInt n, const Parameters& p);

BoundState assemble(const QuantumNumbers& qn, const Parameters& p);

/// Polar angle of (x1, x2) in [0, 2pi), branch cut on the positive x1-axis.
double polar_angle(double x1, double x2);

/// R(rho) Phi(phi) at a Cartesian point. The origin is accepted only where
/// the product has a direction-independent limit.
double eval_product(const RadialForm& radial, const AngularForm& angular, double x1, double x2);

double eval_wavefunction(const BoundState& state, double x1, double x2);

} // namespace dunkl

#endif
