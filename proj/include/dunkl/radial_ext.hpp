#ifndef DUNKL_RADIAL_EXT_HPP
#define DUNKL_RADIAL_EXT_HPP

#include "dunkl/nullspace.hpp"
#include "dunkl/params.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/quasiforms.hpp"

#include <vector>

namespace dunkl {

/// Seed polynomial of a rational extension of the radial oscillator:
///   I:   L_m^{(alpha-1)}(-z)
///   II:  L_m^{(-alpha-1)}(z),  m < alpha+1
///   III: L_m^{(-alpha-1)}(-z), m < alpha+1, m even
/// Certified free of zeros on z >= 0.
struct GFactor {
  ExtensionSpec spec;
  double alpha = 0.0;
  PolyD poly;
  PolyQ exact;  // same polynomial with exact coefficients
};

GFactor g_factor(const ExtensionSpec& spec, double alpha);

/// 1/2 rho^2 - 2 { g'/g + 2 rho^2 [g''/g - (g'/g)^2] } at z = rho^2.
double extended_potential(const GFactor& g, double rho);
/// The rational part alone, i.e. extended_potential - rho^2 / 2.
double extended_potential_shift(const GFactor& g, double rho);

/// Exceptional polynomial plus the certificate of the kernel it came from.
struct ExceptionalPolynomial {
  PolyD poly;
  NullspaceCertificate cert;
};

/// Admissible radial indices: k >= m for I/II, k = 0 or k >= m+1 for III.
bool admissible_k(const ExtensionSpec& spec, int k);

/// Degree-k X_m-Laguerre polynomial y for the seed g: rho^{2n} e^{-z/2} y(z)/g(z),
/// z = rho^2, solves the extended radial equation at energy 2k - 2m + alpha + 1.
/// y spans the one-dimensional kernel of the cleared-denominator ODE on the
/// k+1 coefficients. energy_offset shifts the target energy (used to show the
/// kernel collapses off the spectrum). The result has positive leading
/// coefficient and unit norm of rho^{2n} e^{-z/2} y/g under rho^{2mu1+2mu2+1} drho.
ExceptionalPolynomial xm_laguerre(const ExtensionSpec& spec, int k, double alpha,
                                  NullspaceMethod method = NullspaceMethod::Exact,
                                  double energy_offset = 0.0);

struct ExtendedRadialState {
  ExtensionSpec spec;
  HalfInt n;
  int k = 0;
  RadialForm form;        // c rho^{2n} e^{-rho^2/2} y(rho^2) / g(rho^2)
  double energy = 0.0;
  double norm_constant = 0.0;  // closed-form N
  NullspaceCertificate cert;
};

/// State normalized by the closed-form constant N, with the numerator in the
/// leading-coefficient convention N refers to.
ExtendedRadialState extended_radial_state(const ExtensionSpec& spec, int k, HalfInt n,
                                          const Parameters& p);

/// Twice-level keys 2k - 2m + 2n (energy = key + mu1 + mu2 + 1) of all
/// admissible extended states with k <= kmax.
std::vector<int> extended_level_keys(const ExtensionSpec& spec, HalfInt n, int kmax);

/// Inner product of two Gaussian-damped radial forms under
/// rho^{2mu1+2mu2+1} drho, by Gauss-Laguerre rules in z = rho^2, starting
/// from 4 x (total degree) + 40 nodes (or nodes, if positive) and doubling
/// until converged.
double radial_inner(const RadialForm& f, const RadialForm& g, const Parameters& p, int nodes = 0);
ConvergedIntegral radial_inner_converged(const RadialForm& f, const RadialForm& g, const Parameters& p,
                                         int nodes = 0);

} // namespace dunkl

#endif
