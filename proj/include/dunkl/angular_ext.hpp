#ifndef DUNKL_ANGULAR_EXT_HPP
#define DUNKL_ANGULAR_EXT_HPP

#include "dunkl/nullspace.hpp"
#include "dunkl/params.hpp"
#include "dunkl/quasiforms.hpp"

#include <functional>

namespace dunkl {

// ---- one-dimensional PT I extension ----

/// Throws DegenerateParametersError for A = B and SingularExtensionError
/// unless min(A, B) > 1/2.
void check_pt1_extension(double A, double B);

/// A(A-1) sec^2 x + B(B-1) csc^2 x
double pt1_potential(double A, double B, double x);

/// PT I potential plus 8(A+B-1)/D - 8(2A-1)(2B-1)/D^2, D = A+B-1+(B-A) cos 2x.
double pt1_extended_potential(double A, double B, double x);

/// Degree nu+1 X1-Jacobi polynomial in t = -cos 2x: cos^A sin^B P(t)/D(t)
/// solves the extended PT I problem at eigenvalue (A+B+2nu)^2, A = a+1/2,
/// B = b+1/2, D(t) = A+B-1-(B-A)t. Built from the one-dimensional kernel of
/// the cleared-denominator ODE; eigen_offset shifts the target eigenvalue.
/// Normalized to positive leading coefficient and
/// int (1-t)^a (1+t)^b (P/D)^2 dt = 1.
struct X1Polynomial {
  PolyD poly;
  NullspaceCertificate cert;
};
X1Polynomial x1_jacobi(int nu_plus_1, double a, double b, NullspaceMethod method = NullspaceMethod::Exact,
                       double eigen_offset = 0.0);

// ---- planar coefficient functions ----

/// K_{m1,m2}. The quadratic form d = (2m2-1)x1^2 + (2m1-1)x2^2 must be
/// definite, i.e. m1 and m2 strictly on the same side of 1/2.
class KTerm {
public:
  static KTerm make(double m1, double m2);
  double m1() const { return m1_; }
  double m2() const { return m2_; }
  /// Cartesian value; form selects one of the three equivalent expressions (0, 1, 2).
  double operator()(double x1, double x2, int form = 0) const;
  /// rho^2 K as a function of the polar angle.
  double kappa(double phi) const;
  double polar(double rho, double phi) const { return kappa(phi) / (rho * rho); }

private:
  KTerm(double m1, double m2) : m1_(m1), m2_(m2) {}
  double m1_;
  double m2_;
};

double k_term(double m1, double m2, double x1, double x2);

/// The planar extension is set up for mu1, mu2 > 1/2, mu1 != mu2 and
/// |mu1 - mu2| != 1 (every sector then has a non-degenerate extension).
void check_angular_extension(const Parameters& p);

/// L^{(p,q)} = K_{mu1,mu2} + (-1)^p K_{mu1+1,mu2} + (-1)^q K_{mu1,mu2+1} + (-1)^{p+q} K_{mu1+1,mu2+1}
double l_term(int p, int q, const Parameters& params, double x1, double x2);

/// F_i^{(a,b)}: (b-a) x1 / d for i = 1, (a-b) x2 / d for i = 2.
double f_component(int i, double a, double b, double x1, double x2);
double f_component_derivative(int i, double a, double b, double x1, double x2);

/// F_i of the extended Dunkl derivatives and its derivative along x_i.
double f_term(int i, const Parameters& params, double x1, double x2);
double f_term_derivative(int i, const Parameters& params, double x1, double x2);

/// Strength of the extension terms. prefactor multiplies the
/// K (1 +- R1)(1 +- R2) projector terms; L, F and G carry 2 x prefactor.
struct ExtensionCoupling {
  double prefactor = 1.0;
  double scale() const { return 2.0 * prefactor; }
};

double g1_term(const Parameters& params, const ExtensionCoupling& c, double x1, double x2);
double g2_term(const Parameters& params, const ExtensionCoupling& c, double x1, double x2);

/// Extra potential of the sector-reduced angular operator: 4 prefactor rho^2 K_{mu+eps}.
PointFunction angular_extension_potential(SectorLabel sector, const Parameters& p,
                                          const ExtensionCoupling& c);

// ---- extended angular states ----

struct ExtendedAngularState {
  SectorLabel sector;
  HalfInt n;
  AngularForm form;
  double msq = 0.0;
  NullspaceCertificate cert;
};

/// Checks sector/n, mu2-mu1+eps2-eps1 != 0 (DegenerateParametersError) and
/// min(mu1+eps1, mu2+eps2) > 1/2 (SingularExtensionError).
ExtendedAngularState extended_angular_state(SectorLabel sector, HalfInt n, const Parameters& p);

// ---- H_ext applied to explicit test functions ----

/// Value, gradient and pure second derivatives of a planar function.
struct PlaneJet {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d11 = 0.0;
  double d22 = 0.0;
};
using PlaneFunction = std::function<PlaneJet(double, double)>;

/// H plus prefactor x sum over sectors of K_{mu+eps} (1 +- R1)(1 +- R2),
/// with H in its expanded differential-difference form.
double hext_projector_form(const PlaneFunction& f, const Parameters& p, const ExtensionCoupling& c,
                           double x1, double x2);
/// 1/2 (-D1^2 - D2^2 + x^2 + sum L^{(p,q)} R1^p R2^q), D_i composed.
double hext_l_form(const PlaneFunction& f, const Parameters& p, const ExtensionCoupling& c, double x1,
                   double x2);
/// 1/2 (-Dh1^2 - Dh2^2 + x^2 + G1 + G2 R1 R2), Dh_i = D_i + F_i R_i composed.
double hext_dunkl_form(const PlaneFunction& f, const Parameters& p, const ExtensionCoupling& c, double x1,
                       double x2);

} // namespace dunkl

#endif
