#ifndef DUNKL_QUASIFORMS_HPP
#define DUNKL_QUASIFORMS_HPP

#include "dunkl/params.hpp"
#include "dunkl/polynomial.hpp"

#include <functional>

namespace dunkl {

/// Value and first two derivatives at a point.
struct Jet {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;

  double order(int k) const { return k == 0 ? v : (k == 1 ? d1 : d2); }
};

/// f(rho) = c rho^s [exp(-rho^2/2)] num(rho^2) / den(rho^2).
/// den is certified free of zeros on z >= 0 at construction.
class RadialForm {
public:
  static RadialForm make(double c, double s, bool gauss, PolyD num,
                         PolyD den = PolyD::constant(1.0));

  double scale() const { return c_; }
  double power() const { return s_; }
  bool gauss() const { return gauss_; }
  const PolyD& num() const { return num_; }
  const PolyD& den() const { return den_; }

  RadialForm scaled(double factor) const;

private:
  RadialForm() = default;
  double c_ = 1.0;
  double s_ = 0.0;
  bool gauss_ = false;
  PolyD num_;
  PolyD den_;
};

/// g(phi) = c (cos phi)^a (sin phi)^b num(t) / den(t), t = -cos 2phi.
/// Integer exponents keep the sign of cos/sin; non-integer exponents act on
/// |cos|, |sin|. den has degree <= 1 and no zero on [-1, 1].
class AngularForm {
public:
  static AngularForm make(double c, double a, double b, PolyD num,
                          PolyD den = PolyD::constant(1.0));

  double scale() const { return c_; }
  double cos_power() const { return a_; }
  double sin_power() const { return b_; }
  const PolyD& num() const { return num_; }
  const PolyD& den() const { return den_; }

  /// Parity under phi -> pi - phi (0 even, 1 odd).
  int parity1() const;
  /// Parity under phi -> -phi.
  int parity2() const;

  AngularForm scaled(double factor) const;

private:
  AngularForm() = default;
  double c_ = 1.0;
  double a_ = 0.0;
  double b_ = 0.0;
  PolyD num_;
  PolyD den_;
};

using PointFunction = std::function<double(double)>;

Jet radial_jet(const RadialForm& f, double rho);
double eval_radial(const RadialForm& f, double rho, int order);

Jet angular_jet(const AngularForm& g, double phi);
double eval_angular(const AngularForm& g, double phi, int order);

/// [A_rho f + (M^2 / 2rho^2) f + extra f](rho) with
/// A_rho = 1/2 (-d^2 - (2mu1+2mu2+1)/rho d + rho^2).
double apply_radial_operator(const RadialForm& f, const Parameters& p, double msq,
                             const PointFunction& extra, double rho);

/// [B_phi g + extra g](phi), reflections replaced by the sector eigenvalues.
/// Throws ParityError if g is not a parity eigenfunction of the sector.
double apply_angular_operator(const AngularForm& g, const Parameters& p, SectorLabel sector,
                              const PointFunction& extra, double phi);

} // namespace dunkl

#endif
