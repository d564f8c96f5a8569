#include "dunkl/quasiforms.hpp"

#include "dunkl/certify.hpp"
#include "dunkl/error.hpp"

#include <cmath>
#include <string>

namespace dunkl {

namespace {

constexpr double kAxisEps = 1e-14;

Jet mul(const Jet& a, const Jet& b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}

bool is_integral(double e) { return std::floor(e) == e; }

// x^q with the sign convention of the forms; throws at a zero base when the
// exponent is negative.
double form_pow(double x, double q, bool integral, const char* what) {
  if (q == 0.0)
    return 1.0;
  if (std::abs(x) < kAxisEps) {
    if (q < 0.0)
      throw DomainError(std::string("singular ") + what + " power on an axis");
    return 0.0;
  }
  return integral ? std::pow(x, q) : std::pow(std::abs(x), q);
}

// Jet of base(phi)^e given the jet of base.
Jet pow_jet(const Jet& base, double e, int order, const char* what) {
  if (e == 0.0)
    return {1.0, 0.0, 0.0};
  const bool integral = is_integral(e);
  const double sgn = integral ? 1.0 : (base.v < 0.0 ? -1.0 : 1.0);
  Jet j;
  j.v = form_pow(base.v, e, integral, what);
  if (order >= 1)
    j.d1 = e * form_pow(base.v, e - 1.0, integral, what) * sgn * base.d1;
  if (order >= 2) {
    const double c2 = e * (e - 1.0);
    if (c2 != 0.0)
      j.d2 += c2 * form_pow(base.v, e - 2.0, integral, what) * base.d1 * base.d1;
    if (base.d2 != 0.0)
      j.d2 += e * form_pow(base.v, e - 1.0, integral, what) * sgn * base.d2;
  }
  return j;
}

// Jet of num(u)/den(u) in the variable u.
Jet rational_jet(const PolyD& num, const PolyD& den, double u) {
  const PolyD n1 = num.derivative(), n2 = n1.derivative();
  const PolyD d1 = den.derivative(), d2 = d1.derivative();
  const double N = num(u), Np = n1(u), Npp = n2(u);
  const double D = den(u), Dp = d1(u), Dpp = d2(u);
  Jet h;
  h.v = N / D;
  h.d1 = Np / D - N * Dp / (D * D);
  h.d2 = Npp / D - 2.0 * Np * Dp / (D * D) - N * Dpp / (D * D) + 2.0 * N * Dp * Dp / (D * D * D);
  return h;
}

// Chain rule through u(x) given du, d2u.
Jet compose(const Jet& h, double du, double d2u) {
  return {h.v, h.d1 * du, h.d2 * du * du + h.d1 * d2u};
}

int power_parity(double e) {
  if (!is_integral(e))
    return 0;
  return static_cast<int>(std::fmod(std::abs(e), 2.0));
}

} // namespace

RadialForm RadialForm::make(double c, double s, bool gauss, PolyD num, PolyD den) {
  if (den.is_zero())
    throw DomainError("radial form denominator is identically zero");
  if (den.degree() > 0 && certified_sign_halfline(den) == 0)
    throw SingularExtensionError("radial form denominator may vanish on z >= 0");
  RadialForm f;
  f.c_ = c;
  f.s_ = s;
  f.gauss_ = gauss;
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  return f;
}

RadialForm RadialForm::scaled(double factor) const {
  RadialForm f = *this;
  f.c_ *= factor;
  return f;
}

AngularForm AngularForm::make(double c, double a, double b, PolyD num, PolyD den) {
  if (den.is_zero())
    throw DomainError("angular form denominator is identically zero");
  if (den.degree() > 1)
    throw DomainError("angular form denominator must have degree <= 1");
  const double lo = den(-1.0), hi = den(1.0);
  if (!(lo * hi > 0.0))
    throw SingularExtensionError("angular form denominator vanishes on [-1, 1]");
  AngularForm g;
  g.c_ = c;
  g.a_ = a;
  g.b_ = b;
  g.num_ = std::move(num);
  g.den_ = std::move(den);
  return g;
}

int AngularForm::parity1() const { return power_parity(a_); }
int AngularForm::parity2() const { return power_parity(b_); }

AngularForm AngularForm::scaled(double factor) const {
  AngularForm g = *this;
  g.c_ *= factor;
  return g;
}

namespace {

Jet radial_jet_to(const RadialForm& f, double rho, int order) {
  if (!(rho > 0.0))
    throw DomainError("radial forms are evaluated at rho > 0");
  const double s = f.power();
  Jet p{std::pow(rho, s), 0.0, 0.0};
  if (order >= 1)
    p.d1 = s == 0.0 ? 0.0 : s * std::pow(rho, s - 1.0);
  if (order >= 2)
    p.d2 = s * (s - 1.0) == 0.0 ? 0.0 : s * (s - 1.0) * std::pow(rho, s - 2.0);
  Jet out = p;
  if (f.gauss()) {
    const double e = std::exp(-0.5 * rho * rho);
    out = mul(out, Jet{e, -rho * e, (rho * rho - 1.0) * e});
  }
  const Jet h = compose(rational_jet(f.num(), f.den(), rho * rho), 2.0 * rho, 2.0);
  out = mul(out, h);
  out.v *= f.scale();
  out.d1 *= f.scale();
  out.d2 *= f.scale();
  return out;
}

Jet angular_jet_to(const AngularForm& g, double phi, int order) {
  const double c = std::cos(phi), s = std::sin(phi);
  const Jet cp = pow_jet(Jet{c, -s, -c}, g.cos_power(), order, "cos");
  const Jet sp = pow_jet(Jet{s, c, -s}, g.sin_power(), order, "sin");
  const double t = -std::cos(2.0 * phi);
  const Jet h = compose(rational_jet(g.num(), g.den(), t), 2.0 * std::sin(2.0 * phi),
                        4.0 * std::cos(2.0 * phi));
  Jet out = mul(mul(cp, sp), h);
  out.v *= g.scale();
  out.d1 *= g.scale();
  out.d2 *= g.scale();
  return out;
}

} // namespace

Jet radial_jet(const RadialForm& f, double rho) { return radial_jet_to(f, rho, 2); }

double eval_radial(const RadialForm& f, double rho, int order) {
  if (order < 0 || order > 2)
    throw DomainError("derivative order must be 0, 1 or 2");
  return radial_jet_to(f, rho, order).order(order);
}

Jet angular_jet(const AngularForm& g, double phi) { return angular_jet_to(g, phi, 2); }

double eval_angular(const AngularForm& g, double phi, int order) {
  if (order < 0 || order > 2)
    throw DomainError("derivative order must be 0, 1 or 2");
  return angular_jet_to(g, phi, order).order(order);
}

double apply_radial_operator(const RadialForm& f, const Parameters& p, double msq,
                             const PointFunction& extra, double rho) {
  const Jet j = radial_jet(f, rho);
  const double drift = (2.0 * p.mu1() + 2.0 * p.mu2() + 1.0) / rho;
  double out = 0.5 * (-j.d2 - drift * j.d1 + rho * rho * j.v) + msq / (2.0 * rho * rho) * j.v;
  if (extra)
    out += extra(rho) * j.v;
  return out;
}

double apply_angular_operator(const AngularForm& g, const Parameters& p, SectorLabel sector,
                              const PointFunction& extra, double phi) {
  if (g.parity1() != sector.eps1 || g.parity2() != sector.eps2)
    throw ParityError("angular form is not a parity eigenfunction of sector " + sector.str());
  const double c = std::cos(phi), s = std::sin(phi);
  if (std::abs(c) < kAxisEps || std::abs(s) < kAxisEps)
    throw DomainError("angular operator is singular on the coordinate axes");
  const Jet j = angular_jet(g, phi);
  double out = 0.5 * (-j.d2 + 2.0 * (p.mu1() * s / c - p.mu2() * c / s) * j.d1 +
                      2.0 * p.mu1() * sector.eps1 / (c * c) * j.v +
                      2.0 * p.mu2() * sector.eps2 / (s * s) * j.v);
  if (extra)
    out += extra(phi) * j.v;
  return out;
}

} // namespace dunkl
