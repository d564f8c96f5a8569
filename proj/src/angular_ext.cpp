#include "dunkl/angular_ext.hpp"

#include "dunkl/error.hpp"
#include "dunkl/orthopoly.hpp"
#include "dunkl/quadrature.hpp"

#include <cmath>

namespace dunkl {

void check_pt1_extension(double A, double B) {
  if (A == B)
    throw DegenerateParametersError("extended PT I potential needs A != B (the eigenfunctions carry a factor B - A)");
  if (!(std::min(A, B) > 0.5))
    throw SingularExtensionError("extended PT I denominator A+B-1+(B-A)cos 2x can vanish unless min(A, B) > 1/2");
}

double pt1_potential(double A, double B, double x) {
  const double c = std::cos(x), s = std::sin(x);
  return A * (A - 1.0) / (c * c) + B * (B - 1.0) / (s * s);
}

double pt1_extended_potential(double A, double B, double x) {
  check_pt1_extension(A, B);
  const double d = A + B - 1.0 + (B - A) * std::cos(2.0 * x);
  return pt1_potential(A, B, x) + 8.0 * (A + B - 1.0) / d - 8.0 * (2.0 * A - 1.0) * (2.0 * B - 1.0) / (d * d);
}

namespace {

// With h = y/D, D = d0 + d1 t, the extended Jacobi equation
//   4[(1-t^2) h'' + (b-a-(a+b+2)t) h'] + (E-(A+B)^2) h - 8(A+B-1) h/D + 8(2A-1)(2B-1) h/D^2 = 0
// multiplied through by D^3.
template <class T>
DenseMatrix<T> x1_matrix(const T& a, const T& b, const T& lambda, int deg, std::vector<double>& reference) {
  const T A = a + T(1) / 2, B = b + T(1) / 2;
  const T d0 = A + B - 1, d1 = A - B;
  const Polynomial<T> D = Polynomial<T>::linear(d0, d1);
  const Polynomial<T> D2 = D * D;
  const Polynomial<T> w(std::vector<T>{T(1), T(0), T(-1)});
  const Polynomial<T> q = Polynomial<T>::linear(T(b - a), T(-(a + b + 2)));
  const T c1 = T(8) * d0, c2 = T(8) * (2 * A - 1) * (2 * B - 1);
  DenseMatrix<T> m(deg + 4, deg + 1);
  for (int j = 0; j <= deg; ++j) {
    std::vector<T> basis(j + 1, T(0));
    basis[j] = T(1);
    const Polynomial<T> y(basis);
    const Polynomial<T> y1 = y.derivative(), y2 = y1.derivative();
    set_column(m, reference, j,
               {T(4) * (w * (y2 * D2)), T(-8) * d1 * (w * (y1 * D)), T(8) * d1 * d1 * (w * y),
                T(4) * (q * (y1 * D2)), T(-4) * d1 * (q * (y * D)), lambda * (y * D2), -c1 * (y * D), c2 * y});
  }
  return m;
}

double denominator_kappa(double m1, double m2, double phi) {
  return m1 + m2 - 1.0 - (m1 - m2) * std::cos(2.0 * phi);
}

} // namespace

X1Polynomial x1_jacobi(int nu_plus_1, double a, double b, NullspaceMethod method, double eigen_offset) {
  if (nu_plus_1 < 1)
    throw DomainError("X1-Jacobi degree must be at least 1");
  if (!(a > -1.0) || !(b > -1.0))
    throw DomainError("X1-Jacobi parameters must satisfy a, b > -1");
  if (a == b)
    throw DegenerateParametersError("X1-Jacobi polynomials need a != b");
  if (!(a * b > 0.0))
    throw SingularExtensionError("X1-Jacobi denominator vanishes on [-1, 1] unless a and b share a sign");
  const int nu = nu_plus_1 - 1;
  X1Polynomial out;
  PolyD y;
  if (method == NullspaceMethod::Exact) {
    const Rational qa(a), qb(b);
    // (A+B+2nu)^2 - (A+B)^2 = 4 nu (A+B+nu), A+B = a+b+1
    const Rational lambda = 4 * nu * (qa + qb + 1 + nu) + Rational(eigen_offset);
    std::vector<double> ref;
    auto x = exact_kernel_vector(x1_matrix<Rational>(qa, qb, lambda, nu_plus_1, ref), out.cert);
    if (sgn(x[nu_plus_1]) == 0)
      throw ConstructionError("kernel polynomial has degree below " + std::to_string(nu_plus_1));
    const Rational lead = x[nu_plus_1];
    for (auto& v : x)
      v /= lead;
    y = PolyQ(std::move(x)).cast<double>();
  } else {
    const double lambda = 4.0 * nu * (a + b + 1.0 + nu) + eigen_offset;
    std::vector<double> ref;
    const auto m = x1_matrix<double>(a, b, lambda, nu_plus_1, ref);
    auto x = floating_kernel_vector(m, out.cert, ref);
    const double lead = x[nu_plus_1];
    if (lead == 0.0)
      throw ConstructionError("kernel polynomial has degree below " + std::to_string(nu_plus_1));
    for (auto& v : x)
      v /= lead;
    y = PolyD(std::move(x));
  }
  const PolyD den = PolyD::linear(a + b, -(b - a));
  const double nrm = integrate_converged(WeightFamily::jacobi(a, b), [&](double t) {
                       const double r = y(t) / den(t);
                       return r * r;
                     }, 4 * nu_plus_1 + 40).value;
  out.poly = y * (1.0 / std::sqrt(nrm));
  return out;
}

KTerm KTerm::make(double m1, double m2) {
  if (!((2.0 * m1 - 1.0) * (2.0 * m2 - 1.0) > 0.0))
    throw SingularExtensionError("K term needs m1, m2 strictly on the same side of 1/2 (m1 = " +
                                 std::to_string(m1) + ", m2 = " + std::to_string(m2) + ")");
  return KTerm(m1, m2);
}

double KTerm::operator()(double x1, double x2, int form) const {
  if (x1 == 0.0 && x2 == 0.0)
    throw DomainError("K term is singular at the origin");
  const double d = (2.0 * m2_ - 1.0) * x1 * x1 + (2.0 * m1_ - 1.0) * x2 * x2;
  switch (form) {
  case 0:
    return (m1_ + m2_ - 1.0) / d - (2.0 * m1_ - 1.0) * (2.0 * m2_ - 1.0) * (x1 * x1 + x2 * x2) / (d * d);
  case 1:
    return (m2_ - m1_) * (1.0 / d - 2.0 * (2.0 * m1_ - 1.0) * x2 * x2 / (d * d));
  case 2:
    return (m1_ - m2_) * (1.0 / d - 2.0 * (2.0 * m2_ - 1.0) * x1 * x1 / (d * d));
  default:
    throw DomainError("K term form index must be 0, 1 or 2");
  }
}

double KTerm::kappa(double phi) const {
  const double d = denominator_kappa(m1_, m2_, phi);
  return (m1_ + m2_ - 1.0) / d - (2.0 * m1_ - 1.0) * (2.0 * m2_ - 1.0) / (d * d);
}

double k_term(double m1, double m2, double x1, double x2) { return KTerm::make(m1, m2)(x1, x2); }

void check_angular_extension(const Parameters& p) {
  if (!(p.mu1() > 0.5) || !(p.mu2() > 0.5))
    throw SingularExtensionError("the angular extension needs mu1, mu2 > 1/2");
  if (p.mu1() == p.mu2())
    throw DegenerateParametersError("the angular extension needs mu1 != mu2");
  if (std::abs(p.mu1() - p.mu2()) == 1.0)
    throw DegenerateParametersError("the angular extension of a mixed sector degenerates for |mu1 - mu2| = 1");
}

double l_term(int pp, int qq, const Parameters& params, double x1, double x2) {
  const double m1 = params.mu1(), m2 = params.mu2();
  const double sp = pp ? -1.0 : 1.0, sq = qq ? -1.0 : 1.0;
  return KTerm::make(m1, m2)(x1, x2) + sp * KTerm::make(m1 + 1.0, m2)(x1, x2) +
         sq * KTerm::make(m1, m2 + 1.0)(x1, x2) + sp * sq * KTerm::make(m1 + 1.0, m2 + 1.0)(x1, x2);
}

double f_component(int i, double a, double b, double x1, double x2) {
  const double d = (2.0 * b - 1.0) * x1 * x1 + (2.0 * a - 1.0) * x2 * x2;
  return i == 1 ? (b - a) * x1 / d : (a - b) * x2 / d;
}

double f_component_derivative(int i, double a, double b, double x1, double x2) {
  const double d = (2.0 * b - 1.0) * x1 * x1 + (2.0 * a - 1.0) * x2 * x2;
  if (i == 1)
    return (b - a) * (d - 2.0 * (2.0 * b - 1.0) * x1 * x1) / (d * d);
  return (a - b) * (d - 2.0 * (2.0 * a - 1.0) * x2 * x2) / (d * d);
}

namespace {

template <class Fn>
double f_combination(int i, const Parameters& params, Fn&& comp) {
  if (i != 1 && i != 2)
    throw DomainError("F term index must be 1 or 2");
  const double m1 = params.mu1(), m2 = params.mu2();
  for (auto [a, b] : {std::pair{m1, m2}, {m1 + 1.0, m2}, {m1, m2 + 1.0}, {m1 + 1.0, m2 + 1.0}})
    KTerm::make(a, b);
  const double sg = i == 1 ? -1.0 : 1.0;  // (-1)^i
  return comp(m1, m2) + sg * comp(m1 + 1.0, m2) - sg * comp(m1, m2 + 1.0) - comp(m1 + 1.0, m2 + 1.0);
}

} // namespace

double f_term(int i, const Parameters& params, double x1, double x2) {
  return f_combination(i, params, [&](double a, double b) { return f_component(i, a, b, x1, x2); });
}

double f_term_derivative(int i, const Parameters& params, double x1, double x2) {
  return f_combination(i, params, [&](double a, double b) { return f_component_derivative(i, a, b, x1, x2); });
}

double g1_term(const Parameters& params, const ExtensionCoupling& c, double x1, double x2) {
  const double lam = c.scale();
  const double f1 = lam * f_term(1, params, x1, x2), f2 = lam * f_term(2, params, x1, x2);
  return lam * l_term(0, 0, params, x1, x2) + 2.0 * params.mu1() / x1 * f1 - f1 * f1 +
         2.0 * params.mu2() / x2 * f2 - f2 * f2;
}

double g2_term(const Parameters& params, const ExtensionCoupling& c, double x1, double x2) {
  return c.scale() * l_term(1, 1, params, x1, x2);
}

PointFunction angular_extension_potential(SectorLabel sector, const Parameters& p, const ExtensionCoupling& c) {
  const KTerm k = KTerm::make(p.mu1() + sector.eps1, p.mu2() + sector.eps2);
  const double w = 4.0 * c.prefactor;
  return [k, w](double phi) { return w * k.kappa(phi); };
}

ExtendedAngularState extended_angular_state(SectorLabel sector, HalfInt n, const Parameters& p) {
  if (!admissible_n(sector, n))
    throw DomainError("n = " + std::to_string(n.value()) + " is not allowed in sector " + sector.str());
  const int e1 = sector.eps1, e2 = sector.eps2;
  const double A = p.mu1() + e1, B = p.mu2() + e2;
  const double delta = B - A;
  if (delta == 0.0)
    throw DegenerateParametersError("sector " + sector.str() + " has mu2-mu1+eps2-eps1 = 0, so the extended state vanishes");
  if (!(std::min(A, B) > 0.5))
    throw SingularExtensionError("sector " + sector.str() + " denominator can vanish: needs min(mu1+eps1, mu2+eps2) > 1/2");
  const double a = A - 0.5, b = B - 0.5;
  const int nu = (n.twice - e1 - e2) / 2;
  const double nv = n.value(), s = p.sum();
  X1Polynomial hat = x1_jacobi(nu + 1, a, b);

  // leading coefficient convention: half that of P_nu^{(a,b)}
  const double log_lead = -std::log(2.0) + log_gamma(2.0 * nu + a + b + 1.0) - log_gamma(nu + a + b + 1.0) -
                          nu * std::log(2.0) - log_factorial(nu);
  const double log_c2 = std::log(2.0 * (2.0 * nv + s)) + log_factorial(nu) + log_gamma(nv + s + 0.5 * (e1 + e2)) -
                        std::log(nv + p.mu1() + 0.5 * (1 + e1 - e2)) -
                        std::log(nv + p.mu2() + 0.5 * (1 + e2 - e1)) -
                        log_gamma(nv + p.mu1() + 0.5 * (e1 - e2 - 1)) -
                        log_gamma(nv + p.mu2() + 0.5 * (e2 - e1 - 1));
  const double c = delta * std::exp(0.5 * log_c2);
  PolyD num = hat.poly * (std::exp(log_lead) / hat.poly.leading());
  // mu1+mu2+eps1+eps2-1 + delta cos 2phi in t = -cos 2phi
  PolyD den = PolyD::linear(A + B - 1.0, -delta);
  return ExtendedAngularState{sector, n, AngularForm::make(c, e1, e2, std::move(num), std::move(den)),
                              4.0 * nv * (nv + s), hat.cert};
}

// ---- operator forms ----

namespace {

void require_off_axis(double x1, double x2) {
  if (x1 == 0.0 || x2 == 0.0)
    throw DomainError("Dunkl operators are applied off the coordinate axes only");
}

// (1 + s1 R1)(1 + s2 R2) f at x
double projector(const PlaneFunction& f, int s1, int s2, double x1, double x2) {
  return f(x1, x2).v + s1 * f(-x1, x2).v + s2 * f(x1, -x2).v + s1 * s2 * f(-x1, -x2).v;
}

// Expanded -D1^2 - D2^2 + x^2
double base_expanded(const PlaneFunction& f, const Parameters& p, double x1, double x2) {
  const PlaneJet j = f(x1, x2);
  const double r1 = f(-x1, x2).v, r2 = f(x1, -x2).v;
  const double m1 = p.mu1(), m2 = p.mu2();
  return -j.d11 - j.d22 - 2.0 * m1 / x1 * j.d1 - 2.0 * m2 / x2 * j.d2 + m1 / (x1 * x1) * (j.v - r1) +
         m2 / (x2 * x2) * (j.v - r2) + (x1 * x1 + x2 * x2) * j.v;
}

// (D_i + lam F_i R_i)^2 f at x by composition; each application evaluates
// the previous stage at x and at its mirror image.
double dunkl_square(const PlaneFunction& f, int i, double mu, double F, double dF, double x1, double x2) {
  const bool first = i == 1;
  const double xi = first ? x1 : x2;
  const double ym1 = first ? -x1 : x1, ym2 = first ? x2 : -x2;
  const PlaneJet j = f(x1, x2), r = f(ym1, ym2);
  const double fv = j.v, fr = r.v;
  const double f1 = first ? j.d1 : j.d2, f1r = first ? r.d1 : r.d2;
  const double f11 = first ? j.d11 : j.d22;
  // u = D f at x and at the mirror point (F is odd along x_i)
  const double u = f1 + mu / xi * (fv - fr) + F * fr;
  const double ur = f1r - mu / xi * (fr - fv) - F * fv;
  const double du = f11 - mu / (xi * xi) * (fv - fr) + mu / xi * (f1 + f1r) + dF * fr - F * f1r;
  return du + mu / xi * (u - ur) + F * ur;
}

} // namespace

double hext_projector_form(const PlaneFunction& f, const Parameters& p, const ExtensionCoupling& c, double x1,
                           double x2) {
  require_off_axis(x1, x2);
  double ext = 0.0;
  for (const SectorLabel s : kAllSectors) {
    const KTerm k = KTerm::make(p.mu1() + s.eps1, p.mu2() + s.eps2);
    ext += k(x1, x2) * projector(f, s.s1(), s.s2(), x1, x2);
  }
  return 0.5 * base_expanded(f, p, x1, x2) + c.prefactor * ext;
}

double hext_l_form(const PlaneFunction& f, const Parameters& p, const ExtensionCoupling& c, double x1,
                   double x2) {
  require_off_axis(x1, x2);
  const double d1 = dunkl_square(f, 1, p.mu1(), 0.0, 0.0, x1, x2);
  const double d2 = dunkl_square(f, 2, p.mu2(), 0.0, 0.0, x1, x2);
  const double lam = c.scale();
  const double ext = l_term(0, 0, p, x1, x2) * f(x1, x2).v + l_term(1, 0, p, x1, x2) * f(-x1, x2).v +
                     l_term(0, 1, p, x1, x2) * f(x1, -x2).v + l_term(1, 1, p, x1, x2) * f(-x1, -x2).v;
  return 0.5 * (-d1 - d2 + (x1 * x1 + x2 * x2) * f(x1, x2).v + lam * ext);
}

double hext_dunkl_form(const PlaneFunction& f, const Parameters& p, const ExtensionCoupling& c, double x1,
                       double x2) {
  require_off_axis(x1, x2);
  const double lam = c.scale();
  const double d1 = dunkl_square(f, 1, p.mu1(), lam * f_term(1, p, x1, x2),
                                 lam * f_term_derivative(1, p, x1, x2), x1, x2);
  const double d2 = dunkl_square(f, 2, p.mu2(), lam * f_term(2, p, x1, x2),
                                 lam * f_term_derivative(2, p, x1, x2), x1, x2);
  const double v = f(x1, x2).v;
  return 0.5 * (-d1 - d2 + (x1 * x1 + x2 * x2) * v + g1_term(p, c, x1, x2) * v +
                g2_term(p, c, x1, x2) * f(-x1, -x2).v);
}

} // namespace dunkl
