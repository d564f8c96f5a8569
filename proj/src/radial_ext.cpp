#include "dunkl/radial_ext.hpp"

#include "dunkl/certify.hpp"
#include "dunkl/error.hpp"
#include "dunkl/orthopoly.hpp"
#include "dunkl/quadrature.hpp"

#include <cmath>

namespace dunkl {

GFactor g_factor(const ExtensionSpec& spec, double alpha) {
  const int m = spec.m;
  if (m < 1)
    throw AdmissibilityError("extension index m must be at least 1");
  if (spec.tau == ExtensionType::III && m % 2 != 0)
    throw AdmissibilityError("type III needs an even m, got m = " + std::to_string(m));
  if (spec.tau != ExtensionType::I && !(m < alpha + 1.0))
    throw AdmissibilityError("type " + std::string(to_string(spec.tau)) + " needs m < alpha + 1 (m = " +
                             std::to_string(m) + ", alpha = " + std::to_string(alpha) + ")");
  const Rational a(alpha);
  PolyQ exact;
  switch (spec.tau) {
  case ExtensionType::I: exact = laguerre<Rational>(m, a - 1).reflected(); break;
  case ExtensionType::II: exact = laguerre<Rational>(m, -a - 1); break;
  case ExtensionType::III: exact = laguerre<Rational>(m, -a - 1).reflected(); break;
  }
  if (exact.degree() != m)
    throw SingularExtensionError("seed polynomial " + spec.str() + " loses its leading coefficient");
  PolyD poly = exact.cast<double>();
  if (certified_sign_halfline(poly) == 0)
    throw SingularExtensionError("seed polynomial " + spec.str() + " at alpha = " + std::to_string(alpha) +
                                 " may vanish on z >= 0");
  return GFactor{spec, alpha, std::move(poly), std::move(exact)};
}

double extended_potential_shift(const GFactor& g, double rho) {
  const double z = rho * rho;
  const PolyD d1 = g.poly.derivative();
  const double v = g.poly(z);
  const double r1 = d1(z) / v;
  const double r2 = d1.derivative()(z) / v;
  return -2.0 * (r1 + 2.0 * z * (r2 - r1 * r1));
}

double extended_potential(const GFactor& g, double rho) {
  return 0.5 * rho * rho + extended_potential_shift(g, rho);
}

bool admissible_k(const ExtensionSpec& spec, int k) {
  if (spec.tau == ExtensionType::III)
    return k == 0 || k >= spec.m + 1;
  return k >= spec.m;
}

namespace {

// Cleared-denominator form of the radial equation for y with f = z^n e^{-z/2} y/g:
//   z g y'' + ((alpha+1-z) g - 2 z g') y' + (z g'' + (z-alpha) g' + lambda g) y = 0,
// lambda = (E - alpha - 1)/2.
template <class T>
DenseMatrix<T> ansatz_matrix(const Polynomial<T>& g, const T& alpha, const T& lambda, int k,
                             std::vector<double>& reference) {
  const Polynomial<T> z = Polynomial<T>::linear(T(0), T(1));
  const Polynomial<T> g1 = g.derivative(), g2 = g1.derivative();
  const Polynomial<T> zg = z * g, zg1 = z * g1, zg2 = z * g2;
  const Polynomial<T> a1 = Polynomial<T>::linear(T(alpha + 1), T(-1)) * g;
  const Polynomial<T> a0 = Polynomial<T>::linear(T(-alpha), T(1)) * g1;
  const int rows = g.degree() + k + 2;
  DenseMatrix<T> a(rows, k + 1);
  for (int j = 0; j <= k; ++j) {
    std::vector<T> basis(j + 1, T(0));
    basis[j] = T(1);
    const Polynomial<T> y(basis);
    const Polynomial<T> y1 = y.derivative(), y2 = y1.derivative();
    // each term kept apart so the reference magnitude sees the cancellation
    set_column(a, reference, j, {zg * y2, a1 * y1, T(-2) * (zg1 * y1), zg2 * y, a0 * y, lambda * (g * y)});
  }
  return a;
}

// 1/2 int z^alpha e^{-z} (y/g)^2 dz
double weighted_norm2(const PolyD& y, const PolyD& g, double alpha) {
  const int nodes = 4 * (y.degree() + g.degree()) + 40;
  return 0.5 * integrate_converged(WeightFamily::laguerre(alpha), [&](double z) {
                 const double r = y(z) / g(z);
                 return r * r;
               }, nodes).value;
}

} // namespace

ExceptionalPolynomial xm_laguerre(const ExtensionSpec& spec, int k, double alpha, NullspaceMethod method,
                                  double energy_offset) {
  if (!admissible_k(spec, k))
    throw AdmissibilityError("k = " + std::to_string(k) + " is outside the admissible range of " +
                             spec.str());
  const GFactor g = g_factor(spec, alpha);
  ExceptionalPolynomial out;
  PolyD y;
  if (method == NullspaceMethod::Exact) {
    const Rational lambda = Rational(k - spec.m) + Rational(energy_offset) / 2;
    std::vector<double> ref;
    auto x = exact_kernel_vector(ansatz_matrix<Rational>(g.exact, Rational(alpha), lambda, k, ref), out.cert);
    if (sgn(x[k]) == 0)
      throw ConstructionError("kernel polynomial has degree below " + std::to_string(k));
    const Rational lead = x[k];
    for (auto& v : x)
      v /= lead;
    y = PolyQ(std::move(x)).cast<double>();
  } else {
    const double lambda = (k - spec.m) + 0.5 * energy_offset;
    std::vector<double> ref;
    const auto m = ansatz_matrix<double>(g.poly, alpha, lambda, k, ref);
    auto x = floating_kernel_vector(m, out.cert, ref);
    if (x[k] == 0.0)
      throw ConstructionError("kernel polynomial has degree below " + std::to_string(k));
    const double lead = x[k];
    for (auto& v : x)
      v /= lead;
    y = PolyD(std::move(x));
  }
  if (y.degree() != k)
    throw ConstructionError("kernel polynomial has degree below " + std::to_string(k));
  out.poly = y * (1.0 / std::sqrt(weighted_norm2(y, g.poly, alpha)));
  return out;
}

ExtendedRadialState extended_radial_state(const ExtensionSpec& spec, int k, HalfInt n, const Parameters& p) {
  if (n.twice < 0)
    throw DomainError("n must be nonnegative");
  const double a = alpha(n, p);
  const int m = spec.m;
  ExceptionalPolynomial eop = xm_laguerre(spec, k, a);

  // log |leading coefficient| the closed-form constant refers to, and log N^2
  double log_lead = 0.0, log_n2 = 0.0;
  const double ln2 = std::log(2.0);
  switch (spec.tau) {
  case ExtensionType::I:
    log_lead = -log_factorial(m) - log_factorial(k - m);
    log_n2 = ln2 + log_factorial(k - m) - std::log(k + a) - log_gamma(k + a - m);
    break;
  case ExtensionType::II:
    log_lead = std::log(k + a + 1.0 - 2 * m) - log_factorial(m) - log_factorial(k - m);
    log_n2 = ln2 + log_factorial(k - m) - std::log(k + a + 1.0 - 2 * m) - log_gamma(k + a + 2.0 - m);
    break;
  case ExtensionType::III:
    if (k == 0) {
      log_lead = 0.0;
      log_n2 = ln2 - log_gamma(a + 1.0 - m) - log_factorial(m);
    } else {
      log_lead = -log_factorial(m) - log_factorial(k - m - 1);
      log_n2 = ln2 + log_factorial(k - m - 1) - std::log(static_cast<double>(k)) - log_gamma(k + a + 1.0 - m);
    }
    break;
  }
  const double big_n = std::exp(0.5 * log_n2);
  PolyD num = eop.poly * (std::exp(log_lead) / eop.poly.leading());
  const GFactor g = g_factor(spec, a);
  ExtendedRadialState st{spec, n, k,
                         RadialForm::make(big_n, static_cast<double>(n.twice), true, std::move(num), g.poly),
                         level_energy(2 * k - 2 * m + n.twice, p), big_n, eop.cert};
  return st;
}

std::vector<int> extended_level_keys(const ExtensionSpec& spec, HalfInt n, int kmax) {
  std::vector<int> keys;
  for (int k = 0; k <= kmax; ++k)
    if (admissible_k(spec, k))
      keys.push_back(2 * k - 2 * spec.m + n.twice);
  return keys;
}

double radial_inner(const RadialForm& f, const RadialForm& g, const Parameters& p, int nodes) {
  return radial_inner_converged(f, g, p, nodes).value;
}

ConvergedIntegral radial_inner_converged(const RadialForm& f, const RadialForm& g, const Parameters& p,
                                         int nodes) {
  if (!f.gauss() || !g.gauss())
    throw DomainError("radial inner product needs Gaussian-damped forms");
  const double aw = 0.5 * (f.power() + g.power()) + p.sum();
  if (nodes <= 0)
    nodes = 4 * (f.num().degree() + g.num().degree() + f.den().degree() + g.den().degree()) + 40;
  // rho^{sf+sg} e^{-rho^2} rho^{2s+1} drho = 1/2 z^aw e^{-z} dz
  const double c = 0.5 * f.scale() * g.scale();
  // absolute target: the entries are O(1) for normalized states
  auto r = integrate_converged(WeightFamily::laguerre(aw), [&](double z) {
    return c * f.num()(z) * g.num()(z) / (f.den()(z) * g.den()(z));
  }, nodes, 1e-14, 1.0);
  return r;
}

} // namespace dunkl
