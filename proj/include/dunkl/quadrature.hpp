#ifndef DUNKL_QUADRATURE_HPP
#define DUNKL_QUADRATURE_HPP

#include <string>
#include <vector>

namespace dunkl {

/// Weight families for Gauss rules:
///   Laguerre(alpha): z^alpha e^{-z} on (0, inf)
///   Jacobi(a, b):    (1-t)^a (1+t)^b on (-1, 1)
struct WeightFamily {
  enum class Kind { Laguerre, Jacobi };
  Kind kind = Kind::Laguerre;
  double p1 = 0.0;
  double p2 = 0.0;

  static WeightFamily laguerre(double alpha) { return {Kind::Laguerre, alpha, 0.0}; }
  static WeightFamily jacobi(double a, double b) { return {Kind::Jacobi, a, b}; }

  /// Integral of the weight over its support.
  double total_mass() const;
  std::string str() const;
};

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  WeightFamily family;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

/// N-point Gauss rule (Golub-Welsch). Nodes come from the eigenvalues of the
/// Jacobi matrix, polished by Newton on the orthonormal recurrence; weights
/// are Christoffel numbers 1 / sum_j q_j(x_i)^2, which keeps the tiny
/// Laguerre tail weights accurate in the relative sense.
QuadratureRule gauss_rule(const WeightFamily& family, int n);

/// Same rule, built once per (family, n) and shared afterwards.
const QuadratureRule& cached_gauss_rule(const WeightFamily& family, int n);

struct ConvergedIntegral {
  double value = 0.0;
  int nodes = 0;      // size of the rule whose value is reported
  double change = 0.0;  // |I(nodes) - I(nodes/2)|
};

/// Doubles the rule size from n0 until two successive values agree to rtol
/// (relative to scale, or to the value if scale is 0). Rational integrands
/// with poles close to the support converge slowly, so the fixed
/// oversampling alone is not enough.
template <class F>
ConvergedIntegral integrate_converged(const WeightFamily& family, F&& f, int n0, double rtol = 1e-14,
                                      double scale = 0.0, int nmax = 3200) {
  ConvergedIntegral r;
  r.nodes = n0;
  r.value = cached_gauss_rule(family, n0).integrate(f);
  while (2 * r.nodes <= nmax) {
    const double next = cached_gauss_rule(family, 2 * r.nodes).integrate(f);
    r.change = next > r.value ? next - r.value : r.value - next;
    r.nodes *= 2;
    r.value = next;
    const double ref = scale > 0.0 ? scale : (next < 0 ? -next : next);
    if (r.change <= rtol * ref)
      break;
  }
  return r;
}

} // namespace dunkl

#endif
