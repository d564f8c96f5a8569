// Reference computations for the tests. Nothing here calls into the
// library's quadrature or polynomial code.
#ifndef DUNKL_TESTS_ORACLES_HPP
#define DUNKL_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace oracle {

// tanh-sinh on [a, b]. f receives (x, x - a, b - x) so integrands with
// endpoint singularities can use the accurate distances.
template <class F>
double tanh_sinh(F&& f, double a, double b, double rtol = 1e-14, int max_level = 10) {
  const double half = 0.5 * (b - a);
  const double pi2 = 0.5 * std::numbers::pi;
  const double tmax = 3.6;
  auto term = [&](double t) {
    const double u = pi2 * std::sinh(t);
    const double e = std::exp(-2.0 * std::abs(u));
    // distance to the nearer endpoint, relative to the half-width
    const double near = 2.0 * e / (1.0 + e);
    const double far = 2.0 - near;
    const double dlo = half * (u < 0 ? near : far);
    const double dhi = half * (u < 0 ? far : near);
    const double sech = 2.0 * std::sqrt(e) / (1.0 + e);
    const double w = half * pi2 * std::cosh(t) * sech * sech;
    if (w == 0.0 || dlo <= 0.0 || dhi <= 0.0)
      return 0.0;
    return w * f(a + dlo, dlo, dhi);
  };
  double h = 0.5;
  double sum = term(0.0);
  for (double t = h; t <= tmax; t += h)
    sum += term(t) + term(-t);
  double prev = sum * h;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    for (double t = h; t <= tmax; t += 2 * h)
      sum += term(t) + term(-t);
    const double cur = sum * h;
    if (std::abs(cur - prev) <= rtol * std::max(1.0, std::abs(cur)) && level >= 3)
      return cur;
    prev = cur;
  }
  return prev;
}

// generalized binomial C(x, j)
inline double binom(double x, int j) {
  double r = 1.0;
  for (int i = 0; i < j; ++i)
    r *= (x - i) / (i + 1);
  return r;
}

// L_k^a(z) = sum_j C(k+a, k-j) (-z)^j / j!
inline double laguerre_series(int k, double a, double z) {
  double s = 0.0, fact = 1.0;
  for (int j = 0; j <= k; ++j) {
    if (j > 0)
      fact *= j;
    s += binom(k + a, k - j) * std::pow(-z, j) / fact;
  }
  return s;
}

// sum of the absolute series terms, to bound cancellation error
inline double laguerre_series_abs(int k, double a, double z) {
  double s = 0.0, fact = 1.0;
  for (int j = 0; j <= k; ++j) {
    if (j > 0)
      fact *= j;
    s += std::abs(binom(k + a, k - j)) * std::pow(std::abs(z), j) / fact;
  }
  return s;
}

// P_n^{(a,b)}(t) = sum_s C(n+a, n-s) C(n+b, s) ((t-1)/2)^s ((t+1)/2)^{n-s}
inline double jacobi_series(int n, double a, double b, double t) {
  double s = 0.0;
  for (int j = 0; j <= n; ++j)
    s += binom(n + a, n - j) * binom(n + b, j) * std::pow(0.5 * (t - 1), j) * std::pow(0.5 * (t + 1), n - j);
  return s;
}

// second derivative by 4th-order differences at h and h/2, Richardson-combined
template <class F>
double second_derivative(F&& f, double x, double h = 1e-2) {
  auto d2 = [&](double s) {
    return (-f(x + 2 * s) + 16 * f(x + s) - 30 * f(x) + 16 * f(x - s) - f(x - 2 * s)) / (12 * s * s);
  };
  return (16 * d2(0.5 * h) - d2(h)) / 15;
}

template <class F>
double first_derivative(F&& f, double x, double h = 1e-2) {
  auto d1 = [&](double s) { return (-f(x + 2 * s) + 8 * f(x + s) - 8 * f(x - s) + f(x - 2 * s)) / (12 * s); };
  return (16 * d1(0.5 * h) - d1(h)) / 15;
}

}  // namespace oracle

#endif
