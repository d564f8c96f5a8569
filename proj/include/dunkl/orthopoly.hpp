#ifndef DUNKL_ORTHOPOLY_HPP
#define DUNKL_ORTHOPOLY_HPP

#include "dunkl/error.hpp"
#include "dunkl/polynomial.hpp"

namespace dunkl {

/// Generalized Laguerre polynomial L_k^{(alpha)}(z) from the three-term
/// recurrence. Any real alpha is accepted; the degree is always k.
template <class T>
Polynomial<T> laguerre(int k, const T& alpha) {
  if (k < 0)
    throw DomainError("Laguerre degree must be nonnegative");
  Polynomial<T> prev = Polynomial<T>::constant(T(1));
  if (k == 0)
    return prev;
  Polynomial<T> cur = Polynomial<T>::linear(T(alpha + 1), T(-1));
  const Polynomial<T> z = Polynomial<T>::linear(T(0), T(1));
  for (int j = 1; j < k; ++j) {
    // (j+1) L_{j+1} = (2j+1+alpha-z) L_j - (j+alpha) L_{j-1}
    Polynomial<T> next = Polynomial<T>::constant(T(2 * j + 1 + alpha)) * cur - z * cur -
                         T(j + alpha) * prev;
    next *= T(1) / T(j + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Jacobi polynomial P_nu^{(a,b)}(t); requires a, b > -1.
template <class T>
Polynomial<T> jacobi(int nu, const T& a, const T& b) {
  if (nu < 0)
    throw DomainError("Jacobi degree must be nonnegative");
  if (a <= T(-1) || b <= T(-1))
    throw DomainError("Jacobi parameters must satisfy a, b > -1");
  Polynomial<T> prev = Polynomial<T>::constant(T(1));
  if (nu == 0)
    return prev;
  Polynomial<T> cur = Polynomial<T>::linear(T((a - b) / 2), T((a + b + 2) / 2));
  const Polynomial<T> t = Polynomial<T>::linear(T(0), T(1));
  for (int n = 2; n <= nu; ++n) {
    const T ab = a + b;
    const T c0 = T(2 * n) * T(n + ab) * T(2 * n + ab - 2);
    const T c1 = T(2 * n + ab - 1);
    const T lin = T(2 * n + ab) * T(2 * n + ab - 2);
    const T cst = T(a * a - b * b);
    const T c2 = T(2) * T(n + a - 1) * T(n + b - 1) * T(2 * n + ab);
    Polynomial<T> next = c1 * (lin * (t * cur) + cst * cur) - c2 * prev;
    next *= T(1) / c0;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// ln k!
double log_factorial(int k);

} // namespace dunkl

#endif
