#ifndef DUNKL_POLYNOMIAL_HPP
#define DUNKL_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <type_traits>
#include <utility>
#include <vector>

namespace dunkl {

using Rational = mpq_class;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.get_d(); }

/// Exact conversion: every finite double is a dyadic rational.
template <class T>
T from_double(double x) {
  if constexpr (std::is_same_v<T, Rational>)
    return Rational(x);
  else
    return static_cast<T>(x);
}

template <class X, class T>
X scalar_as(const T& v) {
  if constexpr (std::is_same_v<X, T>)
    return v;
  else if constexpr (std::is_same_v<X, double>)
    return to_double(v);
  else
    return X(v);
}

/// Dense univariate polynomial, coefficients in ascending degree.
/// The leading coefficient is nonzero unless the polynomial is zero.
template <class T>
class Polynomial {
public:
  using scalar_type = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(T v) { return Polynomial(std::vector<T>{std::move(v)}); }
  /// a + b z
  static Polynomial linear(T a, T b) { return Polynomial(std::vector<T>{std::move(a), std::move(b)}); }

  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : T(0);
  }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  template <class X>
  X operator()(const X& x) const {
    X acc = X(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * x + scalar_as<X>(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1)
      return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      d[i - 1] = c_[i] * T(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  /// p(-z)
  Polynomial reflected() const {
    std::vector<T> r = c_;
    for (std::size_t i = 1; i < r.size(); i += 2)
      r[i] = -r[i];
    return Polynomial(std::move(r));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& v : c_)
      v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= T(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  template <class U>
  Polynomial<U> cast() const {
    std::vector<U> r;
    r.reserve(c_.size());
    for (const auto& v : c_)
      r.push_back(scalar_as<U>(v));
    return Polynomial<U>(std::move(r));
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0))
      c_.pop_back();
  }

  std::vector<T> c_;
};

using PolyD = Polynomial<double>;
using PolyQ = Polynomial<Rational>;

} // namespace dunkl

#endif
