#include "dunkl/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

namespace dunkl {

namespace {

// Taylor coefficients of p about c, by repeated synthetic division.
std::vector<double> taylor_shift(const std::vector<double>& a, double c) {
  std::vector<double> b = a;
  const std::size_t n = b.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j)
      b[j - 1] += c * b[j];
  return b;
}

double magnitude_at(const std::vector<double>& a, double x) {
  double acc = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it)
    acc = acc * std::abs(x) + std::abs(*it);
  return acc;
}

// +1/-1 if the sign of p is certified on [lo, hi], 0 otherwise.
int interval_sign(const std::vector<double>& a, double lo, double hi) {
  const double c = 0.5 * (lo + hi);
  const double r = 0.5 * (hi - lo);
  const auto t = taylor_shift(a, c);
  double bound = 0.0;
  double rp = 1.0;
  for (std::size_t j = 1; j < t.size(); ++j) {
    rp *= r;
    bound += std::abs(t[j]) * rp;
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double slack =
      4.0 * eps * static_cast<double>(a.size() + 2) * a.size() * magnitude_at(a, std::abs(c) + r);
  if (std::abs(t[0]) > bound + slack)
    return t[0] > 0 ? 1 : -1;
  return 0;
}

} // namespace

double cauchy_root_bound(const PolyD& p) {
  if (p.degree() <= 0)
    return 0.0;
  const auto& a = p.coeffs();
  const double lead = std::abs(a.back());
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    m = std::max(m, std::abs(a[i]) / lead);
  return 1.0 + m;
}

int certified_sign(const PolyD& p, double lo, double hi) {
  if (p.is_zero())
    return 0;
  if (p.degree() == 0)
    return p.leading() > 0 ? 1 : -1;
  const auto& a = p.coeffs();
  int sign = 0;
  std::vector<std::pair<double, double>> stack{{lo, hi}};
  while (!stack.empty()) {
    auto [l, h] = stack.back();
    stack.pop_back();
    const int s = interval_sign(a, l, h);
    if (s != 0) {
      if (sign == 0)
        sign = s;
      else if (s != sign)
        return 0;
      continue;
    }
    if (h - l < kCertifyMinWidth)
      return 0;
    const double mid = 0.5 * (l + h);
    stack.emplace_back(mid, h);
    stack.emplace_back(l, mid);
  }
  return sign;
}

int certified_sign_halfline(const PolyD& p) {
  if (p.is_zero())
    return 0;
  const int lead_sign = p.leading() > 0 ? 1 : -1;
  if (p.degree() == 0)
    return lead_sign;
  const double zstar = cauchy_root_bound(p);
  const int s = certified_sign(p, 0.0, zstar);
  return s == lead_sign ? s : 0;
}

} // namespace dunkl
