#include "dunkl/quadrature.hpp"

#include "dunkl/error.hpp"
#include "dunkl/orthopoly.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <sstream>

namespace dunkl {

namespace {

struct Recurrence {
  std::vector<double> a;     // diagonal
  std::vector<double> sqb;   // sqrt of b_k, k = 1..n (index k)
  double mu0 = 1.0;
};

Recurrence make_recurrence(const WeightFamily& fam, int n) {
  Recurrence r;
  r.a.resize(n);
  r.sqb.assign(n + 1, 0.0);
  r.mu0 = fam.total_mass();
  if (fam.kind == WeightFamily::Kind::Laguerre) {
    const double al = fam.p1;
    for (int k = 0; k < n; ++k)
      r.a[k] = 2.0 * k + al + 1.0;
    for (int k = 1; k <= n; ++k)
      r.sqb[k] = std::sqrt(k * (k + al));
  } else {
    const double a = fam.p1, b = fam.p2, ab = a + b;
    for (int k = 0; k < n; ++k) {
      const double d = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
      r.a[k] = (k == 0) ? (b - a) / (ab + 2.0) : (b * b - a * a) / d;
    }
    for (int k = 1; k <= n; ++k) {
      double bk;
      if (k == 1)
        bk = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
      else {
        const double s = 2.0 * k + ab;
        bk = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
      }
      r.sqb[k] = std::sqrt(bk);
    }
  }
  return r;
}

// q_n(x) / q_n'(x) for the orthonormal family, rescaled against overflow.
double newton_ratio(const Recurrence& r, int n, double x) {
  double qm = 0.0, q = 1.0, dqm = 0.0, dq = 0.0;
  for (int j = 0; j < n; ++j) {
    const double qn = ((x - r.a[j]) * q - r.sqb[j] * qm) / r.sqb[j + 1];
    const double dqn = ((x - r.a[j]) * dq + q - r.sqb[j] * dqm) / r.sqb[j + 1];
    qm = q;
    q = qn;
    dqm = dq;
    dq = dqn;
    const double big = std::max(std::abs(q), std::abs(dq));
    if (big > 1e100) {
      qm /= big;
      q /= big;
      dqm /= big;
      dq /= big;
    }
  }
  return q / dq;
}

double christoffel_weight(const Recurrence& r, int n, double x) {
  double qm = 0.0, q = 1.0 / std::sqrt(r.mu0);
  double sum = q * q;
  for (int j = 0; j + 1 < n; ++j) {
    const double qn = ((x - r.a[j]) * q - r.sqb[j] * qm) / r.sqb[j + 1];
    qm = q;
    q = qn;
    sum += q * q;
  }
  return std::isfinite(sum) ? 1.0 / sum : 0.0;
}

} // namespace

double WeightFamily::total_mass() const {
  if (kind == Kind::Laguerre)
    return std::exp(log_gamma(p1 + 1.0));
  return std::exp((p1 + p2 + 1.0) * std::log(2.0) + log_gamma(p1 + 1.0) + log_gamma(p2 + 1.0) -
                  log_gamma(p1 + p2 + 2.0));
}

std::string WeightFamily::str() const {
  std::ostringstream os;
  os.precision(17);
  if (kind == Kind::Laguerre)
    os << "laguerre(" << p1 << ")";
  else
    os << "jacobi(" << p1 << "," << p2 << ")";
  return os.str();
}

QuadratureRule gauss_rule(const WeightFamily& family, int n) {
  if (n < 1)
    throw DomainError("a Gauss rule needs at least one node");
  if (!(family.p1 > -1.0) || (family.kind == WeightFamily::Kind::Jacobi && !(family.p2 > -1.0)))
    throw DomainError("weight parameters must exceed -1");
  const Recurrence r = make_recurrence(family, n);

  Eigen::VectorXd diag(n), sub(n > 1 ? n - 1 : 0);
  for (int k = 0; k < n; ++k)
    diag[k] = r.a[k];
  for (int k = 1; k < n; ++k)
    sub[k - 1] = r.sqb[k];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw ConstructionError("tridiagonal eigensolver failed for " + family.str());

  QuadratureRule rule;
  rule.family = family;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()[i];
    for (int it = 0; it < 3; ++it) {
      const double step = newton_ratio(r, n, x);
      // the eigenvalue is already close; a large step means a bad polish
      if (!std::isfinite(step) || std::abs(step) > 1e-8 * (1.0 + std::abs(x)))
        break;
      x -= step;
    }
    rule.nodes[i] = x;
    rule.weights[i] = christoffel_weight(r, n, x);
  }
  return rule;
}

const QuadratureRule& cached_gauss_rule(const WeightFamily& family, int n) {
  using Key = std::tuple<int, double, double, int>;
  static std::mutex mu;
  static std::map<Key, std::unique_ptr<QuadratureRule>> cache;
  const Key key{static_cast<int>(family.kind), family.p1, family.p2, n};
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end())
      return *it->second;
  }
  auto rule = std::make_unique<QuadratureRule>(gauss_rule(family, n));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(rule));
  return *it->second;
}

} // namespace dunkl
