#include "dunkl/verify.hpp"

#include "dunkl/error.hpp"

#include <json.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace dunkl {

VerificationReport make_report(std::string check, double deviation, double tolerance, std::uint64_t seed,
                               int nodes) {
  VerificationReport r;
  r.check = std::move(check);
  r.deviation = deviation;
  r.tolerance = tolerance;
  r.pass = std::isfinite(deviation) && deviation <= tolerance;
  r.seed = seed;
  r.nodes = nodes;
  return r;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports, int indent) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.labels)
      params[k] = v;
    for (const auto& [k, v] : r.numbers)
      params[k] = v;
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["params"] = params;
    // NaN is not valid JSON
    if (std::isfinite(r.deviation))
      j["deviation"] = r.deviation;
    else
      j["deviation"] = nullptr;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    j["seed"] = r.seed;
    j["nodes"] = r.nodes;
    arr.push_back(std::move(j));
  }
  return arr.dump(indent);
}

// ---- samples ----

namespace {

double radical_inverse(std::uint64_t i, unsigned base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

double uniform01(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

} // namespace

std::vector<double> radial_samples(std::uint64_t seed, int count) {
  std::vector<double> out;
  out.reserve(count);
  for (int j = 0; j < count; ++j)
    out.push_back(0.05 + 4.95 * radical_inverse(seed + j + 1, 2));
  return out;
}

std::vector<double> angular_samples(std::uint64_t seed, int count) {
  std::vector<double> out;
  const double quarter = 0.5 * std::numbers::pi;
  for (std::uint64_t i = seed + 1; static_cast<int>(out.size()) < count; ++i) {
    const double phi = 2.0 * std::numbers::pi * radical_inverse(i, 3);
    const double off = phi - quarter * std::round(phi / quarter);
    if (std::abs(off) >= 0.05)
      out.push_back(phi);
  }
  return out;
}

std::vector<std::pair<double, double>> plane_samples(std::uint64_t seed, int count, double min_abs, double extent) {
  std::vector<std::pair<double, double>> out;
  for (std::uint64_t i = seed + 1; static_cast<int>(out.size()) < count; ++i) {
    const double x1 = extent * (2.0 * radical_inverse(i, 2) - 1.0);
    const double x2 = extent * (2.0 * radical_inverse(i, 3) - 1.0);
    if (std::abs(x1) >= min_abs && std::abs(x2) >= min_abs)
      out.emplace_back(x1, x2);
  }
  return out;
}

// ---- residuals ----

double radial_residual(const RadialForm& f, const Parameters& p, double msq, const PointFunction& extra,
                       double energy, const std::vector<double>& rhos) {
  double worst = 0.0;
  for (double rho : rhos) {
    const double v = apply_radial_operator(f, p, msq, extra, rho);
    const double fv = eval_radial(f, rho, 0);
    worst = std::max(worst, std::abs(v - energy * fv) / std::max(std::abs(fv), kResidualFloor));
  }
  return worst;
}

double angular_residual(const AngularForm& g, const Parameters& p, SectorLabel sector, const PointFunction& extra,
                        double eigenvalue, const std::vector<double>& phis) {
  double worst = 0.0;
  for (double phi : phis) {
    const double v = apply_angular_operator(g, p, sector, extra, phi);
    const double gv = eval_angular(g, phi, 0);
    worst = std::max(worst, std::abs(v - eigenvalue * gv) / std::max(std::abs(gv), kResidualFloor));
  }
  return worst;
}

// ---- Gram matrices ----

ConvergedIntegral angular_inner_converged(const AngularForm& f, const AngularForm& g, const Parameters& p,
                                          int nodes) {
  const double P = f.cos_power() + g.cos_power(), Q = f.sin_power() + g.sin_power();
  auto odd_integer = [](double e) { return std::floor(e) == e && std::fmod(std::abs(e), 2.0) == 1.0; };
  // odd in cos (or sin) over the full circle
  if (odd_integer(P) || odd_integer(Q))
    return ConvergedIntegral{0.0, 0, 0.0};
  const double pp = p.mu1() + 0.5 * P, qq = p.mu2() + 0.5 * Q;
  if (nodes <= 0)
    nodes = 4 * (f.num().degree() + g.num().degree() + f.den().degree() + g.den().degree()) + 40;
  // 4 quadrants, cos^2 = (1-t)/2, sin^2 = (1+t)/2, dphi = dt / (4 cos sin)
  const double c = std::exp2(1.0 - pp - qq) * f.scale() * g.scale();
  return integrate_converged(WeightFamily::jacobi(pp - 0.5, qq - 0.5), [&](double t) {
    return c * f.num()(t) * g.num()(t) / (f.den()(t) * g.den()(t));
  }, nodes, 1e-14, 1.0);
}

double angular_inner(const AngularForm& f, const AngularForm& g, const Parameters& p) {
  return angular_inner_converged(f, g, p).value;
}

namespace {

template <class Form, class Inner>
GramResult gram(const std::vector<Form>& forms, Inner&& inner) {
  GramResult r;
  const int n = static_cast<int>(forms.size());
  r.matrix.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const ConvergedIntegral ci = inner(forms[i], forms[j]);
      r.matrix(i, j) = r.matrix(j, i) = ci.value;
      r.nodes = std::max(r.nodes, ci.nodes);
      r.doubling_change = std::max(r.doubling_change, ci.change);
    }
  return r;
}

} // namespace

GramResult radial_gram(const std::vector<RadialForm>& forms, const Parameters& p) {
  return gram(forms, [&](const RadialForm& a, const RadialForm& b) { return radial_inner_converged(a, b, p); });
}

GramResult angular_gram(const std::vector<AngularForm>& forms, const Parameters& p) {
  return gram(forms, [&](const AngularForm& a, const AngularForm& b) { return angular_inner_converged(a, b, p); });
}

double identity_deviation(const Eigen::MatrixXd& m) {
  return (m - Eigen::MatrixXd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

// ---- finite differences ----

double fd_cartesian_hamiltonian(const PlanePoint& psi, const Parameters& p,
                                const std::optional<ExtensionCoupling>& ext, double x1, double x2, double h) {
  if (!(std::abs(x1) > 2.0 * h) || !(std::abs(x2) > 2.0 * h))
    throw StencilDomainError("finite-difference stencil at (" + std::to_string(x1) + ", " + std::to_string(x2) +
                             ") with h = " + std::to_string(h) + " reaches a coordinate axis");
  const double f0 = psi(x1, x2);
  const double a1 = psi(x1 + h, x2), a2 = psi(x1 + 2 * h, x2), b1 = psi(x1 - h, x2), b2 = psi(x1 - 2 * h, x2);
  const double c1 = psi(x1, x2 + h), c2 = psi(x1, x2 + 2 * h), e1 = psi(x1, x2 - h), e2 = psi(x1, x2 - 2 * h);
  const double d11 = (-a2 + 16 * a1 - 30 * f0 + 16 * b1 - b2) / (12 * h * h);
  const double d22 = (-c2 + 16 * c1 - 30 * f0 + 16 * e1 - e2) / (12 * h * h);
  const double d1 = (-a2 + 8 * a1 - 8 * b1 + b2) / (12 * h);
  const double d2 = (-c2 + 8 * c1 - 8 * e1 + e2) / (12 * h);
  const double r1 = psi(-x1, x2), r2 = psi(x1, -x2);
  const double m1 = p.mu1(), m2 = p.mu2();
  double hv = 0.5 * (-d11 - d22 - 2 * m1 / x1 * d1 - 2 * m2 / x2 * d2 + m1 / (x1 * x1) * (f0 - r1) +
                     m2 / (x2 * x2) * (f0 - r2) + (x1 * x1 + x2 * x2) * f0);
  if (ext) {
    const double r12 = psi(-x1, -x2);
    for (const SectorLabel s : kAllSectors) {
      const KTerm k = KTerm::make(m1 + s.eps1, m2 + s.eps2);
      hv += ext->prefactor * k(x1, x2) * (f0 + s.s1() * r1 + s.s2() * r2 + s.s1() * s.s2() * r12);
    }
  }
  return hv;
}

double fd_cartesian_richardson(const PlanePoint& psi, const Parameters& p,
                               const std::optional<ExtensionCoupling>& ext, double x1, double x2, double h) {
  const double coarse = fd_cartesian_hamiltonian(psi, p, ext, x1, x2, h);
  const double fine = fd_cartesian_hamiltonian(psi, p, ext, x1, x2, 0.5 * h);
  return (16.0 * fine - coarse) / 15.0;
}

double fd_convergence_order(const PlanePoint& psi, const Parameters& p, const std::optional<ExtensionCoupling>& ext,
                            double energy, const std::vector<std::pair<double, double>>& points) {
  const double hs[3] = {0.08, 0.04, 0.02};
  double lx[3], ly[3];
  for (int i = 0; i < 3; ++i) {
    double err = 0.0;
    for (const auto& [x1, x2] : points)
      err += std::abs(fd_cartesian_hamiltonian(psi, p, ext, x1, x2, hs[i]) - energy * psi(x1, x2));
    lx[i] = std::log(hs[i]);
    ly[i] = std::log(err);
  }
  const double mx = (lx[0] + lx[1] + lx[2]) / 3, my = (ly[0] + ly[1] + ly[2]) / 3;
  double sxy = 0, sxx = 0;
  for (int i = 0; i < 3; ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  return sxy / sxx;
}

// ---- grid oracle ----

namespace {

std::vector<double> grid_eigenvalues(const PointFunction& v, double alpha, int n, double rho_max, int count) {
  const double h = rho_max / (n + 1);
  const double cent = 0.5 * (alpha - 0.5) * (alpha + 0.5);
  Eigen::VectorXd diag(n), sub(n - 1);
  for (int i = 0; i < n; ++i) {
    const double rho = (i + 1) * h;
    diag[i] = 1.0 / (h * h) + cent / (rho * rho) + v(rho);
  }
  sub.setConstant(-0.5 / (h * h));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw ConstructionError("grid eigensolver failed");
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i)
    out[i] = es.eigenvalues()[i];
  return out;
}

} // namespace

GridSpectrum grid_spectrum_oracle(const PointFunction& potential, const Parameters& p, HalfInt n, int count,
                                  double rho_max, int points) {
  if (points < 7 || points % 2 == 0)
    throw DomainError("grid oracle needs an odd number of interior points");
  const double a = alpha(n, p);
  const int coarse_n = (points + 1) / 2 - 1;
  const auto fine = grid_eigenvalues(potential, a, points, rho_max, count);
  const auto coarse = grid_eigenvalues(potential, a, coarse_n, rho_max, count);
  GridSpectrum g;
  g.points = points;
  g.rho_max = rho_max;
  for (int i = 0; i < count; ++i)
    g.values.push_back((4.0 * fine[i] - coarse[i]) / 3.0);
  return g;
}

// ---- test functions ----

PlaneJet TestFunction::operator()(double x, double y) const {
  const double q = -0.5 * (a * x * x + b * y * y) + c * x + d * y;
  const double e = std::exp(q);
  const double qx = -a * x + c, qy = -b * y + d;
  const double* k = coef;
  const double P = k[0] + k[1] * x + k[2] * y + k[3] * x * x + k[4] * x * y + k[5] * y * y + k[6] * x * x * x +
                   k[7] * x * x * y + k[8] * x * y * y + k[9] * y * y * y;
  const double Px = k[1] + 2 * k[3] * x + k[4] * y + 3 * k[6] * x * x + 2 * k[7] * x * y + k[8] * y * y;
  const double Py = k[2] + k[4] * x + 2 * k[5] * y + k[7] * x * x + 2 * k[8] * x * y + 3 * k[9] * y * y;
  const double Pxx = 2 * k[3] + 6 * k[6] * x + 2 * k[7] * y;
  const double Pyy = 2 * k[5] + 2 * k[8] * x + 6 * k[9] * y;
  PlaneJet j;
  j.v = e * P;
  j.d1 = e * (qx * P + Px);
  j.d2 = e * (qy * P + Py);
  j.d11 = e * ((qx * qx - a) * P + 2 * qx * Px + Pxx);
  j.d22 = e * ((qy * qy - b) * P + 2 * qy * Py + Pyy);
  return j;
}

std::vector<TestFunction> test_battery(std::uint64_t seed, int count) {
  std::mt19937_64 gen(seed);
  std::vector<TestFunction> out;
  for (int i = 0; i < count; ++i) {
    TestFunction t{};
    t.a = 0.6 + 0.8 * uniform01(gen);
    t.b = 0.6 + 0.8 * uniform01(gen);
    t.c = 0.8 * uniform01(gen) - 0.4;
    t.d = 0.8 * uniform01(gen) - 0.4;
    for (double& v : t.coef)
      v = 2.0 * uniform01(gen) - 1.0;
    out.push_back(t);
  }
  return out;
}

// ---- prefactor resolution ----

PrefactorResolution resolve_angular_prefactor(const Parameters& p, std::uint64_t seed, int n_max_twice) {
  check_angular_extension(p);
  PrefactorResolution r;
  const auto phis = angular_samples(seed, 40);
  r.samples = static_cast<int>(phis.size());
  const ExtensionCoupling half{0.5}, one{1.0};
  for (const SectorLabel s : kAllSectors)
    for (int t = min_n(s).twice; t <= n_max_twice; t += 2) {
      const auto st = extended_angular_state(s, HalfInt::from_twice(t), p);
      const double eig = 0.5 * st.msq;
      r.residual_half = std::max(r.residual_half, angular_residual(st.form, p, s, angular_extension_potential(s, p, half), eig, phis));
      r.residual_one = std::max(r.residual_one, angular_residual(st.form, p, s, angular_extension_potential(s, p, one), eig, phis));
      ++r.states;
    }
  const double lo = std::max(std::min(r.residual_half, r.residual_one), 1e-300);
  const double hi = std::max(r.residual_half, r.residual_one);
  r.adopted = r.residual_one <= r.residual_half ? 1.0 : 0.5;
  r.gap_orders = std::log10(hi / lo);
  return r;
}

// ---- suite ----

namespace {

struct Suite {
  const SuiteConfig& cfg;
  Parameters p;
  std::vector<VerificationReport> out;

  double tol(double def) const { return cfg.tolerance.value_or(def); }

  VerificationReport& add(std::string check, double dev, double def_tol, int nodes) {
    out.push_back(make_report(std::move(check), dev, tol(def_tol), cfg.seed, nodes));
    auto& r = out.back();
    r.numbers.emplace_back("mu1", p.mu1());
    r.numbers.emplace_back("mu2", p.mu2());
    return r;
  }

  void base_checks();
  void extension_checks(const ExtensionSpec& spec);
  void angular_checks();
};

void Suite::base_checks() {
  // angular Gram over every sector, n <= 3
  std::vector<AngularForm> ang;
  for (const SectorLabel s : kAllSectors)
    for (int t = min_n(s).twice; t <= 6; t += 2)
      ang.push_back(angular_state(s, HalfInt::from_twice(t), p));
  const GramResult ga = angular_gram(ang, p);
  auto& ra = add("base_angular_gram", identity_deviation(ga.matrix), kTolResidual, ga.nodes);
  ra.numbers.emplace_back("states", static_cast<double>(ang.size()));
  ra.numbers.emplace_back("doubling_change", ga.doubling_change);

  double rg = 0.0, rchange = 0.0;
  int rnodes = 0;
  for (int t = 0; t <= 2; ++t) {
    std::vector<RadialForm> rad;
    for (int k = 0; k <= 6; ++k)
      rad.push_back(radial_state(k, HalfInt::from_twice(t), p));
    const GramResult gr = radial_gram(rad, p);
    rg = std::max(rg, identity_deviation(gr.matrix));
    rnodes = std::max(rnodes, gr.nodes);
    rchange = std::max(rchange, gr.doubling_change);
  }
  auto& rr = add("base_radial_gram", rg, kTolBaseRadialGram, rnodes);
  rr.numbers.emplace_back("k_max", 6);
  rr.numbers.emplace_back("doubling_change", rchange);

  // residuals of 30 seeded states
  auto all = enumerate_states(p, level_energy(12, p));
  std::mt19937_64 gen(cfg.seed);
  std::shuffle(all.begin(), all.end(), gen);
  all.resize(std::min<std::size_t>(all.size(), 30));
  const auto rhos = radial_samples(cfg.seed, 40);
  const auto phis = angular_samples(cfg.seed, 40);
  const PointFunction zero = [](double) { return 0.0; };
  double res_r = 0.0, res_a = 0.0;
  for (const auto& qn : all) {
    const BoundState st = assemble(qn, p);
    res_r = std::max(res_r, radial_residual(st.radial, p, st.msq, zero, st.energy, rhos));
    res_a = std::max(res_a, angular_residual(st.angular, p, qn.sector, zero, 0.5 * st.msq, phis));
  }
  add("base_radial_residual", res_r, kTolResidual, static_cast<int>(rhos.size())).numbers.emplace_back("states", all.size());
  add("base_angular_residual", res_a, kTolResidual, static_cast<int>(phis.size())).numbers.emplace_back("states", all.size());

  // Cartesian FD oracle on the first few of them
  const auto pts = plane_samples(cfg.seed, 12);
  double fd = 0.0, order = 1e300;
  const int fd_states = std::min<int>(8, static_cast<int>(all.size()));
  for (int i = 0; i < fd_states; ++i) {
    const BoundState st = assemble(all[i], p);
    const PlanePoint psi = [&st](double a, double b) { return eval_wavefunction(st, a, b); };
    double num = 0.0, den = 0.0;
    for (const auto& [x1, x2] : pts) {
      num = std::max(num, std::abs(fd_cartesian_richardson(psi, p, std::nullopt, x1, x2, 1e-2) - st.energy * psi(x1, x2)));
      den = std::max(den, std::abs(psi(x1, x2)));
    }
    fd = std::max(fd, num / den);
    if (i < 3)
      order = std::min(order, fd_convergence_order(psi, p, std::nullopt, st.energy, pts));
  }
  auto& rf = add("base_fd_hamiltonian", fd, kTolFiniteDifference, static_cast<int>(pts.size()));
  rf.numbers.emplace_back("h", 1e-2);
  rf.numbers.emplace_back("states", fd_states);
  auto& ro = add("fd_convergence_order", std::max(0.0, 4.0 - order), 0.5, static_cast<int>(pts.size()));
  ro.numbers.emplace_back("order", order);
}

// first admissible n values for a seed (alpha > m-1 for II/III)
std::vector<HalfInt> extension_ns(const ExtensionSpec& spec, const Parameters& p, int count) {
  std::vector<HalfInt> ns;
  for (int t = 0; t <= 40 && static_cast<int>(ns.size()) < count; ++t) {
    try {
      g_factor(spec, alpha(HalfInt::from_twice(t), p));
      ns.push_back(HalfInt::from_twice(t));
    } catch (const AdmissibilityError&) {
    } catch (const SingularExtensionError&) {
    }
  }
  if (ns.empty())
    throw AdmissibilityError("no n <= 20 gives an admissible seed for " + spec.str());
  return ns;
}

void Suite::extension_checks(const ExtensionSpec& spec) {
  const auto ns = extension_ns(spec, p, 2);
  const auto rhos = radial_samples(cfg.seed, 40);
  double gram_dev = 0.0, res = 0.0, change = 0.0;
  int nodes = 0, kernels = 0, bad_kernels = 0, survived = 0;
  for (const HalfInt n : ns) {
    const GFactor g = g_factor(spec, alpha(n, p));
    const PointFunction extra = [&g](double rho) { return extended_potential_shift(g, rho); };
    std::vector<RadialForm> forms;
    for (int k = 0; k <= spec.m + 5; ++k) {
      if (!admissible_k(spec, k))
        continue;
      const auto st = extended_radial_state(spec, k, n, p);
      ++kernels;
      if (st.cert.dimension != 1)
        ++bad_kernels;
      try {
        xm_laguerre(spec, k, alpha(n, p), NullspaceMethod::Exact, 1e-3);
        ++survived;
      } catch (const NullspaceDimensionError&) {
      }
      res = std::max(res, radial_residual(st.form, p, separation_constant(n, p), extra, st.energy, rhos));
      forms.push_back(st.form);
    }
    const GramResult gr = radial_gram(forms, p);
    gram_dev = std::max(gram_dev, identity_deviation(gr.matrix));
    nodes = std::max(nodes, gr.nodes);
    change = std::max(change, gr.doubling_change);
  }
  const std::string tag = spec.str();
  auto label = [&](VerificationReport& r) { r.labels.emplace_back("extension", tag); };
  {
    auto& r = add("ext_radial_gram", gram_dev, kTolResidual, nodes);
    label(r);
    r.numbers.emplace_back("doubling_change", change);
  }
  label(add("ext_radial_residual", res, kTolResidual, static_cast<int>(rhos.size())));
  {
    auto& r = add("eop_kernel_integrity", bad_kernels + survived, 0.0, kernels);
    label(r);
    r.numbers.emplace_back("kernels", kernels);
    r.numbers.emplace_back("perturbed_survivors", survived);
  }

  // isospectrality in doubled-integer keys, K = 10
  const int K = 10;
  int mismatches = 0;
  for (const HalfInt n : ns) {
    auto ext = extended_level_keys(spec, n, K);
    std::vector<int> base;
    for (int k = 0; k <= K - spec.m; ++k)
      base.push_back(2 * k + n.twice);
    if (spec.tau == ExtensionType::III) {
      // the k = m level is missing and one level appears below the tower
      base.erase(base.begin());
      base.insert(base.begin(), n.twice - 2 * spec.m);
    }
    std::sort(ext.begin(), ext.end());
    mismatches += ext == base ? 0 : 1;
  }
  label(add("ext_isospectral", mismatches, 0.0, static_cast<int>(ns.size())));

  // grid oracle: lowest 5 levels at the larger n
  {
    const HalfInt n = ns.back();
    const GFactor g = g_factor(spec, alpha(n, p));
    const auto grid = grid_spectrum_oracle([&g](double rho) { return extended_potential(g, rho); }, p, n, 5);
    auto keys = extended_level_keys(spec, n, 20);
    std::sort(keys.begin(), keys.end());
    double dev = 0.0;
    for (int i = 0; i < 5; ++i)
      dev = std::max(dev, std::abs(grid.values[i] - level_energy(keys[i], p)));
    auto& r = add("ext_grid_spectrum", dev, kTolGrid, grid.points);
    label(r);
    r.numbers.emplace_back("n", n.value());
    r.numbers.emplace_back("rho_max", grid.rho_max);
  }

  if (spec.m == 1 && spec.tau != ExtensionType::III) {
    double dev = 0.0;
    for (const HalfInt n : ns) {
      const double a = alpha(n, p);
      const GFactor g = g_factor(spec, a);
      for (double rho : radial_samples(cfg.seed, 100)) {
        const double z = rho * rho;
        const double closed = 0.5 * z + 2.0 / (z + a) - 4.0 * a / ((z + a) * (z + a));
        const double v = extended_potential(g, rho);
        dev = std::max(dev, std::abs(v - closed) / std::max(1.0, std::abs(closed)));
      }
    }
    label(add("ext_m1_closed_form", dev, kTolIdentity, 100));
  }
}

void Suite::angular_checks() {
  check_angular_extension(p);
  const PrefactorResolution res = resolve_angular_prefactor(p, cfg.seed);
  {
    auto& r = add("angular_prefactor", std::min(res.residual_half, res.residual_one), kTolResidual, res.samples);
    r.numbers.emplace_back("residual_prefactor_half", res.residual_half);
    r.numbers.emplace_back("residual_prefactor_one", res.residual_one);
    r.numbers.emplace_back("adopted_prefactor", res.adopted);
    r.numbers.emplace_back("states", res.states);
  }
  {
    auto& r = add("angular_prefactor_gap", std::pow(10.0, -res.gap_orders), 1e-6, res.samples);
    r.numbers.emplace_back("gap_orders", res.gap_orders);
  }
  const ExtensionCoupling coupling{res.adopted};

  double msq_dev = 0.0, gram_dev = 0.0, norm_dev = 0.0, resid = 0.0, change = 0.0;
  int nodes = 0;
  const auto phis = angular_samples(cfg.seed, 40);
  for (const SectorLabel s : kAllSectors) {
    std::vector<AngularForm> forms;
    const PointFunction extra = angular_extension_potential(s, p, coupling);
    for (int t = min_n(s).twice; t <= 6; t += 2) {
      const HalfInt n = HalfInt::from_twice(t);
      const auto st = extended_angular_state(s, n, p);
      msq_dev = std::max(msq_dev, std::abs(st.msq - separation_constant(n, p)));
      resid = std::max(resid, angular_residual(st.form, p, s, extra, 0.5 * st.msq, phis));
      forms.push_back(st.form);
    }
    const GramResult g = angular_gram(forms, p);
    gram_dev = std::max(gram_dev, identity_deviation(g.matrix));
    for (int i = 0; i < g.matrix.rows(); ++i)
      norm_dev = std::max(norm_dev, std::abs(g.matrix(i, i) - 1.0));
    nodes = std::max(nodes, g.nodes);
    change = std::max(change, g.doubling_change);
  }
  add("ext_angular_msq", msq_dev, 0.0, 0);
  {
    auto& r = add("ext_angular_gram", gram_dev, kTolExtendedGram, nodes);
    r.numbers.emplace_back("norm_discrepancy", norm_dev);
    r.numbers.emplace_back("doubling_change", change);
  }
  add("ext_angular_residual", resid, kTolResidual, static_cast<int>(phis.size()));

  // the three operator forms on the battery
  {
    const auto battery = test_battery(cfg.seed, 20);
    const auto pts = plane_samples(cfg.seed + 7, 30);
    double dev = 0.0;
    for (const auto& tf : battery) {
      const PlaneFunction f = [&tf](double a, double b) { return tf(a, b); };
      for (const auto& [x1, x2] : pts) {
        const double h27 = hext_projector_form(f, p, coupling, x1, x2);
        const double h31 = hext_l_form(f, p, coupling, x1, x2);
        const double h36 = hext_dunkl_form(f, p, coupling, x1, x2);
        const double scale = std::max({1.0, std::abs(h27), std::abs(h31), std::abs(h36)});
        dev = std::max({dev, std::abs(h27 - h31) / scale, std::abs(h27 - h36) / scale, std::abs(h31 - h36) / scale});
      }
    }
    auto& r = add("operator_forms", dev, kTolOperatorForms, static_cast<int>(pts.size()));
    r.numbers.emplace_back("functions", static_cast<double>(battery.size()));
  }
  {
    const auto pts = plane_samples(cfg.seed + 11, 50, 0.05);
    double dev = 0.0;
    for (const SectorLabel s : kAllSectors) {
      const KTerm k = KTerm::make(p.mu1() + s.eps1, p.mu2() + s.eps2);
      for (const auto& [x1, x2] : pts) {
        const double r2 = x1 * x1 + x2 * x2;
        const double polar = k.kappa(polar_angle(x1, x2));
        const double scale = std::max(1.0, std::abs(polar));
        for (int form = 0; form < 3; ++form)
          dev = std::max(dev, std::abs(r2 * k(x1, x2, form) - polar) / scale);
      }
    }
    add("k_term_forms", dev, kTolIdentity, static_cast<int>(pts.size()));
  }
  {
    // full extended eigenpairs through the Cartesian oracle
    const auto pts = plane_samples(cfg.seed + 13, 12);
    double dev = 0.0;
    int count = 0;
    for (const SectorLabel s : kAllSectors)
      for (int t = min_n(s).twice; t <= min_n(s).twice + 2; t += 2)
        for (int k = 0; k <= 1; ++k) {
          const HalfInt n = HalfInt::from_twice(t);
          const auto ang = extended_angular_state(s, n, p);
          const RadialForm rad = radial_state(k, n, p);
          const double e = level_energy(2 * k + t, p);
          const PlanePoint psi = [&](double a, double b) { return eval_product(rad, ang.form, a, b); };
          double num = 0.0, den = 0.0;
          for (const auto& [x1, x2] : pts) {
            num = std::max(num, std::abs(fd_cartesian_richardson(psi, p, coupling, x1, x2, 1e-2) - e * psi(x1, x2)));
            den = std::max(den, std::abs(psi(x1, x2)));
          }
          dev = std::max(dev, num / den);
          ++count;
        }
    auto& r = add("ext_fd_hamiltonian", dev, kTolFiniteDifference, static_cast<int>(pts.size()));
    r.numbers.emplace_back("states", count);
    r.numbers.emplace_back("h", 1e-2);
  }
}

} // namespace

std::vector<VerificationReport> run_suite(const SuiteConfig& cfg) {
  Suite s{cfg, validate_parameters(cfg.mu1, cfg.mu2), {}};
  // fail fast on inadmissible requests before any check runs
  for (const auto& spec : cfg.extensions)
    extension_ns(spec, s.p, 1);
  if (cfg.angular)
    check_angular_extension(s.p);
  s.base_checks();
  for (const auto& spec : cfg.extensions)
    s.extension_checks(spec);
  if (cfg.angular)
    s.angular_checks();
  return s.out;
}

} // namespace dunkl
