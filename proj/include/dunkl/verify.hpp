#ifndef DUNKL_VERIFY_HPP
#define DUNKL_VERIFY_HPP

#include "dunkl/angular_ext.hpp"
#include "dunkl/basestates.hpp"
#include "dunkl/params.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/quasiforms.hpp"
#include "dunkl/radial_ext.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dunkl {

// Default tolerances by accuracy class.
inline constexpr double kTolResidual = 1e-9;
inline constexpr double kTolBaseRadialGram = 1e-10;
inline constexpr double kTolExtendedGram = 1e-8;
inline constexpr double kTolFiniteDifference = 1e-5;
inline constexpr double kTolGrid = 1e-4;
inline constexpr double kTolIdentity = 1e-12;
inline constexpr double kTolOperatorForms = 1e-9;
inline constexpr double kResidualFloor = 1e-12;

struct VerificationReport {
  std::string check;
  std::vector<std::pair<std::string, double>> numbers;
  std::vector<std::pair<std::string, std::string>> labels;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  int nodes = 0;  // quadrature nodes or sample points behind the deviation
};

/// pass is set from deviation <= tolerance (NaN fails).
VerificationReport make_report(std::string check, double deviation, double tolerance, std::uint64_t seed,
                               int nodes);
std::string reports_to_json(const std::vector<VerificationReport>& reports, int indent = 2);

// ---- sample sets (Halton, offset by the seed) ----

/// rho in [0.05, 5]
std::vector<double> radial_samples(std::uint64_t seed, int count);
/// phi in (0, 2pi), at least 0.05 away from multiples of pi/2
std::vector<double> angular_samples(std::uint64_t seed, int count);
/// points in [-extent, extent]^2 with |x_i| >= min_abs
std::vector<std::pair<double, double>> plane_samples(std::uint64_t seed, int count, double min_abs = 0.3,
                                                     double extent = 2.5);

// ---- residuals ----

/// max |(Op - lambda) f| / max(|f|, 1e-12) over the samples.
double radial_residual(const RadialForm& f, const Parameters& p, double msq, const PointFunction& extra,
                       double energy, const std::vector<double>& rhos);
double angular_residual(const AngularForm& g, const Parameters& p, SectorLabel sector, const PointFunction& extra,
                        double eigenvalue, const std::vector<double>& phis);

// ---- Gram matrices ----

/// Integral over (0, 2pi) of f g |cos|^{2mu1} |sin|^{2mu2} via t = -cos 2phi.
ConvergedIntegral angular_inner_converged(const AngularForm& f, const AngularForm& g, const Parameters& p,
                                          int nodes = 0);
double angular_inner(const AngularForm& f, const AngularForm& g, const Parameters& p);

struct GramResult {
  Eigen::MatrixXd matrix;
  int nodes = 0;             // largest rule used
  double doubling_change = 0.0;  // largest change between the last two rule sizes
};
GramResult radial_gram(const std::vector<RadialForm>& forms, const Parameters& p);
GramResult angular_gram(const std::vector<AngularForm>& forms, const Parameters& p);
double identity_deviation(const Eigen::MatrixXd& m);

// ---- Cartesian finite-difference oracle ----

using PlanePoint = std::function<double(double, double)>;

/// H psi at (x1, x2) with fourth-order central differences, reflections by
/// mirrored evaluation, plus the extension terms when a coupling is given.
/// Throws StencilDomainError if the stencil would reach an axis.
double fd_cartesian_hamiltonian(const PlanePoint& psi, const Parameters& p,
                                const std::optional<ExtensionCoupling>& ext, double x1, double x2, double h);
/// Richardson combination of steps h and h/2.
double fd_cartesian_richardson(const PlanePoint& psi, const Parameters& p,
                               const std::optional<ExtensionCoupling>& ext, double x1, double x2, double h);

/// log2 slope of the FD error for steps {0.08, 0.04, 0.02} against a known eigenvalue.
double fd_convergence_order(const PlanePoint& psi, const Parameters& p, const std::optional<ExtensionCoupling>& ext,
                            double energy, const std::vector<std::pair<double, double>>& points);

// ---- grid spectrum oracle ----

struct GridSpectrum {
  std::vector<double> values;
  int points = 0;
  double rho_max = 0.0;
};

/// Lowest eigenvalues of -1/2 Q'' + 1/2 (alpha-1/2)(alpha+1/2)/rho^2 Q + V Q,
/// alpha = 2n + mu1 + mu2, Dirichlet at 0 and rho_max. Richardson over grids
/// of points/2 and points interior nodes (spacing halved).
GridSpectrum grid_spectrum_oracle(const PointFunction& potential, const Parameters& p, HalfInt n, int count,
                                  double rho_max = 12.0, int points = 3999);

// ---- explicit test functions for operator comparisons ----

/// exp(-(a x1^2 + b x2^2)/2 + c x1 + d x2) times a cubic polynomial.
struct TestFunction {
  double a, b, c, d;
  double coef[10];  // 1, x, y, x^2, xy, y^2, x^3, x^2y, xy^2, y^3
  PlaneJet operator()(double x1, double x2) const;
};
std::vector<TestFunction> test_battery(std::uint64_t seed, int count = 20);

// ---- angular prefactor resolution ----

struct PrefactorResolution {
  double residual_half = 0.0;
  double residual_one = 0.0;
  double adopted = 0.0;
  double gap_orders = 0.0;  // log10(larger / smaller)
  int states = 0;
  int samples = 0;
};
/// Residuals of all extended angular states with n <= n_max under both
/// candidate prefactors (1/2 and 1); adopts the smaller.
PrefactorResolution resolve_angular_prefactor(const Parameters& p, std::uint64_t seed, int n_max_twice = 6);

// ---- suite ----

struct SuiteConfig {
  double mu1 = 0.3;
  double mu2 = 0.7;
  std::vector<ExtensionSpec> extensions;
  bool angular = false;
  std::uint64_t seed = 12345;
  std::optional<double> tolerance;  // overrides every default when set
};

/// Runs the invariant suite. Parameter and extension admissibility errors
/// propagate as exceptions before any check runs.
std::vector<VerificationReport> run_suite(const SuiteConfig& cfg);

} // namespace dunkl

#endif
