#ifndef DUNKL_NULLSPACE_HPP
#define DUNKL_NULLSPACE_HPP

#include "dunkl/polynomial.hpp"

#include <cmath>
#include <initializer_list>
#include <string>
#include <vector>

namespace dunkl {

enum class NullspaceMethod {
  Exact,    // rational Gaussian elimination
  Floating  // SVD with singular-value gap test
};

struct NullspaceCertificate {
  NullspaceMethod method = NullspaceMethod::Exact;
  int rows = 0;
  int cols = 0;
  int dimension = 0;
  // Floating only: sigma_min / sigma_max and sigma_second / sigma_max.
  double smallest_ratio = 0.0;
  double second_ratio = 0.0;

  std::string str() const;
};

/// Dense row-major matrix over T, just enough for the ansatz systems.
template <class T>
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<T> data;

  DenseMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, T(0)) {}
  T& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  const T& operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

/// Writes column j of an ansatz matrix as the sum of the given polynomial
/// terms. reference[j] receives the norm of the summed absolute term
/// coefficients, the size the column would have without cancellation.
template <class T>
void set_column(DenseMatrix<T>& a, std::vector<double>& reference, int j,
                std::initializer_list<Polynomial<T>> terms) {
  std::vector<T> sum(a.rows, T(0));
  std::vector<double> mag(a.rows, 0.0);
  for (const auto& t : terms)
    for (int i = 0; i <= t.degree(); ++i) {
      sum[i] += t.coeff(i);
      const double v = to_double(t.coeff(i));
      mag[i] += v < 0 ? -v : v;
    }
  double r = 0.0;
  for (int i = 0; i < a.rows; ++i) {
    a(i, j) = sum[i];
    r += mag[i] * mag[i];
  }
  if (static_cast<int>(reference.size()) < a.cols)
    reference.resize(a.cols, 0.0);
  reference[j] = std::sqrt(r);
}

/// Kernel vector of an exact matrix. Throws NullspaceDimensionError unless
/// the kernel is exactly one-dimensional.
std::vector<Rational> exact_kernel_vector(DenseMatrix<Rational> m, NullspaceCertificate& cert);

/// Kernel vector by SVD after column equilibration. Accepts only when
/// sigma_min <= 1e-10 sigma_max and sigma_second >= 1e-6 sigma_max.
/// With reference magnitudes (see set_column) columns are scaled by those
/// instead of their own norms and the ratios are taken against
/// max(sigma_max, 1), so a column that cancels to roundoff counts as zero.
std::vector<double> floating_kernel_vector(const DenseMatrix<double>& m, NullspaceCertificate& cert,
                                           const std::vector<double>& reference = {});

inline constexpr double kKernelSmallRatio = 1e-10;
inline constexpr double kKernelGapRatio = 1e-6;

} // namespace dunkl

#endif
