#include "dunkl/nullspace.hpp"

#include "dunkl/error.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <sstream>

namespace dunkl {

std::string NullspaceCertificate::str() const {
  std::ostringstream os;
  os << (method == NullspaceMethod::Exact ? "exact" : "floating") << " " << rows << "x" << cols
     << " kernel dim " << dimension;
  if (method == NullspaceMethod::Floating)
    os << " (sigma ratios " << smallest_ratio << ", " << second_ratio << ")";
  return os.str();
}

std::vector<Rational> exact_kernel_vector(DenseMatrix<Rational> m, NullspaceCertificate& cert) {
  cert = NullspaceCertificate{NullspaceMethod::Exact, m.rows, m.cols, 0, 0.0, 0.0};
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int i = row; i < m.rows; ++i)
      if (sgn(m(i, col)) != 0) {
        piv = i;
        break;
      }
    if (piv < 0)
      continue;
    if (piv != row)
      for (int j = 0; j < m.cols; ++j)
        std::swap(m(piv, j), m(row, j));
    const Rational inv = 1 / m(row, col);
    for (int j = col; j < m.cols; ++j)
      m(row, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || sgn(m(i, col)) == 0)
        continue;
      const Rational f = m(i, col);
      for (int j = col; j < m.cols; ++j)
        m(i, j) -= f * m(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  cert.dimension = m.cols - static_cast<int>(pivot_col.size());
  if (cert.dimension != 1)
    throw NullspaceDimensionError("ansatz system has a " + std::to_string(cert.dimension) +
                                  "-dimensional kernel (expected 1): " + cert.str());
  int free_col = 0;
  for (std::size_t i = 0; i < pivot_col.size() && pivot_col[i] == free_col; ++i)
    ++free_col;
  std::vector<Rational> x(m.cols, Rational(0));
  x[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r)
    x[pivot_col[r]] = -m(static_cast<int>(r), free_col);
  return x;
}

std::vector<double> floating_kernel_vector(const DenseMatrix<double>& m, NullspaceCertificate& cert,
                                           const std::vector<double>& reference) {
  cert = NullspaceCertificate{NullspaceMethod::Floating, m.rows, m.cols, 0, 0.0, 0.0};
  Eigen::MatrixXd a(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      a(i, j) = m(i, j);
  Eigen::VectorXd scale(m.cols);
  for (int j = 0; j < m.cols; ++j) {
    const double nrm = reference.empty() ? a.col(j).norm() : reference[j];
    scale[j] = nrm > 0.0 ? 1.0 / nrm : 1.0;
    a.col(j) *= scale[j];
  }
  if (m.rows < m.cols)
    a.conservativeResize(m.cols, Eigen::NoChange), a.bottomRows(m.cols - m.rows).setZero();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const int n = static_cast<int>(sv.size());
  const double smax = reference.empty() ? sv[0] : std::max(sv[0], 1.0);
  cert.smallest_ratio = smax > 0.0 ? sv[n - 1] / smax : 1.0;
  cert.second_ratio = n >= 2 && smax > 0.0 ? sv[n - 2] / smax : 1.0;
  int dim = 0;
  for (int i = 0; i < n; ++i)
    if (sv[i] <= kKernelSmallRatio * smax)
      ++dim;
  cert.dimension = dim;
  if (!(cert.smallest_ratio <= kKernelSmallRatio) || !(cert.second_ratio >= kKernelGapRatio))
    throw NullspaceDimensionError("ansatz system kernel is not certifiably one-dimensional: " +
                                  cert.str());
  cert.dimension = 1;
  std::vector<double> x(m.cols);
  for (int j = 0; j < m.cols; ++j)
    x[j] = svd.matrixV()(j, n - 1) * scale[j];
  return x;
}

} // namespace dunkl
