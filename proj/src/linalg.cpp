#include "dhc/linalg.hpp"

#include <cmath>

namespace dhc {

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * M_PI * u2;
  spare_ = r * std::sin(phi);
  have_spare_ = true;
  return r * std::cos(phi);
}

CMat dagger(const CMat& m) { return m.adjoint(); }

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double hermiticity_defect(const CMat& m) {
  if (m.rows() != m.cols()) fail("hermiticity_defect: non-square matrix");
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue_hermitian(const CMat& m) {
  if (m.rows() != m.cols()) fail("min_eigenvalue_hermitian: non-square matrix");
  if (m.rows() == 0) fail("min_eigenvalue_hermitian: empty matrix");
  const CMat h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool is_psd(const CMat& m, double tol) {
  if (m.rows() != m.cols()) fail("is_psd: non-square matrix");
  if (hermiticity_defect(m) > tol) return false;
  return min_eigenvalue_hermitian(m) >= -tol;
}

CMat gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  CMat g(rows, cols);
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = rng.cgaussian();
  return g;
}

Tensor tensor_from_matrix(const CMat& m) {
  const auto rows = static_cast<std::size_t>(m.rows());
  const auto cols = static_cast<std::size_t>(m.cols());
  Tensor t({rows, cols});
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      t[i * cols + j] = m(static_cast<Eigen::Index>(i),
                          static_cast<Eigen::Index>(j));
  return t;
}

CMat matrix_from_tensor(const Tensor& t) {
  if (t.rank() != 2) fail("matrix_from_tensor: rank-2 tensor required");
  const std::size_t rows = t.shape()[0], cols = t.shape()[1];
  CMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          t[i * cols + j];
  return m;
}

}  // namespace dhc
