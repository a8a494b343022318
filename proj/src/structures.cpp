#include "dhc/structures.hpp"

#include <cmath>

namespace dhc {

ClassicalStructure::ClassicalStructure(std::size_t d, CMat b, std::string name,
                                       double tol)
    : dim(d), basis(std::move(b)), label(std::move(name)) {
  if (d == 0) fail("classical structure: dimension must be positive");
  if (basis.rows() != static_cast<Eigen::Index>(d) ||
      basis.cols() != static_cast<Eigen::Index>(d))
    fail("classical structure: basis must be d x d");
  const CMat gram = basis.adjoint() * basis;
  const double defect =
      (gram - CMat::Identity(basis.rows(), basis.cols())).cwiseAbs().maxCoeff();
  if (defect > tol) fail("classical structure: basis is not orthonormal");
}

bool ClassicalStructure::is_computational() const {
  for (Eigen::Index i = 0; i < basis.rows(); ++i)
    for (Eigen::Index j = 0; j < basis.cols(); ++j)
      if (basis(i, j) != cplx(i == j ? 1.0 : 0.0, 0.0)) return false;
  return true;
}

ClassicalStructure computational_structure(std::size_t d) {
  if (d == 0) fail("computational_structure: dimension must be positive");
  return ClassicalStructure(
      d, CMat::Identity(static_cast<Eigen::Index>(d),
                        static_cast<Eigen::Index>(d)),
      "computational");
}

ClassicalStructure fourier_structure(std::size_t d) {
  if (d == 0) fail("fourier_structure: dimension must be positive");
  CMat b(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t j = 1; j <= d; ++j) {
    for (std::size_t k = 1; k <= d; ++k) {
      // reduce j*k mod d so whole turns come out exactly real
      const std::size_t turns = (j * k) % d;
      const double phase =
          2.0 * M_PI * static_cast<double>(turns) / static_cast<double>(d);
      b(static_cast<Eigen::Index>(j - 1), static_cast<Eigen::Index>(k - 1)) =
          norm * cplx(std::cos(phase), std::sin(phase));
    }
  }
  return ClassicalStructure(d, std::move(b), "fourier");
}

}  // namespace dhc
