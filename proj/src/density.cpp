#include "dhc/density.hpp"

#include <cmath>
#include <stdexcept>

namespace dhc {

DensityMatrix::DensityMatrix(std::size_t d, CMat m, double tol)
    : dim(d), mat(std::move(m)) {
  if (d == 0) fail("density matrix: dimension must be positive");
  if (mat.rows() != static_cast<Eigen::Index>(d) ||
      mat.cols() != static_cast<Eigen::Index>(d))
    fail("density matrix: matrix must be d x d");
  if (hermiticity_defect(mat) > tol)
    throw std::domain_error("density matrix: not hermitian within tolerance");
  if (min_eigenvalue_hermitian(mat) < -tol)
    throw std::domain_error("density matrix: negative eigenvalue");
  if (std::abs(mat.trace().imag()) > tol)
    throw std::domain_error("density matrix: trace is not real");
}

KrausMap::KrausMap(std::size_t in_d, std::size_t out_d, std::vector<CMat> ks)
    : in_dim(in_d), out_dim(out_d), kraus(std::move(ks)) {
  if (in_dim == 0 || out_dim == 0) fail("kraus map: dimensions must be positive");
  if (kraus.empty()) fail("kraus map: at least one Kraus operator required");
  for (const CMat& k : kraus)
    if (k.rows() != static_cast<Eigen::Index>(out_dim) ||
        k.cols() != static_cast<Eigen::Index>(in_dim))
      fail("kraus map: operator shape must be out_dim x in_dim");
}

bool KrausMap::is_trace_preserving(double tol) const {
  CMat s = CMat::Zero(in_dim, in_dim);
  for (const CMat& k : kraus) s += k.adjoint() * k;
  return (s - CMat::Identity(in_dim, in_dim)).cwiseAbs().maxCoeff() <= tol;
}

CMat choi(const KrausMap& map) {
  const std::size_t din = map.in_dim, dout = map.out_dim;
  CMat c = CMat::Zero(din * dout, din * dout);
  for (const CMat& k : map.kraus) {
    // vec(K)[(i, out)] = K_{out, i}; C += vec(K) vec(K)^dag.
    CVec v(din * dout);
    for (std::size_t i = 0; i < din; ++i)
      for (std::size_t o = 0; o < dout; ++o)
        v(static_cast<Eigen::Index>(i * dout + o)) =
            k(static_cast<Eigen::Index>(o), static_cast<Eigen::Index>(i));
    c += v * v.adjoint();
  }
  return c;
}

CMat apply_choi(const CMat& choi_matrix, std::size_t in_dim,
                std::size_t out_dim, const CMat& sigma) {
  if (choi_matrix.rows() != static_cast<Eigen::Index>(in_dim * out_dim) ||
      choi_matrix.cols() != choi_matrix.rows())
    fail("apply_choi: Choi matrix has wrong shape");
  if (sigma.rows() != static_cast<Eigen::Index>(in_dim) ||
      sigma.cols() != static_cast<Eigen::Index>(in_dim))
    fail("apply_choi: input has wrong shape");
  CMat out = CMat::Zero(out_dim, out_dim);
  for (std::size_t i = 0; i < in_dim; ++i)
    for (std::size_t j = 0; j < in_dim; ++j)
      for (std::size_t k = 0; k < out_dim; ++k)
        for (std::size_t l = 0; l < out_dim; ++l)
          out(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) +=
              choi_matrix(static_cast<Eigen::Index>(i * out_dim + k),
                          static_cast<Eigen::Index>(j * out_dim + l)) *
              sigma(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return out;
}

DensityMatrix random_density_matrix(std::size_t d, std::size_t rank,
                                    std::uint64_t seed) {
  if (d == 0) fail("random_density_matrix: dimension must be positive");
  if (rank == 0 || rank > d) fail("random_density_matrix: rank out of range");
  Rng rng(seed);
  const CMat g = gaussian_matrix(d, rank, rng);
  CMat m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(d, std::move(m));
}

}  // namespace dhc
