#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>

#include "dhc/tensor.hpp"

namespace dhc {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMatD = Eigen::MatrixXd;

// Seedable PRNG with an explicit Gaussian transform so that streams are
// reproducible independently of the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller.
  double gaussian();

  // Complex standard normal: independent N(0, 1/2) parts, unit variance.
  cplx cgaussian() {
    return cplx(gaussian(), gaussian()) / std::sqrt(2.0);
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

CMat dagger(const CMat& m);
CMat kron(const CMat& a, const CMat& b);

// Hermitian within tol and minimum eigenvalue >= -tol.
bool is_psd(const CMat& m, double tol = default_tol());

double hermiticity_defect(const CMat& m);
double min_eigenvalue_hermitian(const CMat& m);

CMat gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng);

// Rank-2 tensor <-> matrix views (axis 0 = row).
Tensor tensor_from_matrix(const CMat& m);
CMat matrix_from_tensor(const Tensor& t);

}  // namespace dhc
