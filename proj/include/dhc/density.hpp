#pragma once

#include <vector>

#include "dhc/linalg.hpp"

namespace dhc {

// Hermitian PSD matrix (trace need not be 1; sub-normalised states occur).
struct DensityMatrix {
  std::size_t dim;
  CMat mat;

  DensityMatrix(std::size_t d, CMat m, double tol = default_tol());

  double trace() const { return mat.trace().real(); }
  double purity() const { return (mat * mat).trace().real(); }
};

// Completely positive map given by Kraus operators (out_dim x in_dim each).
// Trace preservation is a predicate on the data, not an invariant.
struct KrausMap {
  std::size_t in_dim = 0;
  std::size_t out_dim = 0;
  std::vector<CMat> kraus;

  KrausMap(std::size_t in_d, std::size_t out_d, std::vector<CMat> ks);

  bool is_trace_preserving(double tol = default_tol()) const;
};

// Choi matrix with block convention C[(i,k),(j,l)] = sum_m K_{ki} conj(K_{lj}),
// i.e. C = sum_{ij} |i><j| (x) K |i><j| K^dag. PSD by construction.
CMat choi(const KrausMap& map);

// Apply a channel given as a Choi matrix in the convention above.
CMat apply_choi(const CMat& choi_matrix, std::size_t in_dim,
                std::size_t out_dim, const CMat& sigma);

// G G^dag / tr(G G^dag) for a d x rank complex Gaussian G. Deterministic
// for a fixed seed.
DensityMatrix random_density_matrix(std::size_t d, std::size_t rank,
                                    std::uint64_t seed);

}  // namespace dhc
