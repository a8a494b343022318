#pragma once

#include <optional>

#include "dhc/hypercube.hpp"

namespace dhc {

// A system of the theory: a carrier dimension together with the idempotent
// that names it (plain hyper-quantum, quantum via hyper-decoherence, or
// classical via decoherence).
struct KaroubiObject {
  enum class Kind { Identity, Decoh, HypDecoh };

  std::size_t dim;
  Kind kind;
  std::optional<ClassicalStructure> structure;

  static KaroubiObject identity(std::size_t d);
  static KaroubiObject decohered(ClassicalStructure z);
  static KaroubiObject hyperdecohered(ClassicalStructure z);
};

// Idempotent keeping only the all-equal diagonal in z coordinates:
// (decoh rho)[a,b,c,d] = [a=b=c=d] rho[a,a,a,a]. Sub-normalised for d >= 2.
DHMap decoh_map(const ClassicalStructure& z, std::size_t d);

// Idempotent restricting to the [a=d][b=c] component support in z
// coordinates: (hypdecoh rho)[a,b,c,d] = [a=d][b=c] rho[a,b,b,a].
// forest o hypdecoh = tree-on-bridge, so it is strictly sub-normalised.
DHMap hypdecoh_map(const ClassicalStructure& z, std::size_t d);

// Identity objects discard with the forest; decohered and hyper-decohered
// objects both discard with the same tree-on-a-bridge effect.
EffectTensor object_discard(const KaroubiObject& obj);

// Point state |psi_x><psi_x| of the structure, with certificate.
DHState point_state(const ClassicalStructure& z, std::size_t x);

// Matrix of non-negative reals extracted from a map sandwiched between
// decoherences; entries M[y,x] >= -1e-10.
struct StochasticExtract {
  std::size_t rows = 0;
  std::size_t cols = 0;
  RMatD mat;

  StochasticExtract(std::size_t r, std::size_t c, RMatD m);
};

// M[y,x] = point effect at y after decoh, applied to Phi(point state at x).
StochasticExtract classical_extract(const DHMap& map,
                                    const ClassicalStructure& zin,
                                    const ClassicalStructure& zout,
                                    double tol = default_tol());

// Inverse leg of the classical equivalence; classical_extract(classical_embed(M))
// recovers M. Entries must be non-negative.
DHMap classical_embed(const RMatD& m, const ClassicalStructure& zin,
                      const ClassicalStructure& zout);

// sigma[x,y] = rho[y,x,x,y] (computational hyper-decoherence basis); the
// result is Hermitian PSD for cone states and tr sigma = tree-on-bridge.
DensityMatrix quantum_extract_state(const DHState& state, double tol = 1e-9);

// Raw component readout without PSD validation.
CMat extract_components(const Tensor& t);

// Hyper-decoherence-fixed representative with extract(inject(sigma)) = sigma:
// inject(sigma)[a,b,c,d] = [a=d][b=c] sigma[b,a].
Tensor inject_tensor(const CMat& sigma);

// Certified state whose hyper-decohered extraction recovers sigma. Built from
// the eigendecomposition sigma = sum_y p_y |g_y><g_y| (p_y > 1e-12 kept) with
// entrywise principal square roots in z coordinates and weights p_y^(1/4)
// per generator leg.
DHState quantum_lift_state(const DensityMatrix& sigma,
                           const ClassicalStructure& z);

// Choi matrix of sigma -> extract(Phi(inject(sigma))), in the same block
// convention as choi().
CMat quantum_extract_map(const DHMap& map);

struct CausalityReport {
  std::size_t dim = 0;
  std::size_t trials = 0;
  double forest_max_dev = 0.0;       // max |forest(rho) - 1| over trials
  double tree_witness_value = 0.0;   // tree-on-bridge on the uniform state
  double extension_witness_value = 0.0;
  bool forest_pass = false;
  bool witnesses_pass = false;       // both witnesses differ from 1 by >= 0.1

  bool pass() const { return forest_pass && witnesses_pass; }
};

// The forest yields 1 on random normalised states; the tree-on-bridge and
// extension effects each exhibit a normalised state with value far from 1,
// so neither is an alternative discarding map.
CausalityReport causality_witness(std::size_t d, std::size_t trials,
                                  std::uint64_t seed);

}  // namespace dhc
