#pragma once

#include <map>

#include "dhc/karoubi.hpp"

namespace dhc {

// A non-empty subset of the d slit labels {1..d}.
struct SlitConfig {
  std::size_t dim;
  std::vector<std::size_t> slits;  // sorted, distinct, 1-based labels

  SlitConfig(std::size_t d, std::vector<std::size_t> labels);

  std::size_t count() const { return slits.size(); }
  static SlitConfig leading(std::size_t d, std::size_t k);  // {1..k}
};

// Doubling of sum_{x in U} |psi_x><psi_x|: keeps components with all four
// indices in U. P_X is the identity.
DHMap projector(const SlitConfig& cfg);

// The normalised pure state of the uniform superposition; every component
// equals 1/d^2 and the certificate is [ |psi_+><psi_+| / d ].
DHState uniform_state(std::size_t d);

// P[+|U] as the pairing of the uniform-state effect with P_U applied to the
// uniform state; evaluates to (#U)^4 / d^4.
double slit_probability(const SlitConfig& cfg);

// Piece counts of P_U grouped by the 15 equality patterns.
std::map<std::string, std::size_t> shape_census(const SlitConfig& cfg);

// Signed inclusion-exclusion over non-empty sub-subsets:
// I_U = sum_{V != 0, V subset U} (-1)^(#U - #V) P[+|V].
double sorkin_interference(const SlitConfig& cfg);

struct InterferenceReport {
  std::size_t dim = 0;
  std::size_t max_order = 0;
  std::map<std::size_t, double> probabilities;  // subset size -> P[+|U]
  std::map<std::size_t, double> sorkin;         // order -> I_k
  std::map<std::size_t, std::map<std::string, std::size_t>> shape_counts;
  bool order3_interference = false;
  bool order4_interference = false;
  bool higher_orders_vanish = false;  // every computed order >= 5

  bool passes_invariants(double tol = 1e-12) const;
};

// Representative subsets {1..k} for k = 1..kmax.
InterferenceReport hierarchy_report(std::size_t d, std::size_t kmax);

// The experiment pushed through hyper-decoherence: the uniform state and the
// slit projectors become a quantum state and projector channels, and the
// analogous Sorkin term of the given order is returned. Vanishes at order 3.
double quantum_sorkin(std::size_t d, std::size_t order);

// The fully decohered experiment: classical probabilities, whose Sorkin term
// vanishes already at order 2.
double classical_sorkin(std::size_t d, std::size_t order);

}  // namespace dhc
