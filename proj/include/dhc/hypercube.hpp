#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dhc/density.hpp"
#include "dhc/structures.hpp"

namespace dhc {

// State of the theory: a rank-4 tensor over (x00, x01, x10, x11) with the
// Z2 x Z2 component symmetry
//   conj(rho[a,b,c,d]) = rho[b,a,d,c]   (column swap)
//   conj(rho[a,b,c,d]) = rho[c,d,a,b]   (row swap)
//        rho[a,b,c,d]  = rho[d,c,b,a]   (180-degree rotation)
// An optional certificate {M^g} of PSD matrices witnesses membership in the
// state cone via rho[a,b,c,d] = sum_g M^g[a,b] * conj(M^g[c,d]).
struct DHState {
  std::size_t dim = 0;
  Tensor tensor;                     // shape (d,d,d,d)
  std::vector<CMat> certificate;     // empty when absent

  DHState() = default;
  DHState(std::size_t d, Tensor t, std::vector<CMat> cert = {});

  bool has_certificate() const { return !certificate.empty(); }
};

// Generator triple for a map: f has axes (g, k, e, h) = (bridge, output,
// environment, input); g runs over the bridge basis.
struct GeneratorForm {
  Tensor f;
  std::size_t g_dim = 1;
  std::size_t e_dim = 1;
  ClassicalStructure bridge;
};

// Map of the theory: a rank-8 tensor with axes (out0..out3, in0..in3).
// The compiled tensor is the canonical machine form; the generator is an
// optional certificate kept for closure bookkeeping.
struct DHMap {
  std::size_t in_dim = 0;
  std::size_t out_dim = 0;
  Tensor tensor;                     // shape (out^4, in^4)
  std::optional<GeneratorForm> generator;

  DHMap() = default;
  DHMap(std::size_t in_d, std::size_t out_d, Tensor t,
        std::optional<GeneratorForm> gen = std::nullopt);
};

enum class EffectKind { Forest, TreeOnBridge, Extension, DaggerOfState };

struct EffectTensor {
  std::size_t dim = 0;
  Tensor tensor;                     // rank 4
  EffectKind kind = EffectKind::Forest;
};

// --- construction ---------------------------------------------------------

// rho[a,b,c,d] = sum_g M^g[a,b] conj(M^g[c,d]); members must be PSD
// within 1e-8 and share one dimension. The family is kept as certificate.
DHState dh_state_from_psd_family(const std::vector<CMat>& members);

DHMap dh_map_from_generator(const Tensor& f, std::size_t g_dim,
                            std::size_t e_dim,
                            const ClassicalStructure& bridge);

// Doubled map of a plain linear operator v (generator with trivial bridge
// and environment).
DHMap doubled_map(const CMat& v);

DHMap identity_dh_map(std::size_t d);

// Certificate family of `members` random PSD matrices, scaled so the forest
// effect is 1. Deterministic for a fixed seed.
DHState random_dh_state(std::size_t d, std::size_t members,
                        std::uint64_t seed);

// --- plugging -------------------------------------------------------------

DHState dh_apply(const DHMap& map, const DHState& state);
DHMap dh_compose(const DHMap& second, const DHMap& first);

// Parallel composition. Composite slot indices are mixed-radix pairs
// i1 * d2 + i2 at each of the four positions.
DHMap dh_tensor(const DHMap& a, const DHMap& b);
DHState dh_tensor(const DHState& a, const DHState& b);

// --- effects --------------------------------------------------------------

EffectTensor forest_tensor(std::size_t d);
EffectTensor tree_on_bridge_tensor(const ClassicalStructure& z);
EffectTensor extension_tensor(const ClassicalStructure& z);
EffectTensor effect_of_state(const DHState& state);

// sum_{abcd} E[a,b,c,d] * rho[a,b,c,d]; throws if the imaginary residue
// exceeds tol.
double pair_effect(const EffectTensor& effect, const DHState& state,
                   double tol = default_tol());

// sum_{x,y} rho[x,x,y,y]
double forest_effect(const DHState& state, double tol = default_tol());
// sum_x rho~[x,x,x,x] with rho~ the state in z coordinates
double tree_on_bridge_effect(const DHState& state, const ClassicalStructure& z,
                             double tol = default_tol());
// forest - tree-on-bridge; throws if negative beyond tol
double extension_effect(const DHState& state, const ClassicalStructure& z,
                        double tol = default_tol());

// Forest composed with the map equals the input forest pattern.
bool is_normalised_map(const DHMap& map, double tol = default_tol());

// --- symmetry -------------------------------------------------------------

struct SymmetryReport {
  double column_swap_dev = 0.0;  // conj(rho[a,b,c,d]) vs rho[b,a,d,c]
  double row_swap_dev = 0.0;     // conj(rho[a,b,c,d]) vs rho[c,d,a,b]
  double rotation_dev = 0.0;     // rho[a,b,c,d] vs rho[d,c,b,a]

  double max() const;
  bool pass(double tol) const { return max() <= tol; }
};

SymmetryReport check_symmetry(const DHState& state);

// Express the state in z coordinates: certificates map M -> U^dag M U,
// i.e. legs (0,3) rotate with conj(U) and legs (1,2) with U.
DHState rotate_state(const DHState& state, const ClassicalStructure& z);

// --- component census -----------------------------------------------------

struct OrbitClassRecord {
  std::string pattern;          // e.g. "aabb": equality pattern of the slots
  std::size_t component_count;  // tuples with this pattern, d^4 total
  std::size_t orbit_count;      // orbits meeting this class
  std::size_t orbit_size;       // 1, 2 or 4 (uniform within a class)
  std::string stabilizer;       // full | conjugating | transposing | trivial
  std::size_t real_params;      // independent real parameters attributed
};

struct OrbitCensus {
  std::size_t dim = 0;
  std::vector<OrbitClassRecord> classes;  // all 15 equality patterns
  double formula_value = 0.0;       // (d^4 - 3d^3 + 7d^2 - 3d) / 2
  std::size_t census_total = 0;           // sum of attributed parameters
  std::size_t orbit_count = 0;            // enumerated orbits
  std::size_t burnside_orbit_count = 0;   // (d^4 + 3 d^2) / 4
  std::optional<std::size_t> span_rank;
};

OrbitCensus orbit_census(std::size_t d);

// Numerical rank of `samples` random certified states flattened to real
// vectors of length 2 d^4 (singular values above 1e-8 of the largest).
std::size_t span_rank(std::size_t d, std::size_t samples, std::uint64_t seed);

// The 15 equality patterns in canonical order (by number of distinct
// values, then lexicographic).
const std::vector<std::string>& component_patterns();
std::string pattern_of(std::size_t a, std::size_t b, std::size_t c,
                       std::size_t d);

}  // namespace dhc
