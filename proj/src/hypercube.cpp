#include "dhc/hypercube.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <stdexcept>

namespace dhc {

namespace {

std::vector<std::size_t> state_shape(std::size_t d) { return {d, d, d, d}; }

std::vector<std::size_t> map_shape(std::size_t out_d, std::size_t in_d) {
  return {out_d, out_d, out_d, out_d, in_d, in_d, in_d, in_d};
}

const std::vector<AxisPair> kPlugPairs = {{4, 0}, {5, 1}, {6, 2}, {7, 3}};

}  // namespace

DHState::DHState(std::size_t d, Tensor t, std::vector<CMat> cert)
    : dim(d), tensor(std::move(t)), certificate(std::move(cert)) {
  if (d == 0) fail("dh state: dimension must be positive");
  if (tensor.shape() != state_shape(d)) fail("dh state: tensor must be d^4");
  for (const CMat& m : certificate)
    if (m.rows() != static_cast<Eigen::Index>(d) ||
        m.cols() != static_cast<Eigen::Index>(d))
      fail("dh state: certificate member has wrong shape");
}

DHMap::DHMap(std::size_t in_d, std::size_t out_d, Tensor t,
             std::optional<GeneratorForm> gen)
    : in_dim(in_d), out_dim(out_d), tensor(std::move(t)),
      generator(std::move(gen)) {
  if (in_dim == 0 || out_dim == 0) fail("dh map: dimensions must be positive");
  if (tensor.shape() != map_shape(out_dim, in_dim))
    fail("dh map: tensor must have shape out^4 x in^4");
}

DHState dh_state_from_psd_family(const std::vector<CMat>& members) {
  if (members.empty()) fail("dh_state_from_psd_family: empty family");
  const auto d = static_cast<std::size_t>(members[0].rows());
  for (const CMat& m : members) {
    if (m.rows() != members[0].rows() || m.cols() != m.rows())
      fail("dh_state_from_psd_family: dimension mismatch among members");
    if (!is_psd(m, 1e-8))
      throw std::domain_error("dh_state_from_psd_family: member is not PSD");
  }
  Tensor t(state_shape(d));
  for (const CMat& m : members) {
    std::size_t off = 0;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c)
          for (std::size_t e = 0; e < d; ++e, ++off)
            t[off] += m(a, b) * std::conj(m(c, e));
  }
  return DHState(d, std::move(t), members);
}

namespace {

// f with its bridge leg expressed in the bridge basis:
// ft[g',k,e,h] = sum_g conj(B[g,g']) f[g,k,e,h]
Tensor bridge_coordinates(const Tensor& f, const ClassicalStructure& bridge) {
  if (bridge.is_computational()) return f;
  const Tensor bc = tensor_from_matrix(bridge.basis).conjugated();
  const Tensor t = contract(bc, f, {{0, 0}});  // axes (g', k, e, h)
  return t;
}

// Slice f at fixed bridge index g: axes (k, e, h).
Tensor bridge_slice(const Tensor& f, std::size_t g) {
  const std::size_t out_d = f.shape()[1], e_d = f.shape()[2],
                    in_d = f.shape()[3];
  Tensor s({out_d, e_d, in_d});
  const std::size_t block = out_d * e_d * in_d;
  for (std::size_t i = 0; i < block; ++i) s[i] = f[g * block + i];
  return s;
}

}  // namespace

DHMap dh_map_from_generator(const Tensor& f, std::size_t g_dim,
                            std::size_t e_dim,
                            const ClassicalStructure& bridge) {
  if (f.rank() != 4) fail("dh_map_from_generator: f must have axes (g,k,e,h)");
  if (f.shape()[0] != g_dim || f.shape()[2] != e_dim)
    fail("dh_map_from_generator: f extents do not match g_dim/e_dim");
  if (bridge.dim != g_dim)
    fail("dh_map_from_generator: bridge dimension mismatch");
  const std::size_t out_d = f.shape()[1], in_d = f.shape()[3];

  const Tensor ft = bridge_coordinates(f, bridge);
  Tensor acc(map_shape(out_d, in_d));
  for (std::size_t g = 0; g < g_dim; ++g) {
    const Tensor fg = bridge_slice(ft, g);
    // H[k1,h1,k2,h2] = sum_e conj(f[g,k1,e,h1]) f[g,k2,e,h2]
    const Tensor h = contract(fg.conjugated(), fg, {{1, 1}});
    const Tensor block = outer(h, h.conjugated());
    // (a',a,b',b,c',c,d',d) -> (a',b',c',d',a,b,c,d)
    acc += rearrange(block, {0, 2, 4, 6, 1, 3, 5, 7}, false);
  }
  return DHMap(in_d, out_d, std::move(acc),
               GeneratorForm{f, g_dim, e_dim, bridge});
}

DHMap doubled_map(const CMat& v) {
  const auto out_d = static_cast<std::size_t>(v.rows());
  const auto in_d = static_cast<std::size_t>(v.cols());
  Tensor f({1, out_d, 1, in_d});
  for (std::size_t k = 0; k < out_d; ++k)
    for (std::size_t h = 0; h < in_d; ++h)
      f[k * in_d + h] = v(static_cast<Eigen::Index>(k),
                          static_cast<Eigen::Index>(h));
  return dh_map_from_generator(f, 1, 1, computational_structure(1));
}

DHMap identity_dh_map(std::size_t d) {
  if (d == 0) fail("identity_dh_map: dimension must be positive");
  Tensor t(map_shape(d, d));
  const std::size_t d4 = d * d * d * d;
  for (std::size_t i = 0; i < d4; ++i) t[i * d4 + i] = 1.0;
  return DHMap(d, d, std::move(t));
}

DHState random_dh_state(std::size_t d, std::size_t members,
                        std::uint64_t seed) {
  if (d == 0) fail("random_dh_state: dimension must be positive");
  if (members == 0) fail("random_dh_state: at least one member required");
  Rng rng(seed);
  std::vector<CMat> family;
  family.reserve(members);
  for (std::size_t g = 0; g < members; ++g) {
    const CMat gm = gaussian_matrix(d, d, rng);
    family.push_back(gm * gm.adjoint());
  }
  DHState state = dh_state_from_psd_family(family);
  const double f = forest_effect(state);
  state.tensor *= cplx(1.0 / f, 0.0);
  const double scale = 1.0 / std::sqrt(f);
  for (CMat& m : state.certificate) m *= scale;
  return state;
}

DHState dh_apply(const DHMap& map, const DHState& state) {
  if (map.in_dim != state.dim) fail("dh_apply: dimension mismatch");
  Tensor out = contract(map.tensor, state.tensor, kPlugPairs);

  std::vector<CMat> certs;
  if (map.generator && state.has_certificate()) {
    // K^{g,h} = sum_e conj(G_e) N^h G_e^T with (G_e)[k,h] = f~[g,k,e,h];
    // the pushed-forward family certifies the output.
    const GeneratorForm& gen = *map.generator;
    const Tensor ft = bridge_coordinates(gen.f, gen.bridge);
    const std::size_t out_d = map.out_dim, in_d = map.in_dim;
    for (std::size_t g = 0; g < gen.g_dim; ++g) {
      std::vector<CMat> ge(gen.e_dim, CMat::Zero(out_d, in_d));
      for (std::size_t e = 0; e < gen.e_dim; ++e)
        for (std::size_t k = 0; k < out_d; ++k)
          for (std::size_t h = 0; h < in_d; ++h)
            ge[e](static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(h)) =
                ft[((g * out_d + k) * gen.e_dim + e) * in_d + h];
      for (const CMat& n : state.certificate) {
        CMat k = CMat::Zero(out_d, out_d);
        for (const CMat& m : ge) k += m.conjugate() * n * m.transpose();
        certs.push_back(std::move(k));
      }
    }
  }
  return DHState(map.out_dim, std::move(out), std::move(certs));
}

DHMap dh_compose(const DHMap& second, const DHMap& first) {
  if (first.out_dim != second.in_dim) fail("dh_compose: dimension mismatch");
  Tensor t = contract(second.tensor, first.tensor, kPlugPairs);
  return DHMap(first.in_dim, second.out_dim, std::move(t));
}

DHMap dh_tensor(const DHMap& a, const DHMap& b) {
  Tensor t = outer(a.tensor, b.tensor);
  t = rearrange(t, {0, 8, 1, 9, 2, 10, 3, 11, 4, 12, 5, 13, 6, 14, 7, 15},
                false);
  const std::size_t od = a.out_dim * b.out_dim, id = a.in_dim * b.in_dim;
  return DHMap(id, od, t.reshaped(map_shape(od, id)));
}

DHState dh_tensor(const DHState& a, const DHState& b) {
  Tensor t = outer(a.tensor, b.tensor);
  t = rearrange(t, {0, 4, 1, 5, 2, 6, 3, 7}, false);
  const std::size_t d = a.dim * b.dim;
  std::vector<CMat> certs;
  if (a.has_certificate() && b.has_certificate())
    for (const CMat& ma : a.certificate)
      for (const CMat& mb : b.certificate) certs.push_back(kron(ma, mb));
  return DHState(d, t.reshaped(state_shape(d)), std::move(certs));
}

EffectTensor forest_tensor(std::size_t d) {
  Tensor t(state_shape(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t c = 0; c < d; ++c)
      t.at({a, a, c, c}) = 1.0;
  return {d, std::move(t), EffectKind::Forest};
}

EffectTensor tree_on_bridge_tensor(const ClassicalStructure& z) {
  const std::size_t d = z.dim;
  Tensor t(state_shape(d));
  if (z.is_computational()) {
    for (std::size_t x = 0; x < d; ++x) t.at({x, x, x, x}) = 1.0;
  } else {
    // E[j,k,l,m] = sum_x conj(U[j,x]) U[k,x] U[l,x] conj(U[m,x]):
    // pairing a state with E evaluates sum_x |<psi_x| M |psi_x>|^2 terms.
    const CMat& u = z.basis;
    std::size_t off = 0;
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
          for (std::size_t m = 0; m < d; ++m, ++off) {
            cplx s = 0.0;
            for (std::size_t x = 0; x < d; ++x)
              s += std::conj(u(j, x)) * u(k, x) * u(l, x) * std::conj(u(m, x));
            t[off] = s;
          }
  }
  return {d, std::move(t), EffectKind::TreeOnBridge};
}

EffectTensor extension_tensor(const ClassicalStructure& z) {
  EffectTensor forest = forest_tensor(z.dim);
  const EffectTensor tree = tree_on_bridge_tensor(z);
  forest.tensor -= tree.tensor;
  return {z.dim, std::move(forest.tensor), EffectKind::Extension};
}

EffectTensor effect_of_state(const DHState& state) {
  return {state.dim, state.tensor.conjugated(), EffectKind::DaggerOfState};
}

double pair_effect(const EffectTensor& effect, const DHState& state,
                   double tol) {
  if (effect.dim != state.dim) fail("pair_effect: dimension mismatch");
  cplx s = 0.0;
  std::span<const cplx> e = effect.tensor.data();
  std::span<const cplx> r = state.tensor.data();
  for (std::size_t i = 0; i < e.size(); ++i) s += e[i] * r[i];
  if (std::abs(s.imag()) > tol)
    throw std::domain_error("pair_effect: imaginary residue above tolerance");
  return s.real();
}

double forest_effect(const DHState& state, double tol) {
  return pair_effect(forest_tensor(state.dim), state, tol);
}

double tree_on_bridge_effect(const DHState& state, const ClassicalStructure& z,
                             double tol) {
  if (z.dim != state.dim) fail("tree_on_bridge_effect: dimension mismatch");
  return pair_effect(tree_on_bridge_tensor(z), state, tol);
}

double extension_effect(const DHState& state, const ClassicalStructure& z,
                        double tol) {
  if (z.dim != state.dim) fail("extension_effect: dimension mismatch");
  const double v = pair_effect(extension_tensor(z), state, tol);
  if (v < -tol)
    throw std::domain_error("extension_effect: negative value beyond tolerance");
  return v;
}

bool is_normalised_map(const DHMap& map, double tol) {
  const EffectTensor w = forest_tensor(map.out_dim);
  const Tensor pulled =
      contract(w.tensor, map.tensor, {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  return pulled.max_abs_diff(forest_tensor(map.in_dim).tensor) <= tol;
}

double SymmetryReport::max() const {
  return std::max({column_swap_dev, row_swap_dev, rotation_dev});
}

SymmetryReport check_symmetry(const DHState& state) {
  const std::size_t d = state.dim;
  const Tensor& t = state.tensor;
  SymmetryReport rep;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t e = 0; e < d; ++e) {
          const cplx v = t.at({a, b, c, e});
          rep.column_swap_dev = std::max(
              rep.column_swap_dev, std::abs(std::conj(v) - t.at({b, a, e, c})));
          rep.row_swap_dev = std::max(
              rep.row_swap_dev, std::abs(std::conj(v) - t.at({c, e, a, b})));
          rep.rotation_dev = std::max(rep.rotation_dev,
                                      std::abs(v - t.at({e, c, b, a})));
        }
  return rep;
}

DHState rotate_state(const DHState& state, const ClassicalStructure& z) {
  if (z.dim != state.dim) fail("rotate_state: dimension mismatch");
  if (z.is_computational()) return state;
  const Tensor u = tensor_from_matrix(z.basis);
  const Tensor uc = u.conjugated();
  // Contract leg 0 four times; each result appends the rotated leg last, so
  // the axis order is restored after the fourth application. Legs (0,3) take
  // conj(U), legs (1,2) take U: certificates transform as M -> U^dag M U.
  Tensor cur = contract(state.tensor, uc, {{0, 0}});
  cur = contract(cur, u, {{0, 0}});
  cur = contract(cur, u, {{0, 0}});
  cur = contract(cur, uc, {{0, 0}});
  std::vector<CMat> certs;
  certs.reserve(state.certificate.size());
  for (const CMat& m : state.certificate)
    certs.push_back(z.basis.adjoint() * m * z.basis);
  return DHState(state.dim, std::move(cur), std::move(certs));
}

// --- component census -------------------------------------------------

namespace {

using Tuple4 = std::array<std::size_t, 4>;

Tuple4 act_column_swap(const Tuple4& t) { return {t[1], t[0], t[3], t[2]}; }
Tuple4 act_row_swap(const Tuple4& t) { return {t[2], t[3], t[0], t[1]}; }
Tuple4 act_rotation(const Tuple4& t) { return {t[3], t[2], t[1], t[0]}; }

struct OrbitInfo {
  std::set<Tuple4> members;
  bool conj_stabilized = false;   // fixed by a conjugating symmetry
  bool trans_stabilized = false;  // fixed by the self-transposing symmetry
};

OrbitInfo orbit_of(const Tuple4& t) {
  OrbitInfo info;
  const Tuple4 c1 = act_column_swap(t), c2 = act_row_swap(t),
               r = act_rotation(t);
  info.members = {t, c1, c2, r};
  info.conj_stabilized = (c1 == t) || (c2 == t);
  info.trans_stabilized = (r == t);
  return info;
}

std::size_t params_of_orbit(const OrbitInfo& info) {
  // A conjugating stabilizer forces the component real; otherwise the orbit
  // carries one free complex value.
  return info.conj_stabilized ? 1 : 2;
}

std::size_t falling_factorial(std::size_t d, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (d < i + 1) return 0;
    r *= d - i;
  }
  return r;
}

Tuple4 pattern_representative(const std::string& pattern) {
  Tuple4 rep{};
  for (std::size_t i = 0; i < 4; ++i)
    rep[i] = static_cast<std::size_t>(pattern[i] - 'a');
  return rep;
}

std::size_t distinct_letters(const std::string& pattern) {
  std::set<char> s(pattern.begin(), pattern.end());
  return s.size();
}

}  // namespace

const std::vector<std::string>& component_patterns() {
  static const std::vector<std::string> patterns = {
      "aaaa",
      "aaab", "aaba", "abaa", "abbb", "aabb", "abab", "abba",
      "aabc", "abac", "abca", "abcb", "abbc", "abcc",
      "abcd"};
  return patterns;
}

std::string pattern_of(std::size_t a, std::size_t b, std::size_t c,
                       std::size_t d) {
  const Tuple4 t{a, b, c, d};
  std::string s;
  std::vector<std::size_t> seen;
  for (std::size_t v : t) {
    auto it = std::find(seen.begin(), seen.end(), v);
    if (it == seen.end()) {
      seen.push_back(v);
      it = std::prev(seen.end());
    }
    s.push_back(static_cast<char>('a' + (it - seen.begin())));
  }
  return s;
}

OrbitCensus orbit_census(std::size_t d) {
  if (d == 0) fail("orbit_census: dimension must be positive");
  OrbitCensus census;
  census.dim = d;

  for (const std::string& pattern : component_patterns()) {
    const Tuple4 rep = pattern_representative(pattern);
    const OrbitInfo info = orbit_of(rep);
    const std::size_t orbit_size = info.members.size();
    std::size_t members_in_class = 0;
    for (const Tuple4& m : info.members)
      if (pattern_of(m[0], m[1], m[2], m[3]) == pattern) ++members_in_class;

    OrbitClassRecord rec;
    rec.pattern = pattern;
    rec.component_count = falling_factorial(d, distinct_letters(pattern));
    rec.orbit_size = orbit_size;
    rec.orbit_count = rec.component_count / members_in_class;
    if (orbit_size == 1)
      rec.stabilizer = "full";
    else if (info.conj_stabilized)
      rec.stabilizer = "conjugating";
    else if (info.trans_stabilized)
      rec.stabilizer = "transposing";
    else
      rec.stabilizer = "trivial";
    // Parameters of an orbit are attributed evenly over the classes it
    // meets: params * (components here) / (orbit size).
    rec.real_params =
        params_of_orbit(info) * rec.component_count / orbit_size;
    census.classes.push_back(std::move(rec));
  }

  // Direct enumeration over all d^4 tuples, counting each orbit at its
  // lexicographically least member.
  std::size_t orbits = 0, total = 0;
  Tuple4 t{};
  for (t[0] = 0; t[0] < d; ++t[0])
    for (t[1] = 0; t[1] < d; ++t[1])
      for (t[2] = 0; t[2] < d; ++t[2])
        for (t[3] = 0; t[3] < d; ++t[3]) {
          const OrbitInfo info = orbit_of(t);
          if (*info.members.begin() != t) continue;
          ++orbits;
          total += params_of_orbit(info);
        }
  census.orbit_count = orbits;
  census.census_total = total;
  census.burnside_orbit_count = (d * d * d * d + 3 * d * d) / 4;

  const double dd = static_cast<double>(d);
  census.formula_value =
      0.5 * (dd * dd * dd * dd - 3.0 * dd * dd * dd + 7.0 * dd * dd - 3.0 * dd);
  return census;
}

std::size_t span_rank(std::size_t d, std::size_t samples, std::uint64_t seed) {
  if (d == 0) fail("span_rank: dimension must be positive");
  const std::size_t d4 = d * d * d * d;
  if (samples < 2 * d4) fail("span_rank: need at least 2*d^4 samples");
  Rng master(seed);
  RMatD stack(samples, 2 * d4);
  for (std::size_t s = 0; s < samples; ++s) {
    const DHState st = random_dh_state(d, 2, master.raw());
    for (std::size_t i = 0; i < d4; ++i) {
      stack(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(i)) =
          st.tensor[i].real();
      stack(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(d4 + i)) =
          st.tensor[i].imag();
    }
  }
  Eigen::BDCSVD<RMatD> svd(stack);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double cutoff = 1e-8 * sv(0);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return rank;
}

}  // namespace dhc
