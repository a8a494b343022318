#include "dhc/interference.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace dhc {

SlitConfig::SlitConfig(std::size_t d, std::vector<std::size_t> labels)
    : dim(d), slits(std::move(labels)) {
  if (d == 0) fail("slit config: dimension must be positive");
  if (slits.empty()) fail("slit config: subset must be non-empty");
  std::sort(slits.begin(), slits.end());
  for (std::size_t i = 0; i < slits.size(); ++i) {
    if (slits[i] < 1 || slits[i] > d) fail("slit config: label out of range");
    if (i > 0 && slits[i] == slits[i - 1]) fail("slit config: repeated label");
  }
}

SlitConfig SlitConfig::leading(std::size_t d, std::size_t k) {
  std::vector<std::size_t> labels(k);
  for (std::size_t i = 0; i < k; ++i) labels[i] = i + 1;
  return SlitConfig(d, std::move(labels));
}

DHMap projector(const SlitConfig& cfg) {
  CMat mask = CMat::Zero(cfg.dim, cfg.dim);
  for (std::size_t x : cfg.slits) {
    const auto i = static_cast<Eigen::Index>(x - 1);
    mask(i, i) = 1.0;
  }
  return doubled_map(mask);
}

DHState uniform_state(std::size_t d) {
  if (d == 0) fail("uniform_state: dimension must be positive");
  return dh_state_from_psd_family({CMat::Ones(d, d) / static_cast<double>(d)});
}

double slit_probability(const SlitConfig& cfg) {
  const DHState plus = uniform_state(cfg.dim);
  const DHState projected = dh_apply(projector(cfg), plus);
  return pair_effect(effect_of_state(plus), projected);
}

std::map<std::string, std::size_t> shape_census(const SlitConfig& cfg) {
  const std::size_t k = cfg.count();
  std::map<std::string, std::size_t> counts;
  for (const std::string& pattern : component_patterns()) {
    std::size_t distinct = 0;
    for (char ch : pattern) distinct = std::max(distinct, std::size_t(ch - 'a' + 1));
    std::size_t n = 1;
    for (std::size_t i = 0; i < distinct; ++i) n *= (k >= i + 1) ? k - i : 0;
    counts[pattern] = n;
  }
  return counts;
}

namespace {

// All non-empty sub-subsets of cfg, signed by (-1)^(#U - #V).
double signed_subset_sum(const SlitConfig& cfg,
                         const std::function<double(const SlitConfig&)>& prob) {
  const std::size_t k = cfg.count();
  double total = 0.0;
  for (std::size_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<std::size_t> labels;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) labels.push_back(cfg.slits[i]);
    const std::size_t sz = labels.size();
    const double sign = ((k - sz) % 2 == 0) ? 1.0 : -1.0;
    total += sign * prob(SlitConfig(cfg.dim, std::move(labels)));
  }
  return total;
}

}  // namespace

double sorkin_interference(const SlitConfig& cfg) {
  return signed_subset_sum(cfg, slit_probability);
}

bool InterferenceReport::passes_invariants(double tol) const {
  const double d4 = std::pow(static_cast<double>(dim), 4);
  for (const auto& [k, p] : probabilities) {
    if (p < -tol || p > 1.0 + tol) return false;
    const double expected = std::pow(static_cast<double>(k), 4) / d4;
    if (std::abs(p - expected) > tol) return false;
  }
  if (max_order == dim) {
    auto it = probabilities.find(dim);
    if (it == probabilities.end() || std::abs(it->second - 1.0) > tol)
      return false;
  }
  for (const auto& [k, counts] : shape_counts) {
    std::size_t total = 0;
    for (const auto& [pattern, n] : counts) total += n;
    if (total != k * k * k * k) return false;
  }
  for (const auto& [k, v] : sorkin)
    if (k >= 5 && std::abs(v) > tol) return false;
  return true;
}

InterferenceReport hierarchy_report(std::size_t d, std::size_t kmax) {
  if (kmax == 0 || kmax > d) fail("hierarchy_report: need 1 <= kmax <= dim");
  InterferenceReport rep;
  rep.dim = d;
  rep.max_order = kmax;
  for (std::size_t k = 1; k <= kmax; ++k) {
    const SlitConfig cfg = SlitConfig::leading(d, k);
    rep.probabilities[k] = slit_probability(cfg);
    rep.sorkin[k] = sorkin_interference(cfg);
    rep.shape_counts[k] = shape_census(cfg);
  }
  const double d4 = std::pow(static_cast<double>(d), 4);
  rep.order3_interference =
      kmax >= 3 && std::abs(rep.sorkin[3]) > 1.0 / (2.0 * d4);
  rep.order4_interference =
      kmax >= 4 && std::abs(rep.sorkin[4]) > 1.0 / (2.0 * d4);
  rep.higher_orders_vanish = true;
  for (const auto& [k, v] : rep.sorkin)
    if (k >= 5 && std::abs(v) > 1e-12) rep.higher_orders_vanish = false;
  return rep;
}

double quantum_sorkin(std::size_t d, std::size_t order) {
  if (order == 0 || order > d) fail("quantum_sorkin: need 1 <= order <= dim");
  const ClassicalStructure z = computational_structure(d);
  const DHMap hyp = hypdecoh_map(z, d);
  const DHState plus = uniform_state(d);
  const CMat sigma_plus =
      quantum_extract_state(dh_apply(hyp, plus)).mat;
  const auto prob = [&](const SlitConfig& cfg) {
    const DHMap sandwiched =
        dh_compose(hyp, dh_compose(projector(cfg), hyp));
    const CMat choi_matrix = quantum_extract_map(sandwiched);
    const CMat out = apply_choi(choi_matrix, d, d, sigma_plus);
    // Quantum analogue of the state-effect pairing: tr(sigma^dag . out).
    return (sigma_plus.adjoint() * out).trace().real();
  };
  return signed_subset_sum(SlitConfig::leading(d, order), prob);
}

double classical_sorkin(std::size_t d, std::size_t order) {
  if (order == 0 || order > d) fail("classical_sorkin: need 1 <= order <= dim");
  const ClassicalStructure z = computational_structure(d);
  const DHMap dec = decoh_map(z, d);
  const DHState decohered = dh_apply(dec, uniform_state(d));
  const auto prob = [&](const SlitConfig& cfg) {
    const DHMap sandwiched = dh_compose(dec, dh_compose(projector(cfg), dec));
    return pair_effect(effect_of_state(decohered),
                       dh_apply(sandwiched, decohered));
  };
  return signed_subset_sum(SlitConfig::leading(d, order), prob);
}

}  // namespace dhc
