// Acceptance suite: runs every gate criterion at its pinned tolerance and
// prints one pass/fail line each. Exits non-zero when any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dhc/interference.hpp"

using namespace dhc;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

CMat random_unitary(std::size_t d, Rng& rng) {
  Eigen::HouseholderQR<CMat> qr(gaussian_matrix(d, d, rng));
  CMat q = qr.householderQ();
  const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < q.cols(); ++i) {
    const cplx v = r(i, i);
    if (std::abs(v) > 0) q.col(i) *= v / std::abs(v);
  }
  return q;
}

bool slit_probabilities(std::string& detail) {
  double max_dev = 0.0;
  for (std::size_t d = 1; d <= 6; ++d) {
    const double d4 = std::pow(static_cast<double>(d), 4);
    for (std::size_t mask = 1; mask < (1u << d); ++mask) {
      std::vector<std::size_t> labels;
      for (std::size_t i = 0; i < d; ++i)
        if (mask & (1u << i)) labels.push_back(i + 1);
      const SlitConfig cfg(d, labels);
      const double k = static_cast<double>(cfg.count());
      max_dev = std::max(
          max_dev, std::abs(slit_probability(cfg) - k * k * k * k / d4));
    }
  }
  const double p1 = slit_probability(SlitConfig::leading(3, 1));
  const double p2 = slit_probability(SlitConfig::leading(3, 2));
  const double p3 = slit_probability(SlitConfig::leading(3, 3));
  max_dev = std::max({max_dev, std::abs(p1 - 1.0 / 81.0),
                      std::abs(p2 - 16.0 / 81.0), std::abs(p3 - 1.0)});
  detail = "max |P - (#U)^4/d^4| = " + fmt(max_dev);
  return max_dev <= 1e-12;
}

bool third_order(std::string& detail) {
  const double lhs = slit_probability(SlitConfig::leading(3, 3));
  double rhs = 0.0;
  for (std::size_t mask = 1; mask < 8u; ++mask) {
    std::vector<std::size_t> labels;
    for (std::size_t i = 0; i < 3; ++i)
      if (mask & (1u << i)) labels.push_back(i + 1);
    if (labels.size() == 3) continue;
    const double sign = labels.size() == 2 ? 1.0 : -1.0;
    rhs += sign * slit_probability(SlitConfig(3, labels));
  }
  const double sorkin = sorkin_interference(SlitConfig::leading(3, 3));
  const bool ok = std::abs(lhs - 81.0 / 81.0) <= 1e-12 &&
                  std::abs(rhs - 45.0 / 81.0) <= 1e-12 &&
                  std::abs(sorkin - 36.0 / 81.0) <= 1e-12 &&
                  std::abs((lhs - rhs) - sorkin) <= 1e-12;
  detail = "lhs 81/81, rhs 45/81, I3 = " + fmt(sorkin);
  return ok;
}

bool fourth_order(std::string& detail) {
  const double lhs = slit_probability(SlitConfig::leading(4, 4));
  double rhs = 0.0;
  for (std::size_t mask = 1; mask < 16u; ++mask) {
    std::vector<std::size_t> labels;
    for (std::size_t i = 0; i < 4; ++i)
      if (mask & (1u << i)) labels.push_back(i + 1);
    if (labels.size() == 4) continue;
    const double sign = labels.size() % 2 == 1 ? 1.0 : -1.0;
    rhs += sign * slit_probability(SlitConfig(4, labels));
  }
  const double sorkin = sorkin_interference(SlitConfig::leading(4, 4));
  const bool ok = std::abs(lhs - 1.0) <= 1e-12 &&
                  std::abs(rhs - 232.0 / 256.0) <= 1e-12 &&
                  std::abs(sorkin - 24.0 / 256.0) <= 1e-12;
  detail = "lhs 256/256, rhs 232/256, I4 = " + fmt(sorkin);
  return ok;
}

bool fifth_order(std::string& detail) {
  const double i5 = sorkin_interference(SlitConfig::leading(5, 5));
  double rhs = 0.0;
  for (std::size_t mask = 1; mask < 32u; ++mask) {
    std::vector<std::size_t> labels;
    for (std::size_t i = 0; i < 5; ++i)
      if (mask & (1u << i)) labels.push_back(i + 1);
    if (labels.size() == 5) continue;
    const double sign = labels.size() % 2 == 0 ? 1.0 : -1.0;
    rhs += sign * slit_probability(SlitConfig(5, labels));
  }
  const double lhs = slit_probability(SlitConfig::leading(5, 5));
  const double i6 = sorkin_interference(SlitConfig::leading(6, 6));
  detail = "I5 = " + fmt(i5) + ", I6 = " + fmt(i6);
  return std::abs(i5) <= 1e-12 && std::abs(lhs - 1.0) <= 1e-12 &&
         std::abs(rhs - 1.0) <= 1e-12 && std::abs(i6) <= 1e-12;
}

bool idempotents(std::string& detail) {
  double worst = 0.0;
  for (std::size_t d = 2; d <= 5; ++d) {
    for (const ClassicalStructure& z :
         {computational_structure(d), fourier_structure(d)}) {
      const DHMap dec = decoh_map(z, d);
      const DHMap hyp = hypdecoh_map(z, d);
      worst = std::max(worst,
                       dh_compose(dec, dec).tensor.max_abs_diff(dec.tensor));
      worst = std::max(worst,
                       dh_compose(hyp, hyp).tensor.max_abs_diff(hyp.tensor));
      worst = std::max(worst,
                       dh_compose(dec, hyp).tensor.max_abs_diff(dec.tensor));
    }
    // delta-pattern level: exact at the computational structure
    const ClassicalStructure zc = computational_structure(d);
    if (dh_compose(decoh_map(zc, d), hypdecoh_map(zc, d))
            .tensor.max_abs_diff(decoh_map(zc, d).tensor) != 0.0)
      worst = 1.0;
  }
  detail = "max deviation = " + fmt(worst);
  return worst <= 1e-12;
}

bool discard_algebra(std::string& detail) {
  double worst_exact = 0.0, worst_tree = 0.0;
  for (std::size_t d = 2; d <= 5; ++d) {
    const ClassicalStructure z = computational_structure(d);
    const Tensor pulled =
        contract(forest_tensor(d).tensor, hypdecoh_map(z, d).tensor,
                 {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    worst_exact = std::max(worst_exact,
                           pulled.max_abs_diff(tree_on_bridge_tensor(z).tensor));
    worst_tree = std::max(
        worst_tree, std::abs(tree_on_bridge_effect(uniform_state(d), z) -
                             1.0 / static_cast<double>(d)));
  }
  detail = "tensor identity dev = " + fmt(worst_exact) +
           ", tree(uniform) dev = " + fmt(worst_tree);
  return worst_exact == 0.0 && worst_tree <= 1e-12;
}

bool quantum_recovery(std::string& detail) {
  Rng rng(2024);
  double round_trip = 0.0;
  for (std::size_t d = 2; d <= 4; ++d) {
    const ClassicalStructure z = computational_structure(d);
    const DHMap hyp = hypdecoh_map(z, d);
    for (std::size_t t = 0; t < 200; ++t) {
      const DensityMatrix sigma =
          random_density_matrix(d, 1 + t % d, rng.raw());
      const CMat back = extract_components(
          dh_apply(hyp, quantum_lift_state(sigma, z)).tensor);
      round_trip =
          std::max(round_trip, (back - sigma.mat).cwiseAbs().maxCoeff());
    }
  }

  double psd_defect = 0.0;
  for (std::size_t t = 0; t < 500; ++t) {
    const std::size_t d = 2 + t % 3;
    const DHState s = random_dh_state(d, 1 + t % 3, rng.raw());
    const CMat sigma = extract_components(s.tensor);
    psd_defect = std::max(psd_defect, hermiticity_defect(sigma));
    psd_defect =
        std::max(psd_defect, std::max(0.0, -min_eigenvalue_hermitian(sigma)));
  }

  double functorial = 0.0;
  for (std::size_t t = 0; t < 10; ++t) {
    const std::size_t d = 2 + t % 2;
    const ClassicalStructure z = computational_structure(d);
    const DHMap hyp = hypdecoh_map(z, d);
    const DHMap a =
        dh_compose(hyp, dh_compose(doubled_map(random_unitary(d, rng)), hyp));
    const DHMap b = dh_compose(
        hyp, dh_compose(doubled_map(gaussian_matrix(d, d, rng)), hyp));
    const CMat composed = quantum_extract_map(dh_compose(a, b));
    const CMat ca = quantum_extract_map(a), cb = quantum_extract_map(b);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        CMat unit = CMat::Zero(d, d);
        unit(i, j) = 1.0;
        const CMat lhs = apply_choi(composed, d, d, unit);
        const CMat rhs = apply_choi(ca, d, d, apply_choi(cb, d, d, unit));
        functorial = std::max(functorial, (lhs - rhs).cwiseAbs().maxCoeff());
      }
  }

  detail = "round trip " + fmt(round_trip) + ", psd defect " +
           fmt(psd_defect) + ", functoriality " +
           fmt(functorial);
  return round_trip <= 1e-8 && psd_defect <= 1e-9 && functorial <= 1e-9;
}

bool classical_recovery(std::string& detail) {
  Rng rng(2025);
  double round_trip = 0.0, functorial = 0.0;
  for (std::size_t t = 0; t < 100; ++t) {
    const std::size_t d = 2 + t % 3;
    const ClassicalStructure z = computational_structure(d);
    RMatD m(d, d), m2(d, d);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        m(i, j) = rng.uniform();
        m2(i, j) = rng.uniform();
      }
    const StochasticExtract back =
        classical_extract(classical_embed(m, z, z), z, z);
    round_trip = std::max(round_trip, (back.mat - m).cwiseAbs().maxCoeff());

    const StochasticExtract prod = classical_extract(
        dh_compose(classical_embed(m, z, z), classical_embed(m2, z, z)), z, z);
    functorial =
        std::max(functorial, (prod.mat - m * m2).cwiseAbs().maxCoeff());
  }
  detail = "round trip " + fmt(round_trip) + ", functoriality " +
           fmt(functorial);
  return round_trip <= 1e-12 && functorial <= 1e-10;
}

bool causality(std::string& detail) {
  double forest_dev = 0.0;
  bool witnesses = true;
  for (std::size_t d = 2; d <= 4; ++d) {
    const CausalityReport rep = causality_witness(d, 500, 4000 + d);
    forest_dev = std::max(forest_dev, rep.forest_max_dev);
    witnesses = witnesses && rep.witnesses_pass;
  }
  detail = "forest dev " + fmt(forest_dev) +
           (witnesses ? ", witnesses found" : ", witnesses missing");
  return forest_dev <= 1e-10 && witnesses;
}

bool extension(std::string& detail) {
  Rng rng(2026);
  double most_negative = 0.0, uniform_dev = 0.0;
  for (std::size_t d = 2; d <= 4; ++d) {
    const ClassicalStructure z = computational_structure(d);
    for (std::size_t t = 0; t < 1000; ++t) {
      const DHState s = random_dh_state(d, 1 + t % 3, rng.raw());
      most_negative = std::min(most_negative, extension_effect(s, z));
    }
    uniform_dev = std::max(
        uniform_dev, std::abs(extension_effect(uniform_state(d), z) -
                              (1.0 - 1.0 / static_cast<double>(d))));
  }
  detail = "min value " + fmt(most_negative) + ", uniform dev " +
           fmt(uniform_dev);
  return most_negative >= -1e-10 && uniform_dev <= 1e-12;
}

bool symmetry(std::string& detail) {
  Rng rng(2027);
  double worst = 0.0;
  for (std::size_t t = 0; t < 1000; ++t) {
    const std::size_t d = 2 + t % 3;
    DHState s = random_dh_state(d, 1 + t % 4, rng.raw());
    if (t % 5 == 1)
      s = dh_apply(doubled_map(random_unitary(d, rng)), s);
    if (t % 5 == 3)
      s = dh_apply(hypdecoh_map(computational_structure(d), d), s);
    worst = std::max(worst, check_symmetry(s).max());
  }
  detail = "max relation deviation = " + fmt(worst);
  return worst <= 1e-9;
}

bool census_gate(std::string& detail) {
  for (std::size_t d = 1; d <= 6; ++d) {
    const OrbitCensus c = orbit_census(d);
    std::size_t components = 0;
    for (const auto& rec : c.classes) components += rec.component_count;
    if (components != d * d * d * d) {
      detail = "component totals broken at d = " + std::to_string(d);
      return false;
    }
    if (c.orbit_count != c.burnside_orbit_count) {
      detail = "orbit count mismatch at d = " + std::to_string(d);
      return false;
    }
  }
  const OrbitCensus c2 = orbit_census(2);
  // the formula value, the enumerated count and the sampled rank are
  // reported side by side; agreement between them is not asserted
  const std::size_t rank_once = span_rank(2, 64, 11);
  const std::size_t rank_doubled = span_rank(2, 128, 11);
  const std::size_t rank3_once = span_rank(3, 200, 11);
  const std::size_t rank3_doubled = span_rank(3, 400, 11);
  detail = "d=2: formula " + fmt(c2.formula_value) +
           ", census " + std::to_string(c2.census_total) + ", span " +
           std::to_string(rank_once);
  return rank_once == rank_doubled && rank3_once == rank3_doubled;
}

bool cross_theory(std::string& detail) {
  const double q3 = quantum_sorkin(3, 3);
  const double c2 = classical_sorkin(2, 2);
  detail = "quantum I3 = " + fmt(q3) + ", classical I2 = " + fmt(c2);
  return std::abs(q3) <= 1e-12 && std::abs(c2) <= 1e-12;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"slit probabilities (#U)^4/d^4 for d <= 6", slit_probabilities},
      {"third-order term 36/81 at d = 3", third_order},
      {"fourth-order term 24/256 at d = 4", fourth_order},
      {"fifth- and sixth-order terms vanish", fifth_order},
      {"decoh/hypdecoh idempotent, decoh factors", idempotents},
      {"discard algebra: forest o hypdecoh = tree", discard_algebra},
      {"quantum recovery round trip and functoriality", quantum_recovery},
      {"classical recovery round trip and functoriality", classical_recovery},
      {"causality: forest unique among discards", causality},
      {"extension effect nonnegative", extension},
      {"symmetry relations on generated states", symmetry},
      {"component census and span rank stability", census_gate},
      {"cross-theory: quantum I3 = 0, classical I2 = 0", cross_theory},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s  %2zu. %s  [%s]\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), detail.c_str());
    if (!ok) ++failures;
  }
  if (failures == 0)
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
