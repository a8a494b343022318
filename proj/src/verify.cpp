#include "dhc/verify.hpp"

#include <algorithm>
#include <cmath>

namespace dhc {

namespace {

double pick(double user_tol, double pinned) {
  return user_tol > 0.0 ? user_tol : pinned;
}

CMat random_unitary(std::size_t d, Rng& rng) {
  const CMat g = gaussian_matrix(d, d, rng);
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ();
  const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < q.cols(); ++i) {
    const cplx v = r(i, i);
    if (std::abs(v) > 0) q.col(i) *= v / std::abs(v);
  }
  return q;
}

ClassicalStructure random_structure(std::size_t d, Rng& rng) {
  return ClassicalStructure(d, random_unitary(d, rng), "random");
}

void causality_suite(VerifyReport& rep, double tol) {
  const CausalityReport cw = causality_witness(rep.dim, rep.trials, rep.seed);
  rep.checks.push_back({"forest_is_one_on_normalised_states",
                        cw.forest_max_dev,
                        cw.forest_max_dev <= pick(tol, 1e-10)});
  const double dinv = 1.0 / static_cast<double>(rep.dim);
  rep.checks.push_back(
      {"tree_on_bridge_witness_departs_from_one",
       std::abs(cw.tree_witness_value - dinv),
       std::abs(cw.tree_witness_value - 1.0) >= 0.1 &&
           std::abs(cw.tree_witness_value - dinv) <= pick(tol, 1e-10)});
  rep.checks.push_back(
      {"extension_witness_departs_from_one",
       std::abs(cw.extension_witness_value - (1.0 - dinv)),
       std::abs(cw.extension_witness_value - 1.0) >= 0.1 &&
           std::abs(cw.extension_witness_value - (1.0 - dinv)) <=
               pick(tol, 1e-10)});
}

void classical_suite(VerifyReport& rep, double tol) {
  Rng rng(rep.seed);
  const std::size_t d = rep.dim;
  const ClassicalStructure z = computational_structure(d);

  double round_trip = 0.0;
  for (std::size_t t = 0; t < rep.trials; ++t) {
    RMatD m(d, d);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = rng.uniform();
    const StochasticExtract back = classical_extract(classical_embed(m, z, z), z, z);
    round_trip = std::max(round_trip, (back.mat - m).cwiseAbs().maxCoeff());
  }
  rep.checks.push_back({"embed_extract_round_trip", round_trip,
                        round_trip <= pick(tol, 1e-12)});

  double functorial = 0.0;
  const std::size_t pair_trials = std::max<std::size_t>(1, rep.trials / 10);
  for (std::size_t t = 0; t < pair_trials; ++t) {
    RMatD m1(d, d), m2(d, d);
    for (Eigen::Index i = 0; i < m1.rows(); ++i)
      for (Eigen::Index j = 0; j < m1.cols(); ++j) {
        m1(i, j) = rng.uniform();
        m2(i, j) = rng.uniform();
      }
    const DHMap composed =
        dh_compose(classical_embed(m1, z, z), classical_embed(m2, z, z));
    const StochasticExtract got = classical_extract(composed, z, z);
    functorial =
        std::max(functorial, (got.mat - m1 * m2).cwiseAbs().maxCoeff());
  }
  rep.checks.push_back({"extraction_maps_composition_to_product", functorial,
                        functorial <= pick(tol, 1e-10)});

  const CMat u = random_unitary(d, rng);
  const DHMap dec = decoh_map(z, d);
  const DHMap sandwiched = dh_compose(dec, dh_compose(doubled_map(u), dec));
  const StochasticExtract su = classical_extract(sandwiched, z, z);
  double unitary_dev = 0.0;
  for (std::size_t y = 0; y < d; ++y)
    for (std::size_t x = 0; x < d; ++x)
      unitary_dev = std::max(
          unitary_dev,
          std::abs(su.mat(static_cast<Eigen::Index>(y),
                          static_cast<Eigen::Index>(x)) -
                   std::pow(std::abs(u(static_cast<Eigen::Index>(y),
                                       static_cast<Eigen::Index>(x))),
                            4)));
  rep.checks.push_back({"doubled_unitary_extracts_to_fourth_powers",
                        unitary_dev, unitary_dev <= pick(tol, 1e-10)});
}

// Superoperator matrix of a Choi-encoded channel, columns indexed by input
// matrix units.
CMat superop_from_choi(const CMat& c, std::size_t din, std::size_t dout) {
  CMat s(dout * dout, din * din);
  for (std::size_t i = 0; i < din; ++i)
    for (std::size_t j = 0; j < din; ++j) {
      CMat unit = CMat::Zero(din, din);
      unit(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
      const CMat out = apply_choi(c, din, dout, unit);
      for (std::size_t k = 0; k < dout; ++k)
        for (std::size_t l = 0; l < dout; ++l)
          s(static_cast<Eigen::Index>(k * dout + l),
            static_cast<Eigen::Index>(i * din + j)) =
              out(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l));
    }
  return s;
}

void quantum_suite(VerifyReport& rep, double tol) {
  Rng rng(rep.seed);
  const std::size_t d = rep.dim;
  const ClassicalStructure z = computational_structure(d);
  const DHMap hyp = hypdecoh_map(z, d);

  double round_trip = 0.0;
  for (std::size_t t = 0; t < rep.trials; ++t) {
    const DensityMatrix sigma =
        random_density_matrix(d, 1 + t % d, rng.raw());
    const DHState lifted = quantum_lift_state(sigma, z);
    const CMat back =
        extract_components(dh_apply(hyp, lifted).tensor);
    round_trip =
        std::max(round_trip, (back - sigma.mat).cwiseAbs().maxCoeff());
  }
  rep.checks.push_back({"lift_extract_round_trip", round_trip,
                        round_trip <= pick(tol, 1e-8)});

  double psd_defect = 0.0, trace_defect = 0.0;
  for (std::size_t t = 0; t < rep.trials; ++t) {
    const DHState st = random_dh_state(d, 1 + t % 3, rng.raw());
    const CMat sigma = extract_components(st.tensor);
    psd_defect = std::max(
        psd_defect, std::max(0.0, -min_eigenvalue_hermitian(sigma)));
    psd_defect = std::max(psd_defect, hermiticity_defect(sigma));
    trace_defect = std::max(
        trace_defect,
        std::abs(sigma.trace().real() - tree_on_bridge_effect(st, z)));
  }
  rep.checks.push_back({"extraction_is_psd", psd_defect,
                        psd_defect <= pick(tol, 1e-9)});
  rep.checks.push_back({"extraction_trace_is_tree_on_bridge", trace_defect,
                        trace_defect <= pick(tol, 1e-10)});

  double functorial = 0.0;
  const std::size_t pair_trials = std::max<std::size_t>(1, rep.trials / 20);
  for (std::size_t t = 0; t < pair_trials; ++t) {
    const DHMap a = dh_compose(hyp, dh_compose(doubled_map(random_unitary(d, rng)), hyp));
    const DHMap b = dh_compose(hyp, dh_compose(doubled_map(random_unitary(d, rng)), hyp));
    const CMat lhs =
        superop_from_choi(quantum_extract_map(dh_compose(a, b)), d, d);
    const CMat rhs = superop_from_choi(quantum_extract_map(a), d, d) *
                     superop_from_choi(quantum_extract_map(b), d, d);
    functorial = std::max(functorial, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  rep.checks.push_back({"sandwiched_extraction_is_functorial", functorial,
                        functorial <= pick(tol, 1e-9)});

  const CMat hyp_choi = quantum_extract_map(hyp);
  CMat identity_choi = CMat::Zero(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      identity_choi(static_cast<Eigen::Index>(i * d + i),
                    static_cast<Eigen::Index>(j * d + j)) = 1.0;
  const double idem_dev = (hyp_choi - identity_choi).cwiseAbs().maxCoeff();
  rep.checks.push_back({"hypdecoh_extracts_to_identity_channel", idem_dev,
                        idem_dev <= pick(tol, 1e-12)});
}

void idempotence_suite(VerifyReport& rep, double tol) {
  Rng rng(rep.seed);
  const std::size_t d = rep.dim;
  std::vector<ClassicalStructure> structures = {computational_structure(d),
                                                fourier_structure(d),
                                                random_structure(d, rng)};
  double decoh_dev = 0.0, hyp_dev = 0.0, factor_dev = 0.0;
  for (const ClassicalStructure& z : structures) {
    const DHMap dec = decoh_map(z, d);
    const DHMap hyp = hypdecoh_map(z, d);
    decoh_dev = std::max(
        decoh_dev, dh_compose(dec, dec).tensor.max_abs_diff(dec.tensor));
    hyp_dev = std::max(hyp_dev,
                       dh_compose(hyp, hyp).tensor.max_abs_diff(hyp.tensor));
    factor_dev = std::max(
        factor_dev, dh_compose(dec, hyp).tensor.max_abs_diff(dec.tensor));
  }
  rep.checks.push_back({"decoh_is_idempotent", decoh_dev,
                        decoh_dev <= pick(tol, 1e-12)});
  rep.checks.push_back({"hypdecoh_is_idempotent", hyp_dev,
                        hyp_dev <= pick(tol, 1e-12)});
  rep.checks.push_back({"decoh_factors_through_hypdecoh", factor_dev,
                        factor_dev <= pick(tol, 1e-12)});

  double discard_dev = 0.0;
  for (const ClassicalStructure& z : structures) {
    const DHMap hyp = hypdecoh_map(z, d);
    const Tensor pulled =
        contract(forest_tensor(d).tensor, hyp.tensor,
                 {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    discard_dev = std::max(
        discard_dev, pulled.max_abs_diff(tree_on_bridge_tensor(z).tensor));
  }
  rep.checks.push_back({"forest_after_hypdecoh_is_tree_on_bridge",
                        discard_dev, discard_dev <= pick(tol, 1e-12)});
}

void symmetry_suite(VerifyReport& rep, double tol) {
  Rng rng(rep.seed);
  const std::size_t d = rep.dim;
  double sym_dev = 0.0, diag_neg = 0.0, vertical_imag = 0.0;
  for (std::size_t t = 0; t < rep.trials; ++t) {
    const DHState st = random_dh_state(d, 1 + t % 4, rng.raw());
    sym_dev = std::max(sym_dev, check_symmetry(st).max());
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y) {
        const cplx h = st.tensor.at({x, x, y, y});
        diag_neg = std::max(diag_neg, std::max(-h.real(), std::abs(h.imag())));
        vertical_imag =
            std::max(vertical_imag, std::abs(st.tensor.at({x, y, x, y}).imag()));
      }
  }
  rep.checks.push_back({"generated_states_satisfy_symmetry", sym_dev,
                        sym_dev <= pick(tol, 1e-9)});
  rep.checks.push_back({"diagonal_components_real_nonnegative", diag_neg,
                        diag_neg <= pick(tol, 1e-10)});
  rep.checks.push_back({"vertical_pair_components_real", vertical_imag,
                        vertical_imag <= pick(tol, 1e-10)});
}

void extension_suite(VerifyReport& rep, double tol) {
  Rng rng(rep.seed);
  const std::size_t d = rep.dim;
  const ClassicalStructure z = computational_structure(d);
  double most_negative = 0.0;
  for (std::size_t t = 0; t < rep.trials; ++t) {
    const DHState st = random_dh_state(d, 1 + t % 3, rng.raw());
    most_negative =
        std::min(most_negative, extension_effect(st, z));
  }
  rep.checks.push_back({"extension_effect_nonnegative",
                        std::max(0.0, -most_negative),
                        most_negative >= -pick(tol, 1e-10)});
  const double on_uniform = extension_effect(uniform_state(d), z);
  const double expected = 1.0 - 1.0 / static_cast<double>(d);
  rep.checks.push_back({"extension_on_uniform_state",
                        std::abs(on_uniform - expected),
                        std::abs(on_uniform - expected) <= pick(tol, 1e-12)});
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "causality", "classical", "quantum",
      "idempotence", "symmetry", "extension", "all"};
  return names;
}

VerifyReport run_suite(const std::string& suite, std::size_t dim,
                       std::size_t trials, std::uint64_t seed, double tol) {
  if (dim == 0) fail("run_suite: dimension must be positive");
  if (trials == 0) fail("run_suite: trials must be positive");
  VerifyReport rep;
  rep.suite = suite;
  rep.dim = dim;
  rep.trials = trials;
  rep.seed = seed;
  if (suite == "causality") {
    causality_suite(rep, tol);
  } else if (suite == "classical") {
    classical_suite(rep, tol);
  } else if (suite == "quantum") {
    quantum_suite(rep, tol);
  } else if (suite == "idempotence") {
    idempotence_suite(rep, tol);
  } else if (suite == "symmetry") {
    symmetry_suite(rep, tol);
  } else if (suite == "extension") {
    extension_suite(rep, tol);
  } else if (suite == "all") {
    causality_suite(rep, tol);
    classical_suite(rep, tol);
    quantum_suite(rep, tol);
    idempotence_suite(rep, tol);
    symmetry_suite(rep, tol);
    extension_suite(rep, tol);
  } else {
    fail("run_suite: unknown suite '" + suite + "'");
  }
  return rep;
}

}  // namespace dhc
