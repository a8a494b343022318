#include "dhc/karoubi.hpp"

#include <cmath>
#include <stdexcept>

namespace dhc {

KaroubiObject KaroubiObject::identity(std::size_t d) {
  return {d, Kind::Identity, std::nullopt};
}

KaroubiObject KaroubiObject::decohered(ClassicalStructure z) {
  const std::size_t d = z.dim;
  return {d, Kind::Decoh, std::move(z)};
}

KaroubiObject KaroubiObject::hyperdecohered(ClassicalStructure z) {
  const std::size_t d = z.dim;
  return {d, Kind::HypDecoh, std::move(z)};
}

DHMap decoh_map(const ClassicalStructure& z, std::size_t d) {
  if (z.dim != d) fail("decoh_map: dimension mismatch");
  // Generator with the structure itself as bridge: f[g,k,0,h] =
  // conj(U[k,g]) U[h,g] compiles to sum_x (point state at x)(point effect
  // at x), the all-equal-diagonal restriction in z coordinates.
  Tensor f({d, d, 1, d});
  for (std::size_t g = 0; g < d; ++g)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t h = 0; h < d; ++h)
        f[(g * d + k) * d + h] =
            std::conj(z.basis(static_cast<Eigen::Index>(k),
                              static_cast<Eigen::Index>(g))) *
            z.basis(static_cast<Eigen::Index>(h), static_cast<Eigen::Index>(g));
  return dh_map_from_generator(f, d, 1, computational_structure(d));
}

DHMap hypdecoh_map(const ClassicalStructure& z, std::size_t d) {
  if (z.dim != d) fail("hypdecoh_map: dimension mismatch");
  const CMat& u = z.basis;
  Tensor acc({d, d, d, d, d, d, d, d});
  Tensor p({d, d, d, d}), e({d, d, d, d});
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      // Output pattern U[.,x] on legs (0,3) and conj(U[.,y]) on legs (1,2);
      // input pattern is its conjugate. At the computational structure this
      // is the [a=d][b=c] mask.
      std::size_t off = 0;
      for (std::size_t o1 = 0; o1 < d; ++o1)
        for (std::size_t o2 = 0; o2 < d; ++o2)
          for (std::size_t o3 = 0; o3 < d; ++o3)
            for (std::size_t o4 = 0; o4 < d; ++o4, ++off) {
              p[off] = u(o1, x) * std::conj(u(o2, y)) * std::conj(u(o3, y)) *
                       u(o4, x);
              e[off] = std::conj(p[off]);
            }
      acc += outer(p, e);
    }
  }
  return DHMap(d, d, std::move(acc));
}

EffectTensor object_discard(const KaroubiObject& obj) {
  switch (obj.kind) {
    case KaroubiObject::Kind::Identity:
      return forest_tensor(obj.dim);
    case KaroubiObject::Kind::Decoh:
    case KaroubiObject::Kind::HypDecoh:
      if (!obj.structure) fail("object_discard: missing classical structure");
      return tree_on_bridge_tensor(*obj.structure);
  }
  fail("object_discard: unknown object kind");
}

DHState point_state(const ClassicalStructure& z, std::size_t x) {
  if (x >= z.dim) fail("point_state: index out of range");
  const CVec psi = z.basis.col(static_cast<Eigen::Index>(x));
  return dh_state_from_psd_family({psi * psi.adjoint()});
}

StochasticExtract::StochasticExtract(std::size_t r, std::size_t c, RMatD m)
    : rows(r), cols(c), mat(std::move(m)) {
  if (mat.rows() != static_cast<Eigen::Index>(rows) ||
      mat.cols() != static_cast<Eigen::Index>(cols))
    fail("stochastic extract: shape mismatch");
  if (mat.minCoeff() < -1e-10)
    throw std::domain_error("stochastic extract: negative entry");
}

StochasticExtract classical_extract(const DHMap& map,
                                    const ClassicalStructure& zin,
                                    const ClassicalStructure& zout,
                                    double tol) {
  if (zin.dim != map.in_dim || zout.dim != map.out_dim)
    fail("classical_extract: dimension mismatch");
  RMatD m(map.out_dim, map.in_dim);
  for (std::size_t x = 0; x < map.in_dim; ++x) {
    const DHState out = rotate_state(dh_apply(map, point_state(zin, x)), zout);
    for (std::size_t y = 0; y < map.out_dim; ++y) {
      const cplx v = out.tensor.at({y, y, y, y});
      if (std::abs(v.imag()) > tol)
        throw std::domain_error("classical_extract: imaginary residue");
      m(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = v.real();
    }
  }
  return StochasticExtract(map.out_dim, map.in_dim, std::move(m));
}

DHMap classical_embed(const RMatD& m, const ClassicalStructure& zin,
                      const ClassicalStructure& zout) {
  if (m.rows() != static_cast<Eigen::Index>(zout.dim) ||
      m.cols() != static_cast<Eigen::Index>(zin.dim))
    fail("classical_embed: matrix shape mismatch");
  if (m.minCoeff() < 0.0)
    throw std::domain_error("classical_embed: negative entry");
  const std::size_t din = zin.dim, dout = zout.dim;
  Tensor acc({dout, dout, dout, dout, din, din, din, din});
  for (std::size_t y = 0; y < dout; ++y) {
    const Tensor p = point_state(zout, y).tensor;
    for (std::size_t x = 0; x < din; ++x) {
      const Tensor e = point_state(zin, x).tensor.conjugated();
      Tensor block = outer(p, e);
      block *= cplx(m(static_cast<Eigen::Index>(y),
                      static_cast<Eigen::Index>(x)),
                    0.0);
      acc += block;
    }
  }
  return DHMap(din, dout, std::move(acc));
}

CMat extract_components(const Tensor& t) {
  if (t.rank() != 4) fail("extract_components: rank-4 tensor required");
  const std::size_t d = t.shape()[0];
  CMat sigma(d, d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      sigma(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) =
          t.at({y, x, x, y});
  return sigma;
}

DensityMatrix quantum_extract_state(const DHState& state, double tol) {
  return DensityMatrix(state.dim, extract_components(state.tensor), tol);
}

Tensor inject_tensor(const CMat& sigma) {
  if (sigma.rows() != sigma.cols()) fail("inject_tensor: non-square matrix");
  const auto d = static_cast<std::size_t>(sigma.rows());
  Tensor t({d, d, d, d});
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      t.at({a, b, b, a}) = sigma(static_cast<Eigen::Index>(b),
                                 static_cast<Eigen::Index>(a));
  return t;
}

DHState quantum_lift_state(const DensityMatrix& sigma,
                           const ClassicalStructure& z) {
  if (z.dim != sigma.dim) fail("quantum_lift_state: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (sigma.mat + sigma.mat.adjoint()));
  std::vector<CMat> family;
  for (Eigen::Index y = 0; y < es.eigenvalues().size(); ++y) {
    const double p = es.eigenvalues()(y);
    if (p <= 1e-12) continue;
    // u[x] = principal sqrt of <psi_x|gamma_y>; either branch squares back,
    // so the round trip does not depend on the choice.
    const CVec gamma_z = z.basis.adjoint() * es.eigenvectors().col(y);
    CVec u(gamma_z.size());
    for (Eigen::Index x = 0; x < u.size(); ++x) u(x) = std::sqrt(gamma_z(x));
    // Generator weight p^(1/4) enters the member squared.
    CMat member = std::sqrt(p) * (u.conjugate() * u.transpose());
    if (!z.is_computational()) member = z.basis * member * z.basis.adjoint();
    family.push_back(std::move(member));
  }
  if (family.empty()) {
    // All-zero sigma lifts to the zero state.
    return DHState(sigma.dim, Tensor({sigma.dim, sigma.dim, sigma.dim,
                                      sigma.dim}),
                   {CMat::Zero(sigma.dim, sigma.dim)});
  }
  return dh_state_from_psd_family(family);
}

CMat quantum_extract_map(const DHMap& map) {
  const std::size_t din = map.in_dim, dout = map.out_dim;
  CMat c = CMat::Zero(din * dout, din * dout);
  for (std::size_t i = 0; i < din; ++i)
    for (std::size_t j = 0; j < din; ++j) {
      CMat unit = CMat::Zero(din, din);
      unit(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
      const Tensor out =
          contract(map.tensor, inject_tensor(unit),
                   {{4, 0}, {5, 1}, {6, 2}, {7, 3}});
      const CMat img = extract_components(out);
      for (std::size_t k = 0; k < dout; ++k)
        for (std::size_t l = 0; l < dout; ++l)
          c(static_cast<Eigen::Index>(i * dout + k),
            static_cast<Eigen::Index>(j * dout + l)) =
              img(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l));
    }
  return c;
}

CausalityReport causality_witness(std::size_t d, std::size_t trials,
                                  std::uint64_t seed) {
  if (d < 2) fail("causality_witness: dimension must be at least 2");
  CausalityReport rep;
  rep.dim = d;
  rep.trials = trials;
  Rng master(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const DHState st = random_dh_state(d, 1 + t % 3, master.raw());
    rep.forest_max_dev =
        std::max(rep.forest_max_dev, std::abs(forest_effect(st) - 1.0));
  }
  const DHState uniform = dh_state_from_psd_family(
      {CMat::Ones(d, d) / static_cast<double>(d)});
  const ClassicalStructure z = computational_structure(d);
  rep.tree_witness_value = tree_on_bridge_effect(uniform, z);
  rep.extension_witness_value = extension_effect(uniform, z);
  rep.forest_pass = rep.forest_max_dev <= 1e-10;
  rep.witnesses_pass = std::abs(rep.tree_witness_value - 1.0) >= 0.1 &&
                       std::abs(rep.extension_witness_value - 1.0) >= 0.1;
  return rep;
}

}  // namespace dhc
