#pragma once

#include <vector>

#include "dhc/hypercube.hpp"

namespace dhc::test {

// Brute-force contraction by explicit index loops. Kept independent of the
// permute-and-multiply path in the library.
inline Tensor naive_contract(const Tensor& a, const Tensor& b,
                             const std::vector<AxisPair>& pairs) {
  std::vector<char> used_a(a.rank(), 0), used_b(b.rank(), 0);
  for (const auto& [ia, ib] : pairs) used_a[ia] = used_b[ib] = 1;

  std::vector<std::size_t> a_free, b_free;
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (!used_a[i]) a_free.push_back(i);
  for (std::size_t i = 0; i < b.rank(); ++i)
    if (!used_b[i]) b_free.push_back(i);

  std::vector<std::size_t> out_shape;
  for (std::size_t i : a_free) out_shape.push_back(a.shape()[i]);
  for (std::size_t i : b_free) out_shape.push_back(b.shape()[i]);

  std::vector<std::size_t> sum_shape;
  for (const auto& [ia, ib] : pairs) sum_shape.push_back(a.shape()[ia]);

  auto unflatten = [](std::size_t flat, const std::vector<std::size_t>& shape) {
    std::vector<std::size_t> idx(shape.size());
    for (std::size_t k = shape.size(); k-- > 0;) {
      idx[k] = flat % shape[k];
      flat /= shape[k];
    }
    return idx;
  };

  std::size_t out_size = 1, sum_size = 1;
  for (std::size_t s : out_shape) out_size *= s;
  for (std::size_t s : sum_shape) sum_size *= s;

  Tensor out(out_shape);
  for (std::size_t o = 0; o < out_size; ++o) {
    const std::vector<std::size_t> oidx = unflatten(o, out_shape);
    cplx acc = 0.0;
    for (std::size_t s = 0; s < sum_size; ++s) {
      const std::vector<std::size_t> sidx = unflatten(s, sum_shape);
      std::vector<std::size_t> ai(a.rank()), bi(b.rank());
      for (std::size_t k = 0; k < a_free.size(); ++k) ai[a_free[k]] = oidx[k];
      for (std::size_t k = 0; k < b_free.size(); ++k)
        bi[b_free[k]] = oidx[a_free.size() + k];
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        ai[pairs[k].first] = sidx[k];
        bi[pairs[k].second] = sidx[k];
      }
      acc += a.data()[a.offset(ai)] * b.data()[b.offset(bi)];
    }
    out[o] = acc;
  }
  return out;
}

inline Tensor random_tensor(const std::vector<std::size_t>& shape, Rng& rng) {
  Tensor t(shape);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = rng.cgaussian();
  return t;
}

inline CMat random_unitary(std::size_t d, Rng& rng) {
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

inline ClassicalStructure random_structure(std::size_t d, Rng& rng) {
  return ClassicalStructure(d, random_unitary(d, rng), "random");
}

}  // namespace dhc::test
