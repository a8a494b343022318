#include "dhc/tensor.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dhc {

void fail(const std::string& msg) { throw std::invalid_argument(msg); }

namespace {

std::size_t shape_product(const std::vector<std::size_t>& shape) {
  std::size_t n = 1;
  for (std::size_t s : shape) {
    if (s == 0) fail("tensor: zero axis extent");
    n *= s;
  }
  return n;
}

void check_finite(const std::vector<cplx>& data) {
  for (const cplx& v : data) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      fail("tensor: non-finite entry");
  }
}

using RMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

}  // namespace

Tensor::Tensor(std::vector<std::size_t> shape)
    : shape_(std::move(shape)), data_(shape_product(shape_), cplx(0.0, 0.0)) {}

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<cplx> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  if (data_.size() != shape_product(shape_))
    fail("tensor: data length does not match shape");
  check_finite(data_);
}

Tensor Tensor::scalar(cplx v) {
  Tensor t;
  t.data_[0] = v;
  check_finite(t.data_);
  return t;
}

std::size_t Tensor::offset(std::span<const std::size_t> idx) const {
  if (idx.size() != shape_.size()) fail("tensor: index rank mismatch");
  std::size_t off = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= shape_[k]) fail("tensor: index out of range");
    off = off * shape_[k] + idx[k];
  }
  return off;
}

cplx Tensor::at(std::initializer_list<std::size_t> idx) const {
  std::vector<std::size_t> v(idx);
  return data_[offset(v)];
}

cplx& Tensor::at(std::initializer_list<std::size_t> idx) {
  std::vector<std::size_t> v(idx);
  return data_[offset(v)];
}

Tensor Tensor::reshaped(std::vector<std::size_t> new_shape) const {
  if (shape_product(new_shape) != data_.size())
    fail("tensor: reshape changes element count");
  Tensor t;
  t.shape_ = std::move(new_shape);
  t.data_ = data_;
  return t;
}

Tensor Tensor::conjugated() const {
  Tensor t = *this;
  for (cplx& v : t.data_) v = std::conj(v);
  return t;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (shape_ != o.shape_) fail("tensor: shape mismatch in +=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (shape_ != o.shape_) fail("tensor: shape mismatch in -=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Tensor& Tensor::operator*=(cplx s) {
  for (cplx& v : data_) v *= s;
  return *this;
}

double Tensor::max_abs() const {
  double m = 0.0;
  for (const cplx& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double Tensor::max_abs_diff(const Tensor& o) const {
  if (shape_ != o.shape_) fail("tensor: shape mismatch in max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i)
    m = std::max(m, std::abs(data_[i] - o.data_[i]));
  return m;
}

Tensor rearrange(const Tensor& t, const std::vector<std::size_t>& perm,
                 bool conjugate) {
  const std::size_t r = t.rank();
  if (perm.size() != r) fail("rearrange: permutation rank mismatch");
  std::vector<char> seen(r, 0);
  for (std::size_t p : perm) {
    if (p >= r || seen[p]) fail("rearrange: invalid permutation");
    seen[p] = 1;
  }

  std::vector<std::size_t> out_shape(r);
  for (std::size_t k = 0; k < r; ++k) out_shape[k] = t.shape()[perm[k]];

  // Row-major strides of the input, routed through the permutation.
  std::vector<std::size_t> in_strides(r, 1);
  for (std::size_t k = r; k-- > 1;)
    in_strides[k - 1] = in_strides[k] * t.shape()[k];
  std::vector<std::size_t> strides(r);
  for (std::size_t k = 0; k < r; ++k) strides[k] = in_strides[perm[k]];

  Tensor out(out_shape);
  std::span<const cplx> src = t.data();
  std::span<cplx> dst = out.data();

  std::vector<std::size_t> idx(r, 0);
  std::size_t src_off = 0;
  for (std::size_t o = 0; o < out.size(); ++o) {
    dst[o] = conjugate ? std::conj(src[src_off]) : src[src_off];
    for (std::size_t k = r; k-- > 0;) {
      ++idx[k];
      src_off += strides[k];
      if (idx[k] < out_shape[k]) break;
      src_off -= strides[k] * out_shape[k];
      idx[k] = 0;
    }
  }
  return out;
}

Tensor contract(const Tensor& a, const Tensor& b,
                const std::vector<AxisPair>& pairs) {
  std::vector<char> used_a(a.rank(), 0), used_b(b.rank(), 0);
  for (const auto& [ia, ib] : pairs) {
    if (ia >= a.rank() || ib >= b.rank()) fail("contract: axis out of range");
    if (used_a[ia] || used_b[ib]) fail("contract: repeated axis");
    if (a.shape()[ia] != b.shape()[ib])
      fail("contract: paired axes have different extents");
    used_a[ia] = used_b[ib] = 1;
  }

  std::vector<std::size_t> a_free, b_free, perm_a, perm_b;
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (!used_a[i]) a_free.push_back(i);
  for (std::size_t i = 0; i < b.rank(); ++i)
    if (!used_b[i]) b_free.push_back(i);

  perm_a = a_free;
  perm_b.reserve(b.rank());
  for (const auto& [ia, ib] : pairs) {
    perm_a.push_back(ia);
    perm_b.push_back(ib);
  }
  perm_b.insert(perm_b.end(), b_free.begin(), b_free.end());

  const Tensor ap = rearrange(a, perm_a, false);
  const Tensor bp = rearrange(b, perm_b, false);

  std::size_t m = 1, k = 1, n = 1;
  std::vector<std::size_t> out_shape;
  for (std::size_t i : a_free) {
    m *= a.shape()[i];
    out_shape.push_back(a.shape()[i]);
  }
  for (const auto& [ia, ib] : pairs) k *= a.shape()[ia];
  for (std::size_t i : b_free) {
    n *= b.shape()[i];
    out_shape.push_back(b.shape()[i]);
  }

  Tensor out(out_shape);
  Eigen::Map<const RMat> am(ap.data().data(), static_cast<Eigen::Index>(m),
                            static_cast<Eigen::Index>(k));
  Eigen::Map<const RMat> bm(bp.data().data(), static_cast<Eigen::Index>(k),
                            static_cast<Eigen::Index>(n));
  Eigen::Map<RMat> cm(out.data().data(), static_cast<Eigen::Index>(m),
                      static_cast<Eigen::Index>(n));
  cm.noalias() = am * bm;
  return out;
}

Tensor outer(const Tensor& a, const Tensor& b) { return contract(a, b, {}); }

}  // namespace dhc
