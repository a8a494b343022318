#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dhc {

using cplx = std::complex<double>;

// Library-wide default tolerance for hermiticity / orthonormality /
// residue checks. Individual operations accept an explicit override.
inline constexpr double kDefaultTol = 1e-10;

inline double default_tol() { return kDefaultTol; }

[[noreturn]] void fail(const std::string& msg);

// Dense complex tensor with row-major flat storage. Every multi-leg object
// in the library (states, maps, effects) lives in one of these; all index
// plumbing goes through contract() and rearrange() so there is a single
// contraction code path.
class Tensor {
 public:
  Tensor() : shape_{}, data_(1, cplx(0.0, 0.0)) {}
  explicit Tensor(std::vector<std::size_t> shape);
  Tensor(std::vector<std::size_t> shape, std::vector<cplx> data);

  static Tensor scalar(cplx v);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }

  std::span<const cplx> data() const { return data_; }
  std::span<cplx> data() { return data_; }

  cplx operator[](std::size_t i) const { return data_[i]; }
  cplx& operator[](std::size_t i) { return data_[i]; }

  std::size_t offset(std::span<const std::size_t> idx) const;
  cplx at(std::initializer_list<std::size_t> idx) const;
  cplx& at(std::initializer_list<std::size_t> idx);

  // Same flat data under a new shape; element count must match.
  Tensor reshaped(std::vector<std::size_t> new_shape) const;

  Tensor conjugated() const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(cplx s);

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(cplx s, Tensor t) { return t *= s; }

  double max_abs() const;
  double max_abs_diff(const Tensor& o) const;

 private:
  std::vector<std::size_t> shape_;
  std::vector<cplx> data_;
};

using AxisPair = std::pair<std::size_t, std::size_t>;

// Sum over the paired axes of a and b. Remaining axes of the result are the
// free axes of a followed by the free axes of b, in their original order.
// No conjugation is applied anywhere.
Tensor contract(const Tensor& a, const Tensor& b,
                const std::vector<AxisPair>& pairs);

// Axis permutation with optional entrywise conjugation. Result axis k is
// input axis perm[k], i.e. out[j0,...,jn] = in[i...] with i[perm[k]] = j[k].
Tensor rearrange(const Tensor& t, const std::vector<std::size_t>& perm,
                 bool conjugate);

// Outer product: contract with no pairs.
Tensor outer(const Tensor& a, const Tensor& b);

}  // namespace dhc
