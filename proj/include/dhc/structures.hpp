#pragma once

#include <string>

#include "dhc/linalg.hpp"

namespace dhc {

// An orthonormal basis of dimension d, standing in for the special
// commutative dagger-Frobenius algebra it induces. Columns of `basis`
// are the basis vectors.
struct ClassicalStructure {
  std::size_t dim;
  CMat basis;
  std::string label;

  ClassicalStructure(std::size_t d, CMat b, std::string name,
                     double tol = default_tol());

  // Exact identity basis; enables delta-pattern fast paths.
  bool is_computational() const;
};

ClassicalStructure computational_structure(std::size_t d);

// Column k (k = 1..d) has row-j entry exp(+i 2 pi j k / d) / sqrt(d) for
// j = 1..d, so column d is the uniform vector.
ClassicalStructure fourier_structure(std::size_t d);

}  // namespace dhc
