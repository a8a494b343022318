#pragma once

#include <string>
#include <vector>

#include "dhc/interference.hpp"

namespace dhc {

struct VerifyCheck {
  std::string name;
  double max_error = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  std::size_t dim = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<VerifyCheck> checks;

  bool all_pass() const;
};

// Suites: causality, classical, quantum, idempotence, symmetry, extension,
// all. tol <= 0 keeps each check's own pinned tolerance; a positive value
// replaces the generic comparison tolerances.
VerifyReport run_suite(const std::string& suite, std::size_t dim,
                       std::size_t trials, std::uint64_t seed,
                       double tol = 0.0);

const std::vector<std::string>& suite_names();

}  // namespace dhc
