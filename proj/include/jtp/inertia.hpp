#pragma once

#include <cstddef>

#include "jtp/core.hpp"

namespace jtp {

struct Inertia {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  std::size_t size() const noexcept { return n_plus + n_minus + n_zero; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Eigenvalues within zero_tol * max(1, ||A||_F) of zero count as zero.
double zero_threshold(const HermitianMatrix& a, const ToleranceConfig& cfg);

// Signs of the Jacobi eigenvalues.
Inertia inertia_eigen(const HermitianMatrix& a, const ToleranceConfig& cfg = {});

// Symmetric indefinite LDL* with 1x1 / 2x2 pivots (Bunch-Kaufman test,
// alpha = (1 + sqrt 17) / 8). Shares no code with the eigensolver.
Inertia inertia_ldl(const HermitianMatrix& a, const ToleranceConfig& cfg = {});

// |det A| from LU with partial pivoting.
double abs_det(const HermitianMatrix& a, const ToleranceConfig& cfg = {});

// Number of positive eigenvalues.
std::size_t syl(const HermitianMatrix& a, const ToleranceConfig& cfg = {});

}  // namespace jtp
