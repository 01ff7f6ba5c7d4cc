#pragma once

#include <vector>

#include "jtp/core.hpp"

namespace jtp {

inline constexpr int kMaxJacobiSweeps = 64;

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  DenseMatrix eigenvectors;         // column i pairs with eigenvalues[i]

  std::vector<Complex> column(std::size_t i) const;
};

class UnitVector;
UnitVector phase_normalize_first_real(const UnitVector& v);

class UnitVector {
 public:
  // Scales v to unit length. Throws InvalidArgument on a zero vector.
  static UnitVector normalized(std::vector<Complex> v);
  // Accepts v as-is if | ||v|| - 1 | <= tol.
  static UnitVector checked(std::vector<Complex> v, double tol);

  std::size_t size() const noexcept { return c_.size(); }
  const std::vector<Complex>& components() const noexcept { return c_; }
  const Complex& operator[](std::size_t i) const { return c_[i]; }

 private:
  friend UnitVector phase_normalize_first_real(const UnitVector& v);
  explicit UnitVector(std::vector<Complex> c) : c_(std::move(c)) {}
  std::vector<Complex> c_;
};

double norm2(const std::vector<Complex>& v);

// Cyclic row-sweep Jacobi with complex 2x2 Schur rotations. Deterministic.
Spectrum jacobi_eigh(const HermitianMatrix& a, const ToleranceConfig& cfg = {});

// Eigenvalues only, same solver.
std::vector<double> eigenvalues(const HermitianMatrix& a, const ToleranceConfig& cfg = {});

// e^{-i arg v_1} v, leaving the first component real and nonnegative.
UnitVector phase_normalize_first_real(const UnitVector& v);

}  // namespace jtp
