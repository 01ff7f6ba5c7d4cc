#pragma once

// Unitary Hermitian reflections B = I - 2cc* and the factorization
// A = B_1 ... B_{n-1} D B_{n-1} ... B_1 obtained by repeated deflation.

#include <optional>
#include <vector>

#include "jtp/core.hpp"
#include "jtp/eigen.hpp"

namespace jtp {

// Below this distance between e_1 and the target vector the reflection is
// taken to be the identity.
inline constexpr double kNearIdentityGuard = 1e-8;

struct ReflectionDecomposition;

class ReflectionFactor {
 public:
  enum class Kind { Identity, Householder };

  static ReflectionFactor identity(std::size_t n);
  // c must be a unit vector.
  static ReflectionFactor householder(UnitVector c);
  // I - beta w w* with beta = 2 / ||w||^2; w need not be normalized.
  static ReflectionFactor householder(std::vector<Complex> w);

  std::size_t n() const noexcept { return n_; }
  Kind kind() const noexcept { return c_ ? Kind::Householder : Kind::Identity; }
  // Only meaningful for Householder factors.
  const UnitVector& c() const { return *c_; }

  HermitianMatrix realize() const;

  // B * M * B for a Hermitian M of the same size, as a rank-two update.
  HermitianMatrix conjugate(const HermitianMatrix& m) const;

 private:
  ReflectionFactor(std::size_t n, std::optional<UnitVector> c, std::vector<Complex> w, double beta)
      : n_(n), c_(std::move(c)), w_(std::move(w)), beta_(beta) {}
  friend HermitianMatrix reconstruct(const ReflectionDecomposition& dec);
  std::size_t n_;
  std::optional<UnitVector> c_;
  std::vector<Complex> w_;  // unnormalized direction; keeps simple cases exact
  double beta_ = 0.0;
};

// Reflection B with B e_1 = v. v's first component must be real.
ReflectionFactor reflection_mapping_e1_to(const UnitVector& v, const ToleranceConfig& cfg = {});

struct Deflation {
  ReflectionFactor factor;
  double lambda;          // largest eigenvalue of the input
  HermitianMatrix rest;   // trailing (n-1)x(n-1) block of B A B
};

// A = B (lambda (+) C) B. Requires n >= 2.
Deflation deflate(const HermitianMatrix& a, const ToleranceConfig& cfg = {});

struct ReflectionDecomposition {
  std::size_t n = 0;
  // factors[k] acts on coordinates k..n-1, embedded as I_k (+) B.
  std::vector<ReflectionFactor> factors;
  std::vector<double> diag;
};

ReflectionDecomposition decompose(const HermitianMatrix& a, const ToleranceConfig& cfg = {});
HermitianMatrix reconstruct(const ReflectionDecomposition& dec);

}  // namespace jtp
