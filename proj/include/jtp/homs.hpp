#pragma once

// Evaluators for Jordan triple product homomorphisms
//   H_n(C) -> C:      Phi(A) = Psi(|det A|) * eta(Syl A)
//   A -> H_n(C):      Phi(lambda) = T D diag(phi_i(lambda)) T*
// for A one of C, R, [0, inf), and recovery of (T, D, phi_i) from samples.

#include <cstdint>
#include <string>
#include <vector>

#include "jtp/core.hpp"
#include "jtp/inertia.hpp"

namespace jtp {

// Continuous multiplicative maps [0, inf) -> C.
class MultiplicativeMap {
 public:
  enum class Variant { Zero, One, Power };

  static MultiplicativeMap zero() { return MultiplicativeMap(Variant::Zero, 0.0); }
  static MultiplicativeMap one() { return MultiplicativeMap(Variant::One, 0.0); }
  // x -> exp(p ln x) for x > 0, 0 at x = 0.
  static MultiplicativeMap power(Complex p);

  Variant variant() const noexcept { return variant_; }
  Complex exponent() const noexcept { return p_; }
  Complex operator()(double x) const;
  Complex at_zero() const { return (*this)(0.0); }

 private:
  MultiplicativeMap(Variant v, Complex p) : variant_(v), p_(p) {}
  Variant variant_;
  Complex p_;
};

// eta : {0, ..., n} -> {-1, +1}
class EtaPattern {
 public:
  explicit EtaPattern(std::vector<int> signs);
  static EtaPattern constant(std::size_t n, int sign);

  std::size_t n() const noexcept { return signs_.size() - 1; }
  int operator[](std::size_t k) const { return signs_.at(k); }
  const std::vector<int>& signs() const noexcept { return signs_; }
  bool is_constant() const;

 private:
  std::vector<int> signs_;
};

class ScalarHom {
 public:
  // Throws InvalidHom when eta has the wrong length, or when psi is One and
  // eta is not constant (such maps fail the identity at A = 0).
  ScalarHom(std::size_t n, MultiplicativeMap psi, EtaPattern eta);

  std::size_t n() const noexcept { return n_; }
  const MultiplicativeMap& psi() const noexcept { return psi_; }
  const EtaPattern& eta() const noexcept { return eta_; }

 private:
  std::size_t n_;
  MultiplicativeMap psi_;
  EtaPattern eta_;
};

// Psi(|det A|) * eta(Syl A). A matrix with a numerically zero eigenvalue is
// treated as exactly singular, so Psi is evaluated at 0.
Complex scalar_hom_eval(const ScalarHom& h, const HermitianMatrix& a, const ToleranceConfig& cfg = {});

enum class Domain { C, R, RPlus0 };

const char* to_string(Domain d);
Domain domain_from_string(const std::string& s);

// Continuous multiplicative maps A -> R.
class RealCharacter {
 public:
  enum class Variant { Zero, One, SignedPower };

  static RealCharacter zero(Domain d) { return RealCharacter(Variant::Zero, 0.0, 0, d); }
  static RealCharacter one(Domain d) { return RealCharacter(Variant::One, 0.0, 0, d); }
  // |x|^p sgn(x)^s; s = 1 only on domain R.
  static RealCharacter signed_power(double p, int s, Domain d);

  Variant variant() const noexcept { return variant_; }
  double p() const noexcept { return p_; }
  int s() const noexcept { return s_; }
  Domain domain() const noexcept { return domain_; }

  // Throws DomainViolation for a scalar outside the domain.
  double operator()(Complex x) const;

 private:
  RealCharacter(Variant v, double p, int s, Domain d) : variant_(v), p_(p), s_(s), domain_(d) {}
  Variant variant_;
  double p_;
  int s_;
  Domain domain_;
};

void check_domain(Domain d, Complex x);

class MatrixHom {
 public:
  // T must be unitary within n * resid_tol; every character must share the domain.
  MatrixHom(DenseMatrix t, std::vector<int> d, std::vector<RealCharacter> chars, Domain domain,
            const ToleranceConfig& cfg = {});

  std::size_t n() const noexcept { return t_.n(); }
  const DenseMatrix& t() const noexcept { return t_; }
  const std::vector<int>& d() const noexcept { return d_; }
  const std::vector<RealCharacter>& chars() const noexcept { return chars_; }
  Domain domain() const noexcept { return domain_; }

  // (+1, -1, 0) counts of the tripotent Phi(1).
  struct Signature {
    std::size_t plus = 0;
    std::size_t minus = 0;
    std::size_t zero = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
  };
  Signature unit_signature() const;

 private:
  DenseMatrix t_;
  std::vector<int> d_;
  std::vector<RealCharacter> chars_;
  Domain domain_;
};

HermitianMatrix matrix_hom_eval(const MatrixHom& h, Complex lambda);

// Eigenvalue counts of a Hermitian tripotent; NotTripotent if an eigenvalue
// is more than 1e-6 away from {-1, 0, 1}.
MatrixHom::Signature classify_unit_image(const HermitianMatrix& p, const ToleranceConfig& cfg = {});

struct HomSample {
  Complex lambda;
  HermitianMatrix image;
};

struct RecoverOptions {
  std::uint64_t seed = 0x5eed;
  int max_attempts = 3;
};

// Inverts matrix_hom_eval up to a simultaneous permutation of slots. Needs
// lambda = 1, a real lambda > 1 and, on domain R, a lambda < 0.
MatrixHom recover_structure(Domain domain, const std::vector<HomSample>& samples, const ToleranceConfig& cfg = {},
                            const RecoverOptions& opts = {});

}  // namespace jtp
