#pragma once

// Seeded Hermitian generators and property suites for the triple product
// identity and its consequences.

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "jtp/core.hpp"
#include "jtp/homs.hpp"
#include "jtp/random.hpp"

namespace jtp {

struct GenericSpectrum {};
struct PlantedInertia {
  std::size_t plus = 0, minus = 0, zero = 0;
};
struct RankDeficient {
  std::size_t rank = 0;
};
struct IntegerSpectrum {};

using SpectrumKind = std::variant<GenericSpectrum, PlantedInertia, RankDeficient, IntegerSpectrum>;

std::string to_string(const SpectrumKind& kind);
// "generic", "integer", "planted:P,M,Z", "rank:R"
SpectrumKind spectrum_kind_from_string(const std::string& s);

struct SampleConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::size_t n = 4;
  SpectrumKind spectrum_kind = GenericSpectrum{};

  void validate() const;
};

struct Failure {
  std::size_t trial = 0;
  double residual = 0.0;
  std::string description;
  std::vector<HermitianMatrix> matrices;  // inputs, for reproduction
  std::vector<Complex> scalars;
};

struct VerificationReport {
  std::string suite_name;
  SampleConfig config;
  double tolerance = 0.0;
  std::size_t trials_run = 0;
  std::size_t skipped = 0;
  std::vector<Failure> failures;
  double max_residual = 0.0;

  bool passed() const noexcept { return failures.empty(); }
  // Concatenates another report's trials into this one.
  void merge(const VerificationReport& other);
};

// Haar-like random unitary: modified Gram-Schmidt on a complex Gaussian matrix.
DenseMatrix random_unitary(std::size_t n, Rng& rng);

// Spectrum of the requested kind, before rotation.
std::vector<double> draw_spectrum(const SpectrumKind& kind, std::size_t n, Rng& rng);

// U diag(spectrum) U* for the given trial. Deterministic in (seed, trial).
HermitianMatrix gen_hermitian(const SampleConfig& config, std::size_t trial = 0);
HermitianMatrix gen_hermitian(const SpectrumKind& kind, std::size_t n, Rng& rng);

using ScalarMap = std::function<Complex(const HermitianMatrix&)>;

inline constexpr double kJtpTol = 1e-6;
inline constexpr double kPowerLawTol = 1e-8;
inline constexpr double kSimilarityTol = 1e-6;
inline constexpr double kRankDeficiencyTol = 1e-6;

// |Phi(ABA) - Phi(A)Phi(B)Phi(A)| / (1 + |Phi(A)|^2 |Phi(B)|) per pair.
VerificationReport check_jtp_scalar(const ScalarHom& h, const SampleConfig& config, const ToleranceConfig& cfg = {});
VerificationReport check_jtp_matrix(const MatrixHom& h, const SampleConfig& config, const ToleranceConfig& cfg = {});

// Phi(A^k) against Phi(I)^(k-1) Phi(A)^k for k = 2..8, and Phi(A^-1) against
// Phi(A)^-1 for invertible A. For unital homs this is Phi(A^k) = Phi(A)^k.
VerificationReport check_power_law(const ScalarHom& h, const SampleConfig& config, const ToleranceConfig& cfg = {});
VerificationReport check_power_law(const MatrixHom& h, const SampleConfig& config, const ToleranceConfig& cfg = {});

VerificationReport check_similarity_invariance(const ScalarHom& h, const SampleConfig& config,
                                               const ToleranceConfig& cfg = {});

// Syl(ABA) = Syl(B) for invertible A, with both inertia algorithms.
VerificationReport check_sylvester(const SampleConfig& config, const ToleranceConfig& cfg = {});

// Throws PreconditionViolated unless Psi(0) = 0.
VerificationReport check_rank_deficiency(const ScalarHom& h, const SampleConfig& config,
                                         const ToleranceConfig& cfg = {});

// Runs the scalar triple product suite on an arbitrary map. The first edge
// pair is A = B = I.
VerificationReport falsify(const std::string& name, const ScalarMap& candidate, const SampleConfig& config,
                           const ToleranceConfig& cfg = {});

struct NamedScalarHom {
  std::string name;
  ScalarHom hom;
};
struct NamedMatrixHom {
  std::string name;
  MatrixHom hom;
};

// One per family variant: zero; one with eta = +1 and eta = -1; power 1,
// 1/2 and 1+i with mixed eta.
std::vector<NamedScalarHom> builtin_scalar_homs(std::size_t n);
// Domain C, domain R with sign characters, zero slots, constant, R+0.
std::vector<NamedMatrixHom> builtin_matrix_homs();

// Random hom for recovery tests: random unitary T, exponents in [-2, 2],
// random signs, no zero slots.
MatrixHom random_matrix_hom(Domain domain, std::size_t n, Rng& rng);

}  // namespace jtp
