#include "jtp/homs.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "jtp/eigen.hpp"
#include "jtp/random.hpp"

namespace jtp {

// ---------------------------------------------------------------------------
// H_n(C) -> C

MultiplicativeMap MultiplicativeMap::power(Complex p) {
  if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) throw Error(ErrorKind::InvalidHom, "non-finite exponent");
  return MultiplicativeMap(Variant::Power, p);
}

Complex MultiplicativeMap::operator()(double x) const {
  if (!(x >= 0.0)) throw Error(ErrorKind::InvalidArgument, "multiplicative map is defined on [0, inf)");
  switch (variant_) {
    case Variant::Zero:
      return 0.0;
    case Variant::One:
      return 1.0;
    case Variant::Power:
      if (x == 0.0) return 0.0;
      return std::exp(p_ * std::log(x));
  }
  return 0.0;
}

EtaPattern::EtaPattern(std::vector<int> signs) : signs_(std::move(signs)) {
  if (signs_.empty()) throw Error(ErrorKind::InvalidHom, "eta needs n + 1 entries");
  for (int s : signs_) {
    if (s != 1 && s != -1) throw Error(ErrorKind::InvalidHom, "eta entries must be +1 or -1");
  }
}

EtaPattern EtaPattern::constant(std::size_t n, int sign) { return EtaPattern(std::vector<int>(n + 1, sign)); }

bool EtaPattern::is_constant() const {
  return std::all_of(signs_.begin(), signs_.end(), [&](int s) { return s == signs_.front(); });
}

ScalarHom::ScalarHom(std::size_t n, MultiplicativeMap psi, EtaPattern eta)
    : n_(n), psi_(psi), eta_(std::move(eta)) {
  if (n == 0) throw Error(ErrorKind::InvalidHom, "n must be positive");
  if (eta_.n() != n) {
    throw Error(ErrorKind::InvalidHom, "eta has " + std::to_string(eta_.signs().size()) + " entries, expected " +
                                           std::to_string(n + 1));
  }
  // Phi(0 B 0) = eta(0) but Phi(0) Phi(B) Phi(0) = eta(Syl B).
  if (psi_.variant() == MultiplicativeMap::Variant::One && !eta_.is_constant()) {
    throw Error(ErrorKind::InvalidHom, "psi = one requires a constant eta");
  }
}

Complex scalar_hom_eval(const ScalarHom& h, const HermitianMatrix& a, const ToleranceConfig& cfg) {
  if (a.n() != h.n()) throw Error(ErrorKind::DimensionMismatch, "matrix size differs from hom size");
  if (h.psi().variant() == MultiplicativeMap::Variant::Zero) return 0.0;
  const Inertia in = inertia_eigen(a, cfg);
  const double det = in.n_zero > 0 ? 0.0 : abs_det(a, cfg);
  return h.psi()(det) * static_cast<double>(h.eta()[in.n_plus]);
}

// ---------------------------------------------------------------------------
// A -> H_n(C)

const char* to_string(Domain d) {
  switch (d) {
    case Domain::C: return "C";
    case Domain::R: return "R";
    case Domain::RPlus0: return "R+0";
  }
  return "?";
}

Domain domain_from_string(const std::string& s) {
  if (s == "C") return Domain::C;
  if (s == "R") return Domain::R;
  if (s == "R+0") return Domain::RPlus0;
  throw Error(ErrorKind::Parse, "unknown domain '" + s + "'");
}

void check_domain(Domain d, Complex x) {
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) throw Error(ErrorKind::DomainViolation, "non-finite scalar");
  if (d != Domain::C && x.imag() != 0.0) {
    throw Error(ErrorKind::DomainViolation, std::string("nonreal scalar on domain ") + to_string(d));
  }
  if (d == Domain::RPlus0 && x.real() < 0.0) throw Error(ErrorKind::DomainViolation, "negative scalar on domain R+0");
}

RealCharacter RealCharacter::signed_power(double p, int s, Domain d) {
  if (!std::isfinite(p)) throw Error(ErrorKind::InvalidHom, "non-finite character exponent");
  if (s != 0 && s != 1) throw Error(ErrorKind::InvalidHom, "character sign exponent must be 0 or 1");
  if (s == 1 && d != Domain::R) throw Error(ErrorKind::InvalidHom, "s = 1 is only multiplicative into R on domain R");
  return RealCharacter(Variant::SignedPower, p, s, d);
}

double RealCharacter::operator()(Complex x) const {
  check_domain(domain_, x);
  switch (variant_) {
    case Variant::Zero:
      return 0.0;
    case Variant::One:
      return 1.0;
    case Variant::SignedPower: {
      const double mag = std::abs(x);
      if (mag == 0.0) return 0.0;
      const double v = std::pow(mag, p_);
      return (s_ == 1 && x.real() < 0.0) ? -v : v;
    }
  }
  return 0.0;
}

MatrixHom::MatrixHom(DenseMatrix t, std::vector<int> d, std::vector<RealCharacter> chars, Domain domain,
                     const ToleranceConfig& cfg)
    : t_(std::move(t)), d_(std::move(d)), chars_(std::move(chars)), domain_(domain) {
  const std::size_t n = t_.n();
  if (n == 0) throw Error(ErrorKind::InvalidHom, "n must be positive");
  if (d_.size() != n || chars_.size() != n) throw Error(ErrorKind::InvalidHom, "d and chars need n entries");
  for (int s : d_) {
    if (s != 1 && s != -1) throw Error(ErrorKind::InvalidHom, "d entries must be +1 or -1");
  }
  for (const auto& c : chars_) {
    if (c.domain() != domain_) throw Error(ErrorKind::InvalidHom, "characters must share the hom's domain");
  }
  const double defect = frobenius_norm(matrix_sub(mat_mul(adjoint(t_), t_), DenseMatrix::identity(n)));
  if (defect > static_cast<double>(n) * cfg.resid_tol) {
    throw Error(ErrorKind::InvalidHom, "T is not unitary: ||T*T - I||_F = " + std::to_string(defect));
  }
}

MatrixHom::Signature MatrixHom::unit_signature() const {
  Signature sig;
  for (std::size_t i = 0; i < n(); ++i) {
    if (chars_[i].variant() == RealCharacter::Variant::Zero) {
      ++sig.zero;
    } else if (d_[i] > 0) {
      ++sig.plus;
    } else {
      ++sig.minus;
    }
  }
  return sig;
}

HermitianMatrix matrix_hom_eval(const MatrixHom& h, Complex lambda) {
  check_domain(h.domain(), lambda);
  const std::size_t n = h.n();
  DenseMatrix scaled = h.t();
  for (std::size_t k = 0; k < n; ++k) {
    const double w = static_cast<double>(h.d()[k]) * h.chars()[k](lambda);
    for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= w;
  }
  return HermitianMatrix::symmetrize(mat_mul(scaled, adjoint(h.t())));
}

namespace {

// Nearest of {-1, 0, 1} within 1e-6, or nullopt.
std::optional<int> nearest_tripotent_value(double x) {
  constexpr double kTol = 1e-6;
  for (int target : {-1, 0, 1}) {
    if (std::abs(x - target) <= kTol) return target;
  }
  return std::nullopt;
}

}  // namespace

MatrixHom::Signature classify_unit_image(const HermitianMatrix& p, const ToleranceConfig& cfg) {
  MatrixHom::Signature sig;
  for (double mu : eigenvalues(p, cfg)) {
    const auto v = nearest_tripotent_value(mu);
    if (!v) throw Error(ErrorKind::NotTripotent, "eigenvalue " + std::to_string(mu) + " is not in {-1, 0, 1}");
    if (*v == 1) {
      ++sig.plus;
    } else if (*v == -1) {
      ++sig.minus;
    } else {
      ++sig.zero;
    }
  }
  return sig;
}

// ---------------------------------------------------------------------------
// recovery

namespace {

constexpr double kDiagonalTol = 1e-6;
constexpr double kMatchTol = 1e-6;

bool is_real_positive(Complex x) { return x.imag() == 0.0 && x.real() > 0.0; }

std::optional<DenseMatrix> joint_eigenbasis(const std::vector<HomSample>& samples, std::uint64_t seed,
                                            const ToleranceConfig& cfg) {
  const std::size_t n = samples.front().image.n();
  Rng rng(seed);
  DenseMatrix mix(n);
  for (const auto& s : samples) {
    const double w = rng.uniform(0.5, 1.5) / (1.0 + frobenius_norm(s.image));
    for (std::size_t i = 0; i < n * n; ++i) mix.entries()[i] += w * s.image.dense().entries()[i];
  }
  const DenseMatrix t = jacobi_eigh(HermitianMatrix::symmetrize(mix), cfg).eigenvectors;
  const DenseMatrix th = adjoint(t);
  for (const auto& s : samples) {
    const DenseMatrix rotated = mat_mul(mat_mul(th, s.image.dense()), t);
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) off += std::norm(rotated(i, j));
    if (std::sqrt(off) > kDiagonalTol * (1.0 + frobenius_norm(s.image))) return std::nullopt;
  }
  return t;
}

}  // namespace

MatrixHom recover_structure(Domain domain, const std::vector<HomSample>& samples, const ToleranceConfig& cfg,
                            const RecoverOptions& opts) {
  if (samples.size() < 3) throw Error(ErrorKind::InsufficientSamples, "need at least 3 samples");
  const std::size_t n = samples.front().image.n();
  const HomSample* unit = nullptr;
  bool has_above_one = false;
  bool has_negative = false;
  for (const auto& s : samples) {
    check_domain(domain, s.lambda);
    if (s.image.n() != n) throw Error(ErrorKind::DimensionMismatch, "sample images differ in size");
    if (s.lambda == Complex(1.0, 0.0)) unit = &s;
    if (is_real_positive(s.lambda) && s.lambda.real() > 1.0) has_above_one = true;
    if (s.lambda.imag() == 0.0 && s.lambda.real() < 0.0) has_negative = true;
  }
  if (unit == nullptr) throw Error(ErrorKind::InsufficientSamples, "no sample at lambda = 1");
  if (!has_above_one) throw Error(ErrorKind::InsufficientSamples, "no real sample with lambda > 1");
  if (domain == Domain::R && !has_negative) throw Error(ErrorKind::InsufficientSamples, "domain R needs a lambda < 0");

  std::optional<DenseMatrix> basis;
  for (int attempt = 0; attempt < std::max(1, opts.max_attempts) && !basis; ++attempt) {
    basis = joint_eigenbasis(samples, Rng::splitmix64(opts.seed + static_cast<std::uint64_t>(attempt)), cfg);
  }
  if (!basis) {
    throw Error(ErrorKind::NotSimultaneouslyDiagonalizable, "sample images share no common eigenbasis");
  }
  const DenseMatrix& t = *basis;
  const DenseMatrix th = adjoint(t);

  // diag[j][i]: slot i of sample j in the joint basis
  std::vector<std::vector<double>> diag;
  for (const auto& s : samples) {
    const DenseMatrix rotated = mat_mul(mat_mul(th, s.image.dense()), t);
    std::vector<double> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = rotated(i, i).real();
    diag.push_back(std::move(row));
  }
  const std::size_t unit_index = static_cast<std::size_t>(unit - samples.data());

  std::vector<int> d(n, 1);
  std::vector<RealCharacter> chars;
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = nearest_tripotent_value(diag[unit_index][i]);
    if (!u) {
      throw Error(ErrorKind::NotTripotent, "image of 1 has eigenvalue " + std::to_string(diag[unit_index][i]));
    }
    if (*u == 0) {
      chars.push_back(RealCharacter::zero(domain));
      continue;
    }
    d[i] = *u;

    double num = 0.0;
    double den = 0.0;
    int s = 0;
    std::optional<double> at_zero;
    for (std::size_t j = 0; j < samples.size(); ++j) {
      const Complex lambda = samples[j].lambda;
      const double phi = diag[j][i] * d[i];
      const double mag = std::abs(lambda);
      if (mag == 0.0) {
        at_zero = phi;
        continue;
      }
      if (std::abs(phi) == 0.0) {
        throw Error(ErrorKind::InconsistentSamples, "nonzero character vanishes at a nonzero scalar");
      }
      if (lambda.imag() == 0.0 && lambda.real() < 0.0 && phi < 0.0) s = 1;
      if (mag == 1.0) continue;
      num += std::log(std::abs(phi)) * std::log(mag);
      den += std::log(mag) * std::log(mag);
    }
    const double p = num / den;
    if (at_zero && std::abs(*at_zero - 1.0) <= kMatchTol) {
      chars.push_back(RealCharacter::one(domain));
    } else {
      chars.push_back(RealCharacter::signed_power(p, domain == Domain::R ? s : 0, domain));
    }
  }

  MatrixHom h(t, d, std::move(chars), domain, cfg);
  for (const auto& s : samples) {
    const double err = frobenius_norm(matrix_sub(matrix_hom_eval(h, s.lambda).dense(), s.image.dense()));
    if (err > kMatchTol * (1.0 + frobenius_norm(s.image))) {
      throw Error(ErrorKind::InconsistentSamples, "recovered hom misses a sample by " + std::to_string(err));
    }
  }
  return h;
}

}  // namespace jtp
