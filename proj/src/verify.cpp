#include "jtp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "jtp/eigen.hpp"
#include "jtp/inertia.hpp"
#include "jtp/kernels.hpp"

namespace jtp {

// ---------------------------------------------------------------------------
// configuration

std::string to_string(const SpectrumKind& kind) {
  struct Visitor {
    std::string operator()(const GenericSpectrum&) const { return "generic"; }
    std::string operator()(const IntegerSpectrum&) const { return "integer"; }
    std::string operator()(const PlantedInertia& p) const {
      return "planted:" + std::to_string(p.plus) + "," + std::to_string(p.minus) + "," + std::to_string(p.zero);
    }
    std::string operator()(const RankDeficient& r) const { return "rank:" + std::to_string(r.rank); }
  };
  return std::visit(Visitor{}, kind);
}

SpectrumKind spectrum_kind_from_string(const std::string& s) {
  if (s == "generic") return GenericSpectrum{};
  if (s == "integer") return IntegerSpectrum{};
  auto parse_count = [&](const std::string& text) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || text.empty()) throw Error(ErrorKind::Parse, "bad spectrum kind '" + s + "'");
    return static_cast<std::size_t>(v);
  };
  if (s.rfind("rank:", 0) == 0) return RankDeficient{parse_count(s.substr(5))};
  if (s.rfind("planted:", 0) == 0) {
    std::vector<std::size_t> parts;
    std::stringstream ss(s.substr(8));
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(parse_count(item));
    if (parts.size() != 3) throw Error(ErrorKind::Parse, "planted kind needs three counts");
    return PlantedInertia{parts[0], parts[1], parts[2]};
  }
  throw Error(ErrorKind::Parse, "unknown spectrum kind '" + s + "'");
}

void SampleConfig::validate() const {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be positive");
  if (const auto* p = std::get_if<PlantedInertia>(&spectrum_kind)) {
    if (p->plus + p->minus + p->zero != n) throw Error(ErrorKind::InvalidArgument, "planted counts must sum to n");
  }
  if (const auto* r = std::get_if<RankDeficient>(&spectrum_kind)) {
    if (r->rank > n) throw Error(ErrorKind::InvalidArgument, "rank exceeds n");
  }
}

void VerificationReport::merge(const VerificationReport& other) {
  trials_run += other.trials_run;
  skipped += other.skipped;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  max_residual = std::max(max_residual, other.max_residual);
}

// ---------------------------------------------------------------------------
// generators

DenseMatrix random_unitary(std::size_t n, Rng& rng) {
  const auto& k = kernels::active();
  for (int attempt = 0; attempt < 3; ++attempt) {
    DenseMatrix q(n);
    for (Complex& z : q.entries()) z = rng.complex_normal();
    bool degenerate = false;
    // Rows are orthonormalized; a matrix with orthonormal rows is unitary.
    for (std::size_t i = 0; i < n && !degenerate; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        const Complex proj = k.dotc(n, &q(j, 0), &q(i, 0));
        k.axpy(n, -proj, &q(j, 0), &q(i, 0));
      }
      const double nrm = std::sqrt(k.dotc(n, &q(i, 0), &q(i, 0)).real());
      if (nrm < 1e-8) {
        degenerate = true;
        break;
      }
      for (Complex& z : q.row(i)) z /= nrm;
    }
    if (!degenerate) return q;
  }
  throw Error(ErrorKind::DegenerateRandomMatrix, "three consecutive near-singular Gaussian draws");
}

std::vector<double> draw_spectrum(const SpectrumKind& kind, std::size_t n, Rng& rng) {
  std::vector<double> d;
  d.reserve(n);
  auto magnitude = [&] { return rng.uniform(0.25, 2.0); };
  if (std::holds_alternative<GenericSpectrum>(kind)) {
    for (std::size_t i = 0; i < n; ++i) d.push_back(rng.sign() * rng.uniform(0.1, 2.0));
  } else if (std::holds_alternative<IntegerSpectrum>(kind)) {
    for (std::size_t i = 0; i < n; ++i) d.push_back(static_cast<double>(rng.sign() * rng.uniform_int(1, 3)));
  } else if (const auto* p = std::get_if<PlantedInertia>(&kind)) {
    if (p->plus + p->minus + p->zero != n) throw Error(ErrorKind::InvalidArgument, "planted counts must sum to n");
    for (std::size_t i = 0; i < p->plus; ++i) d.push_back(magnitude());
    for (std::size_t i = 0; i < p->minus; ++i) d.push_back(-magnitude());
    for (std::size_t i = 0; i < p->zero; ++i) d.push_back(0.0);
  } else if (const auto* r = std::get_if<RankDeficient>(&kind)) {
    if (r->rank > n) throw Error(ErrorKind::InvalidArgument, "rank exceeds n");
    for (std::size_t i = 0; i < r->rank; ++i) d.push_back(rng.sign() * magnitude());
    for (std::size_t i = r->rank; i < n; ++i) d.push_back(0.0);
  }
  return d;
}

namespace {

HermitianMatrix rotate_diagonal(const DenseMatrix& u, const std::vector<double>& d) {
  DenseMatrix scaled = u;
  for (std::size_t i = 0; i < u.n(); ++i)
    for (std::size_t j = 0; j < u.n(); ++j) scaled(i, j) *= d[j];
  return HermitianMatrix::symmetrize(mat_mul(scaled, adjoint(u)));
}

HermitianMatrix similarity(const DenseMatrix& u, const HermitianMatrix& a) {
  return HermitianMatrix::symmetrize(mat_mul(mat_mul(u, a.dense()), adjoint(u)));
}

}  // namespace

HermitianMatrix gen_hermitian(const SpectrumKind& kind, std::size_t n, Rng& rng) {
  const std::vector<double> d = draw_spectrum(kind, n, rng);
  const DenseMatrix u = random_unitary(n, rng);
  return rotate_diagonal(u, d);
}

HermitianMatrix gen_hermitian(const SampleConfig& config, std::size_t trial) {
  config.validate();
  Rng rng = Rng::for_trial(config.seed, trial);
  return gen_hermitian(config.spectrum_kind, config.n, rng);
}

// ---------------------------------------------------------------------------
// suites

namespace {

constexpr std::uint64_t kEdgeStream = 0xed6eca5e0000ULL;

class ReportBuilder {
 public:
  ReportBuilder(std::string name, const SampleConfig& config, double tol) {
    report_.suite_name = std::move(name);
    report_.config = config;
    report_.tolerance = tol;
  }

  void record(std::size_t trial, double residual, const std::string& what, std::vector<HermitianMatrix> mats = {},
              std::vector<Complex> scalars = {}) {
    const double r = std::isnan(residual) ? std::numeric_limits<double>::infinity() : residual;
    report_.max_residual = std::max(report_.max_residual, r);
    if (r > report_.tolerance) {
      report_.failures.push_back(Failure{trial, r, what, std::move(mats), std::move(scalars)});
    }
  }

  void error(std::size_t trial, const std::exception& e, const std::string& what, std::vector<HermitianMatrix> mats = {},
             std::vector<Complex> scalars = {}) {
    record(trial, std::numeric_limits<double>::infinity(), what + ": " + e.what(), std::move(mats), std::move(scalars));
  }

  void count_trial() { ++report_.trials_run; }
  void count_skip() { ++report_.skipped; }
  VerificationReport finish() { return std::move(report_); }

 private:
  VerificationReport report_;
};

std::vector<double> ramp(std::size_t n) {
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<double>(i + 1);
  return d;
}

SpectrumKind singular_kind(std::size_t n) { return RankDeficient{n - 1}; }

VerificationReport run_jtp_pairs(const std::string& name, const ScalarMap& phi, const SampleConfig& config) {
  config.validate();
  const std::size_t n = config.n;
  ReportBuilder rb(name, config, kJtpTol);

  struct Pair {
    std::string what;
    HermitianMatrix a, b;
  };
  std::vector<Pair> edges;
  {
    Rng rng = Rng::for_trial(config.seed ^ kEdgeStream, 0);
    const HermitianMatrix b = gen_hermitian(GenericSpectrum{}, n, rng);
    const HermitianMatrix a_gen = gen_hermitian(GenericSpectrum{}, n, rng);
    const HermitianMatrix a_sing = gen_hermitian(singular_kind(n), n, rng);
    const HermitianMatrix id = HermitianMatrix::identity(n);
    const HermitianMatrix zero = HermitianMatrix::zero(n);
    edges.push_back({"edge: A = I, B = I", id, id});
    edges.push_back({"edge: A = I", id, b});
    edges.push_back({"edge: A = 0", zero, b});
    edges.push_back({"edge: A singular", a_sing, b});
    edges.push_back({"edge: B = exchange", a_gen, exchange_matrix(n)});
    edges.push_back({"edge: A = exchange, B = diag(1..n)", exchange_matrix(n), HermitianMatrix::diagonal(ramp(n))});
    edges.push_back({"edge: A = B = 0", zero, zero});
  }

  auto check = [&](std::size_t trial, const std::string& what, const HermitianMatrix& a, const HermitianMatrix& b) {
    rb.count_trial();
    try {
      const Complex fa = phi(a);
      const Complex fb = phi(b);
      const Complex lhs = phi(jtp(a, b));
      const Complex rhs = fa * fb * fa;
      const double scale = 1.0 + std::norm(fa) * std::abs(fb);
      rb.record(trial, std::abs(lhs - rhs) / scale, what, {a, b}, {lhs, rhs});
    } catch (const std::exception& e) {
      rb.error(trial, e, what, {a, b});
    }
  };

  std::size_t trial = 0;
  for (const auto& e : edges) check(trial++, e.what, e.a, e.b);
  for (std::size_t t = 0; t < config.trials; ++t) {
    Rng rng = Rng::for_trial(config.seed, t);
    const HermitianMatrix a = gen_hermitian(config.spectrum_kind, n, rng);
    SpectrumKind b_kind = GenericSpectrum{};
    if (t % 3 == 1) b_kind = config.spectrum_kind;
    if (t % 3 == 2) b_kind = singular_kind(n);
    const HermitianMatrix b = gen_hermitian(b_kind, n, rng);
    check(trial++, "random", a, b);
  }
  return rb.finish();
}

Complex scalar_pow(Complex z, int k) {
  Complex r = 1.0;
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

DenseMatrix dense_pow(const DenseMatrix& m, int k) {
  DenseMatrix r = DenseMatrix::identity(m.n());
  for (int i = 0; i < k; ++i) r = mat_mul(r, m);
  return r;
}

std::vector<Complex> draw_scalars(Domain domain, Rng& rng, std::size_t count) {
  std::vector<Complex> out;
  for (std::size_t i = 0; i < count; ++i) {
    const double mag = rng.uniform(0.2, 3.0);
    switch (domain) {
      case Domain::C:
        out.push_back(std::polar(mag, rng.uniform(-3.14159, 3.14159)));
        break;
      case Domain::R:
        out.push_back(rng.sign() * mag);
        break;
      case Domain::RPlus0:
        out.push_back(mag);
        break;
    }
  }
  return out;
}

double rel_frob(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  return frobenius_norm(matrix_sub(lhs, rhs)) / (1.0 + frobenius_norm(rhs));
}

}  // namespace

VerificationReport check_jtp_scalar(const ScalarHom& h, const SampleConfig& config, const ToleranceConfig& cfg) {
  if (h.n() != config.n) throw Error(ErrorKind::DimensionMismatch, "hom size differs from sample size");
  return run_jtp_pairs("jtp-scalar", [&](const HermitianMatrix& a) { return scalar_hom_eval(h, a, cfg); }, config);
}

VerificationReport falsify(const std::string& name, const ScalarMap& candidate, const SampleConfig& config,
                           const ToleranceConfig&) {
  return run_jtp_pairs("falsify:" + name, candidate, config);
}

VerificationReport check_jtp_matrix(const MatrixHom& h, const SampleConfig& config, const ToleranceConfig&) {
  config.validate();
  ReportBuilder rb("jtp-matrix", config, kJtpTol);
  auto check = [&](std::size_t trial, const std::string& what, Complex lambda, Complex mu) {
    rb.count_trial();
    try {
      const HermitianMatrix fl = matrix_hom_eval(h, lambda);
      const HermitianMatrix fm = matrix_hom_eval(h, mu);
      const HermitianMatrix lhs = matrix_hom_eval(h, lambda * mu * lambda);
      const DenseMatrix rhs = mat_mul(mat_mul(fl.dense(), fm.dense()), fl.dense());
      const double fln = frobenius_norm(fl);
      const double scale = 1.0 + fln * fln * frobenius_norm(fm);
      rb.record(trial, frobenius_norm(matrix_sub(lhs.dense(), rhs)) / scale, what, {}, {lambda, mu});
    } catch (const std::exception& e) {
      rb.error(trial, e, what, {}, {lambda, mu});
    }
  };

  Rng edge_rng = Rng::for_trial(config.seed ^ kEdgeStream, 0);
  const auto e = draw_scalars(h.domain(), edge_rng, 2);
  std::size_t trial = 0;
  check(trial++, "edge: lambda = 0", 0.0, e[0]);
  check(trial++, "edge: mu = 0", e[0], 0.0);
  check(trial++, "edge: lambda = mu = 0", 0.0, 0.0);
  check(trial++, "edge: lambda = mu = 1", 1.0, 1.0);
  check(trial++, "edge: lambda = 1", 1.0, e[1]);
  if (h.domain() == Domain::R) {
    check(trial++, "edge: lambda = -1", -1.0, e[1]);
    check(trial++, "edge: mu = -1", e[0], -1.0);
  }
  if (h.domain() == Domain::C) check(trial++, "edge: lambda = i", Complex(0.0, 1.0), e[1]);

  for (std::size_t t = 0; t < config.trials; ++t) {
    Rng rng = Rng::for_trial(config.seed, t);
    const auto s = draw_scalars(h.domain(), rng, 2);
    check(trial++, "random", s[0], s[1]);
  }
  return rb.finish();
}

VerificationReport check_power_law(const ScalarHom& h, const SampleConfig& config, const ToleranceConfig& cfg) {
  config.validate();
  if (h.n() != config.n) throw Error(ErrorKind::DimensionMismatch, "hom size differs from sample size");
  const std::size_t n = config.n;
  ReportBuilder rb("power-law-scalar", config, kPowerLawTol);
  auto phi = [&](const HermitianMatrix& a) { return scalar_hom_eval(h, a, cfg); };
  const Complex phi_identity = phi(HermitianMatrix::identity(n));

  auto check = [&](std::size_t trial, const std::string& what, const HermitianMatrix& a) {
    rb.count_trial();
    try {
      const Complex fa = phi(a);
      for (int k = 2; k <= 8; ++k) {
        const Complex lhs = phi(matrix_power(a, k));
        const Complex rhs = scalar_pow(phi_identity, k - 1) * scalar_pow(fa, k);
        rb.record(trial, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)), what + ", k = " + std::to_string(k), {a},
                  {lhs, rhs});
      }
      if (inertia_eigen(a, cfg).n_zero > 0 || fa == 0.0) {
        rb.count_skip();
        return;
      }
      const Complex lhs = phi(HermitianMatrix::symmetrize(inverse(a.dense())));
      const Complex rhs = 1.0 / fa;
      rb.record(trial, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)), what + ", k = -1", {a}, {lhs, rhs});
    } catch (const std::exception& e) {
      rb.error(trial, e, what, {a});
    }
  };

  std::size_t trial = 0;
  {
    Rng rng = Rng::for_trial(config.seed ^ kEdgeStream, 0);
    check(trial++, "edge: A = I", HermitianMatrix::identity(n));
    check(trial++, "edge: A = 0", HermitianMatrix::zero(n));
    check(trial++, "edge: A = exchange", exchange_matrix(n));
    check(trial++, "edge: A = diag(1..n)", HermitianMatrix::diagonal(ramp(n)));
    check(trial++, "edge: A singular", gen_hermitian(singular_kind(n), n, rng));
  }
  for (std::size_t t = 0; t < config.trials; ++t) {
    Rng rng = Rng::for_trial(config.seed, t);
    check(trial++, "random", gen_hermitian(config.spectrum_kind, n, rng));
  }
  return rb.finish();
}

VerificationReport check_power_law(const MatrixHom& h, const SampleConfig& config, const ToleranceConfig&) {
  config.validate();
  ReportBuilder rb("power-law-matrix", config, kPowerLawTol);
  const DenseMatrix unit_image = matrix_hom_eval(h, 1.0).dense();

  auto check = [&](std::size_t trial, const std::string& what, Complex lambda) {
    rb.count_trial();
    try {
      const DenseMatrix fl = matrix_hom_eval(h, lambda).dense();
      Complex lambda_k = lambda;
      for (int k = 2; k <= 8; ++k) {
        lambda_k *= lambda;
        const DenseMatrix lhs = matrix_hom_eval(h, lambda_k).dense();
        const DenseMatrix rhs = mat_mul(dense_pow(unit_image, k - 1), dense_pow(fl, k));
        rb.record(trial, rel_frob(lhs, rhs), what + ", k = " + std::to_string(k), {}, {lambda});
      }
      bool invertible = lambda != 0.0;
      for (const auto& c : h.chars()) invertible = invertible && c(lambda) != 0.0;
      if (!invertible) {
        rb.count_skip();
        return;
      }
      const DenseMatrix lhs = matrix_hom_eval(h, 1.0 / lambda).dense();
      rb.record(trial, rel_frob(lhs, inverse(fl)), what + ", k = -1", {}, {lambda});
    } catch (const std::exception& e) {
      rb.error(trial, e, what, {}, {lambda});
    }
  };

  std::size_t trial = 0;
  check(trial++, "edge: lambda = 1", 1.0);
  check(trial++, "edge: lambda = 0", 0.0);
  check(trial++, "edge: lambda = 2", 2.0);
  if (h.domain() == Domain::R) check(trial++, "edge: lambda = -1", -1.0);
  for (std::size_t t = 0; t < config.trials; ++t) {
    Rng rng = Rng::for_trial(config.seed, t);
    check(trial++, "random", draw_scalars(h.domain(), rng, 1).front());
  }
  return rb.finish();
}

VerificationReport check_similarity_invariance(const ScalarHom& h, const SampleConfig& config,
                                               const ToleranceConfig& cfg) {
  config.validate();
  if (h.n() != config.n) throw Error(ErrorKind::DimensionMismatch, "hom size differs from sample size");
  const std::size_t n = config.n;
  ReportBuilder rb("similarity", config, kSimilarityTol);
  auto check = [&](std::size_t trial, const std::string& what, const HermitianMatrix& a, const DenseMatrix& u) {
    rb.count_trial();
    const HermitianMatrix c = similarity(u, a);
    try {
      const Complex fa = scalar_hom_eval(h, a, cfg);
      const Complex fc = scalar_hom_eval(h, c, cfg);
      rb.record(trial, std::abs(fc - fa) / (1.0 + std::abs(fa)), what, {a, c}, {fa, fc});
    } catch (const std::exception& e) {
      rb.error(trial, e, what, {a, c});
    }
  };

  std::size_t trial = 0;
  {
    Rng rng = Rng::for_trial(config.seed ^ kEdgeStream, 0);
    check(trial++, "edge: diag(1..n), U = exchange", HermitianMatrix::diagonal(ramp(n)), exchange_matrix(n).dense());
    check(trial++, "edge: A = I", HermitianMatrix::identity(n), random_unitary(n, rng));
    check(trial++, "edge: A = 0", HermitianMatrix::zero(n), random_unitary(n, rng));
    const HermitianMatrix sing = gen_hermitian(singular_kind(n), n, rng);
    check(trial++, "edge: A singular", sing, random_unitary(n, rng));
  }
  for (std::size_t t = 0; t < config.trials; ++t) {
    Rng rng = Rng::for_trial(config.seed, t);
    const HermitianMatrix a = gen_hermitian(config.spectrum_kind, n, rng);
    check(trial++, "random", a, random_unitary(n, rng));
  }
  return rb.finish();
}

VerificationReport check_sylvester(const SampleConfig& config, const ToleranceConfig& cfg) {
  config.validate();
  const std::size_t n = config.n;
  ReportBuilder rb("sylvester", config, 0.0);
  auto check = [&](std::size_t trial, const std::string& what, const HermitianMatrix& a, const HermitianMatrix& b) {
    rb.count_trial();
    try {
      const HermitianMatrix aba = jtp(a, b);
      const std::size_t eig_b = inertia_eigen(b, cfg).n_plus;
      const std::size_t eig_aba = inertia_eigen(aba, cfg).n_plus;
      const std::size_t ldl_b = inertia_ldl(b, cfg).n_plus;
      const std::size_t ldl_aba = inertia_ldl(aba, cfg).n_plus;
      const double mismatches = (eig_b != eig_aba ? 1.0 : 0.0) + (ldl_b != ldl_aba ? 1.0 : 0.0);
      rb.record(trial, mismatches, what, {a, b},
                {static_cast<double>(eig_b), static_cast<double>(eig_aba), static_cast<double>(ldl_b),
                 static_cast<double>(ldl_aba)});
    } catch (const std::exception& e) {
      rb.error(trial, e, what, {a, b});
    }
  };

  std::size_t trial = 0;
  {
    Rng rng = Rng::for_trial(config.seed ^ kEdgeStream, 0);
    std::vector<double> alternating(n);
    for (std::size_t i = 0; i < n; ++i) alternating[i] = (i % 2 == 0) ? 2.0 : -1.0;
    check(trial++, "edge: A = I", HermitianMatrix::identity(n), gen_hermitian(GenericSpectrum{}, n, rng));
    check(trial++, "edge: A = diag(2,-1,...), B = I", HermitianMatrix::diagonal(alternating),
          HermitianMatrix::identity(n));
    check(trial++, "edge: A = exchange", exchange_matrix(n), gen_hermitian(GenericSpectrum{}, n, rng));
    check(trial++, "edge: B = 0", gen_hermitian(GenericSpectrum{}, n, rng), HermitianMatrix::zero(n));
    check(trial++, "edge: B singular", gen_hermitian(GenericSpectrum{}, n, rng),
          gen_hermitian(singular_kind(n), n, rng));
  }
  for (std::size_t t = 0; t < config.trials; ++t) {
    Rng rng = Rng::for_trial(config.seed, t);
    const auto plus = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n)));
    const HermitianMatrix a = gen_hermitian(PlantedInertia{plus, n - plus, 0}, n, rng);
    SpectrumKind b_kind = GenericSpectrum{};
    if (t % 3 == 1) b_kind = config.spectrum_kind;
    if (t % 3 == 2) b_kind = RankDeficient{static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n) - 1))};
    check(trial++, "random", a, gen_hermitian(b_kind, n, rng));
  }
  return rb.finish();
}

VerificationReport check_rank_deficiency(const ScalarHom& h, const SampleConfig& config, const ToleranceConfig& cfg) {
  config.validate();
  if (h.n() != config.n) throw Error(ErrorKind::DimensionMismatch, "hom size differs from sample size");
  if (h.psi().at_zero() != 0.0) {
    throw Error(ErrorKind::PreconditionViolated, "rank deficiency suite needs Psi(0) = 0");
  }
  const std::size_t n = config.n;
  ReportBuilder rb("rank-deficiency", config, kRankDeficiencyTol);
  auto check = [&](std::size_t trial, const std::string& what, const HermitianMatrix& a) {
    rb.count_trial();
    try {
      const Complex v = scalar_hom_eval(h, a, cfg);
      rb.record(trial, std::abs(v), what, {a}, {v});
    } catch (const std::exception& e) {
      rb.error(trial, e, what, {a});
    }
  };

  std::size_t trial = 0;
  std::vector<double> ones(n, 1.0);
  ones.back() = 0.0;
  check(trial++, "edge: A = 0", HermitianMatrix::zero(n));
  check(trial++, "edge: A = diag(1,...,1,0)", HermitianMatrix::diagonal(ones));
  const auto* fixed = std::get_if<RankDeficient>(&config.spectrum_kind);
  for (std::size_t t = 0; t < config.trials; ++t) {
    Rng rng = Rng::for_trial(config.seed, t);
    std::size_t rank = 0;
    if (fixed != nullptr && fixed->rank < n) {
      rank = fixed->rank;
    } else {
      rank = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n) - 1));
    }
    check(trial++, "random rank " + std::to_string(rank), gen_hermitian(RankDeficient{rank}, n, rng));
  }
  return rb.finish();
}

// ---------------------------------------------------------------------------
// built-in battery

std::vector<NamedScalarHom> builtin_scalar_homs(std::size_t n) {
  std::vector<int> mixed_unital(n + 1);
  std::vector<int> mixed_negative(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    mixed_unital[k] = (k % 2 == 0) ? 1 : -1;
    mixed_negative[k] = (k % 3 == 0) ? -1 : 1;
  }
  mixed_unital[n] = 1;
  mixed_negative[n] = -1;
  std::vector<NamedScalarHom> out;
  out.push_back({"zero", ScalarHom(n, MultiplicativeMap::zero(), EtaPattern::constant(n, 1))});
  out.push_back({"one/eta+", ScalarHom(n, MultiplicativeMap::one(), EtaPattern::constant(n, 1))});
  out.push_back({"one/eta-", ScalarHom(n, MultiplicativeMap::one(), EtaPattern::constant(n, -1))});
  out.push_back({"power(1)", ScalarHom(n, MultiplicativeMap::power(1.0), EtaPattern::constant(n, 1))});
  out.push_back({"power(1/2)/mixed", ScalarHom(n, MultiplicativeMap::power(0.5), EtaPattern(mixed_unital))});
  out.push_back(
      {"power(1+i)/mixed", ScalarHom(n, MultiplicativeMap::power(Complex(1.0, 1.0)), EtaPattern(mixed_negative))});
  return out;
}

std::vector<NamedMatrixHom> builtin_matrix_homs() {
  Rng rng(20240611);
  using RC = RealCharacter;
  std::vector<NamedMatrixHom> out;
  {
    const Domain d = Domain::C;
    out.push_back({"C/powers", MatrixHom(random_unitary(3, rng), {1, -1, 1},
                                         {RC::signed_power(1.0, 0, d), RC::signed_power(2.0, 0, d),
                                          RC::signed_power(-0.5, 0, d)},
                                         d)});
  }
  {
    const Domain d = Domain::R;
    out.push_back({"R/signed", MatrixHom(random_unitary(3, rng), {1, 1, -1},
                                         {RC::signed_power(1.0, 1, d), RC::signed_power(2.0, 0, d),
                                          RC::signed_power(3.0, 1, d)},
                                         d)});
  }
  {
    const Domain d = Domain::R;
    out.push_back({"R/zero-slots", MatrixHom(random_unitary(4, rng), {1, -1, 1, 1},
                                             {RC::signed_power(1.0, 1, d), RC::zero(d), RC::signed_power(0.5, 0, d),
                                              RC::zero(d)},
                                             d)});
  }
  {
    const Domain d = Domain::C;
    out.push_back(
        {"C/constant", MatrixHom(random_unitary(3, rng), {1, -1, 1}, {RC::one(d), RC::one(d), RC::one(d)}, d)});
  }
  {
    const Domain d = Domain::RPlus0;
    out.push_back({"R+0/mixed", MatrixHom(random_unitary(3, rng), {-1, 1, 1},
                                          {RC::signed_power(1.5, 0, d), RC::one(d), RC::signed_power(-1.0, 0, d)},
                                          d)});
  }
  return out;
}

MatrixHom random_matrix_hom(Domain domain, std::size_t n, Rng& rng) {
  DenseMatrix t = random_unitary(n, rng);
  std::vector<int> d(n);
  std::vector<RealCharacter> chars;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = rng.sign();
    const double p = rng.uniform(-2.0, 2.0);
    const int s = domain == Domain::R ? static_cast<int>(rng.uniform_int(0, 1)) : 0;
    chars.push_back(RealCharacter::signed_power(p, s, domain));
  }
  return MatrixHom(std::move(t), std::move(d), std::move(chars), domain);
}

}  // namespace jtp
