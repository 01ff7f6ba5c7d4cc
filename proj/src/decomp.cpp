#include "jtp/decomp.hpp"

#include <cmath>

#include "jtp/kernels.hpp"

namespace jtp {
namespace {

// (I - b ww*) M (I - b ww*) = M - b wy* - b yw* + b^2 (w*Mw) ww*, y = Mw.
HermitianMatrix reflect_both_sides(const HermitianMatrix& m, const std::vector<Complex>& w, double beta) {
  const std::size_t n = m.n();
  const auto& k = kernels::active();
  std::vector<Complex> wbar(n);
  for (std::size_t i = 0; i < n; ++i) wbar[i] = std::conj(w[i]);
  std::vector<Complex> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = std::conj(k.dotc(n, m.row(i).data(), wbar.data()));
  const double alpha = k.dotc(n, w.data(), y.data()).real();

  DenseMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Complex wj = std::conj(w[j]);
      out(i, j) = m(i, j) - beta * (w[i] * std::conj(y[j]) + y[i] * wj) + beta * beta * alpha * w[i] * wj;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) out(i, j) = std::conj(out(j, i));
  return HermitianMatrix::symmetrize(out);
}

double squared_norm(const std::vector<Complex>& w) {
  double s = 0.0;
  for (const Complex& z : w) s += std::norm(z);
  return s;
}

}  // namespace

ReflectionFactor ReflectionFactor::identity(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "reflection dimension must be positive");
  return ReflectionFactor(n, std::nullopt, {}, 0.0);
}

ReflectionFactor ReflectionFactor::householder(UnitVector c) {
  const std::size_t n = c.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "reflection dimension must be positive");
  std::vector<Complex> w = c.components();
  return ReflectionFactor(n, std::move(c), std::move(w), 2.0);
}

ReflectionFactor ReflectionFactor::householder(std::vector<Complex> w) {
  const std::size_t n = w.size();
  const double s = squared_norm(w);
  if (n == 0 || !(s > 0.0)) throw Error(ErrorKind::InvalidArgument, "reflection direction must be nonzero");
  UnitVector c = UnitVector::normalized(w);
  return ReflectionFactor(n, std::move(c), std::move(w), 2.0 / s);
}

HermitianMatrix ReflectionFactor::realize() const {
  if (!c_) return HermitianMatrix::identity(n_);
  DenseMatrix b(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    b(i, i) = 1.0 - beta_ * std::norm(w_[i]);
    for (std::size_t j = i + 1; j < n_; ++j) b(i, j) = -beta_ * w_[i] * std::conj(w_[j]);
  }
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < i; ++j) b(i, j) = std::conj(b(j, i));
  return HermitianMatrix::symmetrize(b);
}

HermitianMatrix ReflectionFactor::conjugate(const HermitianMatrix& m) const {
  if (m.n() != n_) throw Error(ErrorKind::DimensionMismatch, "reflection and matrix differ in size");
  if (!c_) return m;
  return reflect_both_sides(m, w_, beta_);
}

ReflectionFactor reflection_mapping_e1_to(const UnitVector& v, const ToleranceConfig& cfg) {
  if (std::abs(v[0].imag()) > cfg.resid_tol) {
    throw Error(ErrorKind::FirstComponentNotReal, "first component of v has imaginary part " +
                                                      std::to_string(v[0].imag()));
  }
  const std::size_t n = v.size();
  std::vector<Complex> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = -v[i];
  // 1 - v_1 loses everything to cancellation when v_1 is near 1; use
  // 1 - v_1 = (1 - v_1^2) / (1 + v_1) = ||v_2..n||^2 / (1 + v_1) instead.
  const double v1 = v[0].real();
  if (v1 > 0.0) {
    double tail = 0.0;
    for (std::size_t i = 1; i < n; ++i) tail += std::norm(v[i]);
    w[0] = tail / (1.0 + v1);
  } else {
    w[0] = 1.0 - v1;
  }
  const double dist = norm2(w);
  if (dist <= kNearIdentityGuard) return ReflectionFactor::identity(n);
  return ReflectionFactor::householder(std::move(w));
}

Deflation deflate(const HermitianMatrix& a, const ToleranceConfig& cfg) {
  const std::size_t n = a.n();
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "deflate needs n >= 2");
  const Spectrum spec = jacobi_eigh(a, cfg);
  const UnitVector v = phase_normalize_first_real(UnitVector::normalized(spec.column(0)));
  ReflectionFactor factor = reflection_mapping_e1_to(v, cfg);
  const HermitianMatrix bab = factor.conjugate(a);
  DenseMatrix rest(n - 1);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) rest(i - 1, j - 1) = bab(i, j);
  return Deflation{std::move(factor), spec.eigenvalues[0], HermitianMatrix::symmetrize(rest)};
}

ReflectionDecomposition decompose(const HermitianMatrix& a, const ToleranceConfig& cfg) {
  const std::size_t n = a.n();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "decompose needs n >= 1");
  ReflectionDecomposition dec;
  dec.n = n;
  dec.diag.reserve(n);
  HermitianMatrix current = a;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    Deflation step = deflate(current, cfg);
    dec.factors.push_back(std::move(step.factor));
    dec.diag.push_back(step.lambda);
    current = std::move(step.rest);
  }
  dec.diag.push_back(current(0, 0).real());
  return dec;
}

HermitianMatrix reconstruct(const ReflectionDecomposition& dec) {
  const std::size_t n = dec.n;
  if (dec.diag.size() != n || dec.factors.size() + 1 != n) {
    throw Error(ErrorKind::DimensionMismatch, "decomposition needs n diagonal entries and n-1 factors");
  }
  HermitianMatrix m = HermitianMatrix::diagonal(dec.diag);
  for (std::size_t k = dec.factors.size(); k-- > 0;) {
    const ReflectionFactor& f = dec.factors[k];
    if (f.n() != n - k) throw Error(ErrorKind::DimensionMismatch, "factor size does not match its position");
    if (f.kind() == ReflectionFactor::Kind::Identity) continue;
    std::vector<Complex> padded(n, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < f.n(); ++i) padded[k + i] = f.w_[i];
    m = reflect_both_sides(m, padded, f.beta_);
  }
  return m;
}

}  // namespace jtp
