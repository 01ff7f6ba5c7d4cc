#include "jtp/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "jtp/kernels.hpp"

namespace jtp {

std::vector<Complex> Spectrum::column(std::size_t i) const {
  std::vector<Complex> v(eigenvectors.n());
  for (std::size_t r = 0; r < v.size(); ++r) v[r] = eigenvectors(r, i);
  return v;
}

double norm2(const std::vector<Complex>& v) {
  return std::sqrt(kernels::active().dotc(v.size(), v.data(), v.data()).real());
}

UnitVector UnitVector::normalized(std::vector<Complex> v) {
  const double nrm = norm2(v);
  if (!(nrm > 0.0) || !std::isfinite(nrm)) throw Error(ErrorKind::InvalidArgument, "cannot normalize a zero vector");
  for (Complex& z : v) z /= nrm;
  return UnitVector(std::move(v));
}

UnitVector UnitVector::checked(std::vector<Complex> v, double tol) {
  const double nrm = norm2(v);
  if (!(std::abs(nrm - 1.0) <= tol)) {
    throw Error(ErrorKind::InvalidArgument, "vector norm " + std::to_string(nrm) + " is not 1");
  }
  return UnitVector(std::move(v));
}

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

struct JacobiResult {
  std::vector<double> diag;
  DenseMatrix vt;  // rows are eigenvectors, unsorted
};

JacobiResult run_jacobi(const HermitianMatrix& input, const ToleranceConfig& cfg, bool want_vectors) {
  const std::size_t n = input.n();
  const auto& k = kernels::active();
  DenseMatrix a = input.dense();
  DenseMatrix vt = DenseMatrix::identity(n);
  const double anorm = frobenius_norm(a);
  const double strict = 4.0 * std::numeric_limits<double>::epsilon() * anorm;

  double off = off_diagonal_norm(a);
  for (int sweep = 0; sweep < kMaxJacobiSweeps && off > strict; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex b = a(p, q);
        const double bmag = std::abs(b);
        if (bmag == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        if (sweep > 4 && std::abs(app) + 100.0 * bmag == std::abs(app) &&
            std::abs(aqq) + 100.0 * bmag == std::abs(aqq)) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        // Real symmetric Schur rotation on [[app, |b|], [|b|, aqq]], |angle| <= pi/4,
        // conjugated by diag(1, e^{-i arg b}).
        const double tau = (aqq - app) / (2.0 * bmag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;
        const Complex phase = b / bmag;  // e^{i phi}

        // rows p, q <- J^H rows p, q
        k.rotate_pair(n, {Complex(c), -s * phase, s * std::conj(phase), Complex(c)}, &a(p, 0), &a(q, 0));
        for (std::size_t j = 0; j < n; ++j) {
          if (j == p || j == q) continue;
          a(j, p) = std::conj(a(p, j));
          a(j, q) = std::conj(a(q, j));
        }
        a(p, p) = app - t * bmag;
        a(q, q) = aqq + t * bmag;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        if (want_vectors) {
          // V <- V J, i.e. rows of V^T <- J^T rows
          k.rotate_pair(n, {Complex(c), -s * std::conj(phase), s * phase, Complex(c)}, &vt(p, 0), &vt(q, 0));
        }
      }
    }
    off = off_diagonal_norm(a);
  }
  if (off > strict && off > cfg.resid_tol * anorm) {
    throw Error(ErrorKind::NoConvergence, "Jacobi off-diagonal mass " + std::to_string(off) + " after " +
                                              std::to_string(kMaxJacobiSweeps) + " sweeps");
  }
  JacobiResult r{std::vector<double>(n), std::move(vt)};
  for (std::size_t i = 0; i < n; ++i) r.diag[i] = a(i, i).real();
  return r;
}

std::vector<std::size_t> descending_order(const std::vector<double>& d) {
  std::vector<std::size_t> idx(d.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return d[x] > d[y]; });
  return idx;
}

}  // namespace

Spectrum jacobi_eigh(const HermitianMatrix& a, const ToleranceConfig& cfg) {
  JacobiResult r = run_jacobi(a, cfg, true);
  const std::size_t n = a.n();
  const auto order = descending_order(r.diag);
  Spectrum out{std::vector<double>(n), DenseMatrix(n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.eigenvalues[i] = r.diag[order[i]];
    for (std::size_t row = 0; row < n; ++row) out.eigenvectors(row, i) = r.vt(order[i], row);
  }
  return out;
}

std::vector<double> eigenvalues(const HermitianMatrix& a, const ToleranceConfig& cfg) {
  JacobiResult r = run_jacobi(a, cfg, false);
  std::vector<double> out(r.diag.size());
  const auto order = descending_order(r.diag);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = r.diag[order[i]];
  return out;
}

UnitVector phase_normalize_first_real(const UnitVector& v) {
  const Complex first = v[0];
  const double mag = std::abs(first);
  if (mag < 1e-14) return v;
  const Complex rot = std::conj(first) / mag;
  std::vector<Complex> out(v.components());
  for (Complex& z : out) z *= rot;
  out[0] = Complex(mag, 0.0);
  return UnitVector(std::move(out));
}

}  // namespace jtp
