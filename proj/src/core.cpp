#include "jtp/core.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "jtp/kernels.hpp"

namespace jtp {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AsymmetryTooLarge: return "AsymmetryTooLarge";
    case ErrorKind::FirstComponentNotReal: return "FirstComponentNotReal";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InvalidHom: return "InvalidHom";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::BreakdownUnresolvable: return "BreakdownUnresolvable";
    case ErrorKind::ImaginaryResidueTooLarge: return "ImaginaryResidueTooLarge";
    case ErrorKind::NotTripotent: return "NotTripotent";
    case ErrorKind::NotSimultaneouslyDiagonalizable: return "NotSimultaneouslyDiagonalizable";
    case ErrorKind::InconsistentSamples: return "InconsistentSamples";
    case ErrorKind::DegenerateRandomMatrix: return "DegenerateRandomMatrix";
  }
  return "Unknown";
}

bool is_numerical(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoConvergence:
    case ErrorKind::BreakdownUnresolvable:
    case ErrorKind::ImaginaryResidueTooLarge:
    case ErrorKind::NotTripotent:
    case ErrorKind::NotSimultaneouslyDiagonalizable:
    case ErrorKind::InconsistentSamples:
    case ErrorKind::DegenerateRandomMatrix:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void ToleranceConfig::validate() const {
  for (double v : {herm_tol, zero_tol, resid_tol}) {
    if (!std::isfinite(v) || v < 0.0) throw Error(ErrorKind::InvalidArgument, "tolerances must be finite and >= 0");
  }
}

// ---------------------------------------------------------------------------
// DenseMatrix

DenseMatrix::DenseMatrix(std::size_t n) : n_(n), entries_(n * n, Complex(0.0, 0.0)) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "matrix dimension must be positive");
}

DenseMatrix::DenseMatrix(std::size_t n, std::vector<Complex> entries) : n_(n), entries_(std::move(entries)) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "matrix dimension must be positive");
  if (entries_.size() != n * n) {
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(n * n) + " entries, got " + std::to_string(entries_.size()));
  }
  for (const Complex& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorKind::InvalidArgument, "matrix entries must be finite");
    }
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

// ---------------------------------------------------------------------------
// HermitianMatrix

HermitianMatrix HermitianMatrix::identity(std::size_t n) { return HermitianMatrix(DenseMatrix::identity(n)); }

HermitianMatrix HermitianMatrix::zero(std::size_t n) { return HermitianMatrix(DenseMatrix(n)); }

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> d) {
  DenseMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!std::isfinite(d[i])) throw Error(ErrorKind::InvalidArgument, "diagonal entries must be finite");
    m(i, i) = d[i];
  }
  return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::symmetrize(const DenseMatrix& m) {
  const std::size_t n = m.n();
  DenseMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = Complex(m(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex upper = 0.5 * (m(i, j) + std::conj(m(j, i)));
      h(i, j) = upper;
      h(j, i) = std::conj(upper);
    }
  }
  return HermitianMatrix(std::move(h));
}

double max_asymmetry(const DenseMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = i; j < m.n(); ++j) worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  }
  return worst;
}

HermitianMatrix hermitize(const DenseMatrix& m, const ToleranceConfig& cfg) {
  const double asym = max_asymmetry(m);
  const double limit = cfg.herm_tol * (1.0 + max_abs_entry(m));
  if (asym > limit) {
    throw Error(ErrorKind::AsymmetryTooLarge,
                "max |M - M*| = " + std::to_string(asym) + " exceeds " + std::to_string(limit));
  }
  return HermitianMatrix::symmetrize(m);
}

HermitianMatrix jtp(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.n() != b.n()) throw Error(ErrorKind::DimensionMismatch, "jtp operands differ in size");
  return HermitianMatrix::symmetrize(mat_mul(mat_mul(a.dense(), b.dense()), a.dense()));
}

HermitianMatrix exchange_matrix(std::size_t n) {
  DenseMatrix e(n);
  for (std::size_t i = 0; i < n; ++i) e(i, n - 1 - i) = 1.0;
  return HermitianMatrix::symmetrize(e);
}

HermitianMatrix direct_sum(const HermitianMatrix& a, const HermitianMatrix& b) {
  const std::size_t na = a.n();
  DenseMatrix m(na + b.n());
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.n(); ++i)
    for (std::size_t j = 0; j < b.n(); ++j) m(na + i, na + j) = b(i, j);
  return HermitianMatrix::symmetrize(m);
}

// ---------------------------------------------------------------------------
// plumbing

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.n() != b.n()) throw Error(ErrorKind::DimensionMismatch, "mat_mul operands differ in size");
  DenseMatrix c(a.n());
  kernels::active().gemm(a.n(), a.data(), b.data(), c.data());
  return c;
}

DenseMatrix adjoint(const DenseMatrix& a) {
  DenseMatrix t(a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

DenseMatrix matrix_sub(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.n() != b.n()) throw Error(ErrorKind::DimensionMismatch, "matrix_sub operands differ in size");
  DenseMatrix c(a.n());
  for (std::size_t i = 0; i < a.entries().size(); ++i) c.entries()[i] = a.entries()[i] - b.entries()[i];
  return c;
}

double frobenius_norm(const DenseMatrix& a) {
  const auto e = a.entries();
  return std::sqrt(kernels::active().dotc(e.size(), e.data(), e.data()).real());
}

double frobenius_norm(const HermitianMatrix& a) { return frobenius_norm(a.dense()); }

double max_abs_entry(const DenseMatrix& a) {
  double m = 0.0;
  for (const Complex& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

Complex trace(const DenseMatrix& a) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.n(); ++i) t += a(i, i);
  return t;
}

HermitianMatrix matrix_power(const HermitianMatrix& a, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "matrix_power needs k >= 0");
  if (k == 0) return HermitianMatrix::identity(a.n());
  DenseMatrix p = a.dense();
  for (int i = 1; i < k; ++i) p = mat_mul(p, a.dense());
  return HermitianMatrix::symmetrize(p);
}

LuResult lu_decompose(const DenseMatrix& a) {
  const std::size_t n = a.n();
  LuResult r{a, {}, 1, false};
  r.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.perm[i] = i;
  DenseMatrix& m = r.lu;
  const auto& k = kernels::active();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::abs(m(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (std::abs(m(i, col)) > best) {
        best = std::abs(m(i, col));
        piv = i;
      }
    }
    if (best == 0.0) {
      r.singular = true;
      continue;
    }
    if (piv != col) {
      std::swap_ranges(m.row(col).begin(), m.row(col).end(), m.row(piv).begin());
      std::swap(r.perm[col], r.perm[piv]);
      r.perm_sign = -r.perm_sign;
    }
    const Complex pivot = m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      const Complex l = m(i, col) / pivot;
      m(i, col) = l;
      if (l != 0.0) k.axpy(n - col - 1, -l, &m(col, col + 1), &m(i, col + 1));
    }
  }
  return r;
}

Complex determinant(const DenseMatrix& a) {
  const LuResult r = lu_decompose(a);
  if (r.singular) return 0.0;
  Complex det = static_cast<double>(r.perm_sign);
  for (std::size_t i = 0; i < a.n(); ++i) det *= r.lu(i, i);
  return det;
}

DenseMatrix inverse(const DenseMatrix& a) {
  const std::size_t n = a.n();
  const LuResult r = lu_decompose(a);
  if (r.singular) throw Error(ErrorKind::InvalidArgument, "inverse of a singular matrix");
  DenseMatrix inv(n);
  std::vector<Complex> x(n);
  for (std::size_t col = 0; col < n; ++col) {
    // P A = L U; solve L U x = P e_col.
    for (std::size_t i = 0; i < n; ++i) x[i] = (r.perm[i] == col) ? 1.0 : 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) x[i] -= r.lu(i, j) * x[j];
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = i + 1; j < n; ++j) x[i] -= r.lu(i, j) * x[j];
      x[i] /= r.lu(i, i);
    }
    for (std::size_t i = 0; i < n; ++i) inv(i, col) = x[i];
  }
  return inv;
}

}  // namespace jtp
