#include "jtp/inertia.hpp"

#include <algorithm>
#include <cmath>

#include "jtp/eigen.hpp"
#include "jtp/kernels.hpp"

namespace jtp {
namespace {

void classify(double value, double threshold, Inertia& out) {
  if (value > threshold) {
    ++out.n_plus;
  } else if (value < -threshold) {
    ++out.n_minus;
  } else {
    ++out.n_zero;
  }
}

void symmetric_swap(DenseMatrix& w, std::size_t p, std::size_t q) {
  if (p == q) return;
  std::swap_ranges(w.row(p).begin(), w.row(p).end(), w.row(q).begin());
  for (std::size_t i = 0; i < w.n(); ++i) std::swap(w(i, p), w(i, q));
}

}  // namespace

double zero_threshold(const HermitianMatrix& a, const ToleranceConfig& cfg) {
  return cfg.zero_tol * std::max(1.0, frobenius_norm(a));
}

Inertia inertia_eigen(const HermitianMatrix& a, const ToleranceConfig& cfg) {
  const double s = zero_threshold(a, cfg);
  Inertia out;
  for (double lambda : eigenvalues(a, cfg)) classify(lambda, s, out);
  return out;
}

Inertia inertia_ldl(const HermitianMatrix& a, const ToleranceConfig& cfg) {
  const std::size_t n = a.n();
  const double s = zero_threshold(a, cfg);
  const double alpha = (1.0 + std::sqrt(17.0)) / 8.0;
  const auto& kern = kernels::active();
  DenseMatrix w = a.dense();
  Inertia out;

  std::size_t k = 0;
  while (k < n) {
    // Move the column holding the largest remaining entry to position k so a
    // numerically zero column is never chosen as pivot while mass remains.
    double big = 0.0;
    std::size_t big_col = k;
    for (std::size_t i = k; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const double mag = std::abs(w(i, j));
        if (mag > big) {
          big = mag;
          big_col = j;
        }
      }
    }
    if (!std::isfinite(big)) throw Error(ErrorKind::BreakdownUnresolvable, "non-finite entry in Schur complement");
    if (big <= s) {
      out.n_zero += n - k;
      break;
    }
    symmetric_swap(w, k, big_col);

    // Bunch-Kaufman pivot choice on column k.
    const double akk = std::abs(w(k, k).real());
    double lambda = 0.0;
    std::size_t r = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(w(i, k)) > lambda) {
        lambda = std::abs(w(i, k));
        r = i;
      }
    }
    bool two_by_two = false;
    if (lambda > 0.0 && akk < alpha * lambda) {
      double sigma = 0.0;
      for (std::size_t i = k; i < n; ++i)
        if (i != r) sigma = std::max(sigma, std::abs(w(i, r)));
      if (akk * sigma >= alpha * lambda * lambda) {
        // 1x1 at k
      } else if (std::abs(w(r, r).real()) >= alpha * sigma) {
        symmetric_swap(w, k, r);
      } else {
        symmetric_swap(w, k + 1, r);
        two_by_two = true;
      }
    }

    if (!two_by_two) {
      const double d = w(k, k).real();
      if (d == 0.0) throw Error(ErrorKind::BreakdownUnresolvable, "zero 1x1 pivot with nonzero remainder");
      classify(d, s, out);
      for (std::size_t i = k + 1; i < n; ++i) {
        const Complex l = w(i, k) / d;
        if (l != 0.0) kern.axpy(n - k - 1, -l, &w(k, k + 1), &w(i, k + 1));
      }
      k += 1;
      continue;
    }

    const double e11 = w(k, k).real();
    const double e22 = w(k + 1, k + 1).real();
    const Complex e12 = w(k, k + 1);
    const double det = e11 * e22 - std::norm(e12);
    if (det == 0.0) throw Error(ErrorKind::BreakdownUnresolvable, "singular 2x2 pivot");
    const double mid = 0.5 * (e11 + e22);
    const double rad = std::hypot(0.5 * (e11 - e22), std::abs(e12));
    classify(mid + rad, s, out);
    classify(mid - rad, s, out);
    for (std::size_t i = k + 2; i < n; ++i) {
      const Complex l1 = (w(i, k) * e22 - w(i, k + 1) * std::conj(e12)) / det;
      const Complex l2 = (w(i, k + 1) * e11 - w(i, k) * e12) / det;
      if (l1 != 0.0) kern.axpy(n - k - 2, -l1, &w(k, k + 2), &w(i, k + 2));
      if (l2 != 0.0) kern.axpy(n - k - 2, -l2, &w(k + 1, k + 2), &w(i, k + 2));
    }
    k += 2;
  }
  return out;
}

double abs_det(const HermitianMatrix& a, const ToleranceConfig& cfg) {
  const Complex det = determinant(a.dense());
  if (std::abs(det.imag()) > cfg.resid_tol * (1.0 + std::abs(det.real()))) {
    throw Error(ErrorKind::ImaginaryResidueTooLarge,
                "determinant of a Hermitian matrix has imaginary part " + std::to_string(det.imag()));
  }
  return std::abs(det.real());
}

std::size_t syl(const HermitianMatrix& a, const ToleranceConfig& cfg) { return inertia_eigen(a, cfg).n_plus; }

}  // namespace jtp
