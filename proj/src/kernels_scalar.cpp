#include "jtp/kernels.hpp"

namespace jtp::kernels {
namespace {

// Written on real and imaginary parts: std::complex operator* carries an
// Annex G NaN recovery branch that we neither need nor want in the hot loop.

void gemm_scalar(std::size_t n, const Complex* a, const Complex* b, Complex* c) {
  for (std::size_t i = 0; i < n * n; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    Complex* crow = c + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const double ar = a[i * n + k].real();
      const double ai = a[i * n + k].imag();
      const Complex* brow = b + k * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double br = brow[j].real();
        const double bi = brow[j].imag();
        crow[j] = Complex(crow[j].real() + (ar * br - ai * bi), crow[j].imag() + (ar * bi + ai * br));
      }
    }
  }
}

void axpy_scalar(std::size_t len, Complex alpha, const Complex* x, Complex* y) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t i = 0; i < len; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = Complex(y[i].real() + (ar * xr - ai * xi), y[i].imag() + (ar * xi + ai * xr));
  }
}

inline Complex cmul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

void rotate_pair_scalar(std::size_t len, const std::array<Complex, 4>& m, Complex* x, Complex* y) {
  for (std::size_t i = 0; i < len; ++i) {
    const Complex xv = x[i];
    const Complex yv = y[i];
    x[i] = cmul(m[0], xv) + cmul(m[1], yv);
    y[i] = cmul(m[2], xv) + cmul(m[3], yv);
  }
}

Complex dotc_scalar(std::size_t len, const Complex* x, const Complex* y) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::Scalar, gemm_scalar, axpy_scalar, rotate_pair_scalar, dotc_scalar};
  return table;
}

}  // namespace jtp::kernels
