// Compiled with -mavx2 -mfma. Nothing in this file may run before
// avx2_table() has confirmed CPU support.

#include <immintrin.h>

#include "jtp/kernels.hpp"

namespace jtp::kernels::avx2 {
namespace {

// Two interleaved complex doubles per register: [re0, im0, re1, im1].

inline __m256d load2(const Complex* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(Complex* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

// (ar + i ai) * v for both lanes of v.
inline __m256d cmul_bcast(__m256d ar, __m256d ai, __m256d v) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, swapped));
}

inline Complex cmul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

void gemm(std::size_t n, const Complex* a, const Complex* b, Complex* c) {
  const std::size_t jvec = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n; ++i) {
    const Complex* arow = a + i * n;
    Complex* crow = c + i * n;
    for (std::size_t j = 0; j < jvec; j += 4) {
      __m256d acc0 = _mm256_setzero_pd();
      __m256d acc1 = _mm256_setzero_pd();
      for (std::size_t k = 0; k < n; ++k) {
        const __m256d ar = _mm256_set1_pd(arow[k].real());
        const __m256d ai = _mm256_set1_pd(arow[k].imag());
        const Complex* brow = b + k * n + j;
        acc0 = _mm256_add_pd(acc0, cmul_bcast(ar, ai, load2(brow)));
        acc1 = _mm256_add_pd(acc1, cmul_bcast(ar, ai, load2(brow + 2)));
      }
      store2(crow + j, acc0);
      store2(crow + j + 2, acc1);
    }
    for (std::size_t j = jvec; j < n; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += cmul(arow[k], b[k * n + j]);
      crow[j] = acc;
    }
  }
}

void axpy(std::size_t len, Complex alpha, const Complex* x, Complex* y) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) store2(y + i, _mm256_add_pd(load2(y + i), cmul_bcast(ar, ai, load2(x + i))));
  for (; i < len; ++i) y[i] += cmul(alpha, x[i]);
}

void rotate_pair(std::size_t len, const std::array<Complex, 4>& m, Complex* x, Complex* y) {
  const __m256d m0r = _mm256_set1_pd(m[0].real()), m0i = _mm256_set1_pd(m[0].imag());
  const __m256d m1r = _mm256_set1_pd(m[1].real()), m1i = _mm256_set1_pd(m[1].imag());
  const __m256d m2r = _mm256_set1_pd(m[2].real()), m2i = _mm256_set1_pd(m[2].imag());
  const __m256d m3r = _mm256_set1_pd(m[3].real()), m3i = _mm256_set1_pd(m[3].imag());
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d xv = load2(x + i);
    const __m256d yv = load2(y + i);
    store2(x + i, _mm256_add_pd(cmul_bcast(m0r, m0i, xv), cmul_bcast(m1r, m1i, yv)));
    store2(y + i, _mm256_add_pd(cmul_bcast(m2r, m2i, xv), cmul_bcast(m3r, m3i, yv)));
  }
  for (; i < len; ++i) {
    const Complex xv = x[i];
    const Complex yv = y[i];
    x[i] = cmul(m[0], xv) + cmul(m[1], yv);
    y[i] = cmul(m[2], xv) + cmul(m[3], yv);
  }
}

Complex dotc(std::size_t len, const Complex* x, const Complex* y) {
  __m256d same = _mm256_setzero_pd();   // [xr*yr, xi*yi, ...]
  __m256d cross = _mm256_setzero_pd();  // [xr*yi, xi*yr, ...]
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d xv = load2(x + i);
    const __m256d yv = load2(y + i);
    same = _mm256_fmadd_pd(xv, yv, same);
    cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), cross);
  }
  alignas(32) double s[4];
  alignas(32) double c[4];
  _mm256_store_pd(s, same);
  _mm256_store_pd(c, cross);
  double re = (s[0] + s[1]) + (s[2] + s[3]);
  double im = (c[0] - c[1]) + (c[2] - c[3]);
  for (; i < len; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

}  // namespace

const KernelTable& table() {
  static const KernelTable t{Isa::Avx2, gemm, axpy, rotate_pair, dotc};
  return t;
}

}  // namespace jtp::kernels::avx2
