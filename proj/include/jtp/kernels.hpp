#pragma once

// Complex double inner loops. Each kernel has a portable scalar reference and,
// on x86-64 builds, an AVX2+FMA variant. The variant is picked once at first
// use from the running CPU; setting JTP_KERNELS=scalar in the environment
// forces the reference path.

#include <array>
#include <complex>
#include <cstddef>

namespace jtp::kernels {

using Complex = std::complex<double>;

enum class Isa { Scalar, Avx2 };

const char* to_string(Isa isa);

struct KernelTable {
  Isa isa;
  // c = a * b for n x n row-major matrices. c must not alias a or b.
  void (*gemm)(std::size_t n, const Complex* a, const Complex* b, Complex* c);
  // y += alpha * x
  void (*axpy)(std::size_t len, Complex alpha, const Complex* x, Complex* y);
  // (x, y) <- (m[0] x + m[1] y, m[2] x + m[3] y)
  void (*rotate_pair)(std::size_t len, const std::array<Complex, 4>& m, Complex* x, Complex* y);
  // sum conj(x_i) * y_i
  Complex (*dotc)(std::size_t len, const Complex* x, const Complex* y);
};

const KernelTable& scalar_table();

// nullptr when the build has no AVX2 variant or the CPU lacks AVX2/FMA.
const KernelTable* avx2_table();

const KernelTable& active();

}  // namespace jtp::kernels
