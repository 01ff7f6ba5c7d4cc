#pragma once

// Dense complex matrices, the Hermitian subtype and the Jordan triple
// product A*B*A.

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace jtp {

using Complex = std::complex<double>;

enum class ErrorKind {
  // input / contract errors
  InvalidArgument,
  DimensionMismatch,
  AsymmetryTooLarge,
  FirstComponentNotReal,
  DomainViolation,
  InsufficientSamples,
  PreconditionViolated,
  InvalidHom,
  Parse,
  // numerical failures
  NoConvergence,
  BreakdownUnresolvable,
  ImaginaryResidueTooLarge,
  NotTripotent,
  NotSimultaneouslyDiagonalizable,
  InconsistentSamples,
  DegenerateRandomMatrix,
};

const char* to_string(ErrorKind kind);

// True for the kinds that signal a numerical failure rather than bad input.
bool is_numerical(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct ToleranceConfig {
  double herm_tol = 1e-9;
  double zero_tol = 1e-8;
  double resid_tol = 1e-9;

  // Throws InvalidArgument unless every field is finite and nonnegative.
  void validate() const;
};

class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n);  // zero matrix
  DenseMatrix(std::size_t n, std::vector<Complex> entries);

  static DenseMatrix identity(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }
  const Complex* data() const noexcept { return entries_.data(); }
  Complex* data() noexcept { return entries_.data(); }

  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  std::span<const Complex> row(std::size_t i) const { return {entries_.data() + i * n_, n_}; }
  std::span<Complex> row(std::size_t i) { return {entries_.data() + i * n_, n_}; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> entries_;
};

// A = A* holds exactly: entry (j,i) is the bitwise conjugate of entry (i,j)
// and diagonal imaginary parts are exactly zero.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  static HermitianMatrix identity(std::size_t n);
  static HermitianMatrix zero(std::size_t n);
  static HermitianMatrix diagonal(std::span<const double> d);

  // Exact symmetrization (M + M*)/2 with no tolerance check. For products
  // that are Hermitian in exact arithmetic.
  static HermitianMatrix symmetrize(const DenseMatrix& m);

  std::size_t n() const noexcept { return m_.n(); }
  const DenseMatrix& dense() const noexcept { return m_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  std::span<const Complex> row(std::size_t i) const { return m_.row(i); }

  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  explicit HermitianMatrix(DenseMatrix m) : m_(std::move(m)) {}
  DenseMatrix m_;
};

// Largest |M(i,j) - conj(M(j,i))|.
double max_asymmetry(const DenseMatrix& m);

// (M + M*)/2. Throws AsymmetryTooLarge when the asymmetry exceeds
// herm_tol * (1 + max|M|).
HermitianMatrix hermitize(const DenseMatrix& m, const ToleranceConfig& cfg = {});

// A*B*A, re-symmetrized.
HermitianMatrix jtp(const HermitianMatrix& a, const HermitianMatrix& b);

HermitianMatrix exchange_matrix(std::size_t n);
HermitianMatrix direct_sum(const HermitianMatrix& a, const HermitianMatrix& b);

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix adjoint(const DenseMatrix& a);
DenseMatrix matrix_sub(const DenseMatrix& a, const DenseMatrix& b);
double frobenius_norm(const DenseMatrix& a);
double frobenius_norm(const HermitianMatrix& a);
double max_abs_entry(const DenseMatrix& a);
Complex trace(const DenseMatrix& a);

// Integer power by repeated multiplication; k >= 0.
HermitianMatrix matrix_power(const HermitianMatrix& a, int k);

// LU with partial pivoting. Used for determinants and inverses.
struct LuResult {
  DenseMatrix lu;
  std::vector<std::size_t> perm;
  int perm_sign = 1;
  bool singular = false;  // an exactly zero pivot was met
};
LuResult lu_decompose(const DenseMatrix& a);
Complex determinant(const DenseMatrix& a);
// Throws InvalidArgument on an exactly singular input.
DenseMatrix inverse(const DenseMatrix& a);

}  // namespace jtp
