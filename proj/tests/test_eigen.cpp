#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "jtp/eigen.hpp"
#include "jtp/io.hpp"
#include "jtp/random.hpp"
#include "jtp/verify.hpp"
#include "support.hpp"

using namespace jtp;
using jtp::test::diag;

namespace {

// ||A V - V diag(w)||_F
double residual(const HermitianMatrix& a, const Spectrum& s) {
  const std::size_t n = a.n();
  DenseMatrix vd = s.eigenvectors;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) vd(i, j) *= s.eigenvalues[j];
  }
  return jtp::test::diff_norm(mat_mul(a.dense(), s.eigenvectors), vd);
}

double unitarity_defect(const DenseMatrix& v) {
  return jtp::test::diff_norm(mat_mul(adjoint(v), v), DenseMatrix::identity(v.n()));
}

}  // namespace

TEST_CASE("diagonal input") {
  const Spectrum s = jacobi_eigh(diag({3.0, 1.0}));
  CHECK(s.eigenvalues == std::vector<double>{3.0, 1.0});
  CHECK(s.eigenvectors == DenseMatrix::identity(2));
}

TEST_CASE("diagonal input out of order is sorted descending") {
  const Spectrum s = jacobi_eigh(diag({1.0, 3.0, -2.0}));
  CHECK(s.eigenvalues == std::vector<double>{3.0, 1.0, -2.0});
  CHECK(s.column(0) == std::vector<Complex>{0.0, 1.0, 0.0});
}

TEST_CASE("exchange matrix") {
  const HermitianMatrix e = exchange_matrix(2);
  const Spectrum s = jacobi_eigh(e);
  CHECK(s.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(residual(e, s) <= 1e-14);
  CHECK(unitarity_defect(s.eigenvectors) <= 1e-14);
}

TEST_CASE("1x1 and empty-ish inputs") {
  const Spectrum s = jacobi_eigh(diag({-4.5}));
  CHECK(s.eigenvalues == std::vector<double>{-4.5});
  CHECK(s.eigenvectors == DenseMatrix::identity(1));
  CHECK(eigenvalues(HermitianMatrix::zero(3)) == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("construct-then-solve recovers a planted spectrum") {
  Rng rng(8);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 8;
    std::vector<double> d(n);
    for (auto& x : d) x = rng.uniform(-5.0, 5.0);
    const DenseMatrix u = random_unitary(n, rng);
    const HermitianMatrix a =
        HermitianMatrix::symmetrize(mat_mul(mat_mul(u, HermitianMatrix::diagonal(d).dense()), adjoint(u)));
    std::sort(d.begin(), d.end(), std::greater<>());
    const Spectrum s = jacobi_eigh(a);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(s.eigenvalues[i] - d[i]) <= 1e-10);
    CHECK(residual(a, s) <= 1e-12 * (1.0 + frobenius_norm(a)));
    CHECK(unitarity_defect(s.eigenvectors) <= 1e-12);
  }
}

TEST_CASE("repeated eigenvalues and larger sizes") {
  Rng rng(21);
  for (std::size_t n : {2, 5, 16, 32, 48}) {
    CAPTURE(n);
    std::vector<double> d(n, 2.0);
    for (std::size_t i = 0; i < n / 2; ++i) d[i] = -1.0;
    const DenseMatrix u = random_unitary(n, rng);
    const HermitianMatrix a =
        HermitianMatrix::symmetrize(mat_mul(mat_mul(u, HermitianMatrix::diagonal(d).dense()), adjoint(u)));
    const Spectrum s = jacobi_eigh(a);
    CHECK(residual(a, s) <= 1e-11 * (1.0 + frobenius_norm(a)));
    CHECK(unitarity_defect(s.eigenvectors) <= 1e-11 * static_cast<double>(n));
    CHECK(std::is_sorted(s.eigenvalues.rbegin(), s.eigenvalues.rend()));
  }
}

TEST_CASE("eigenvalues match the numpy oracle") {
  const io::json oracles = io::read_json_file(jtp::test::data_path("oracles.json"));
  for (const auto& c : oracles["cases"]) {
    const HermitianMatrix a = io::matrix_from_json(c["a"]);
    const auto expected = c["eigenvalues"].get<std::vector<double>>();
    const std::vector<double> w = eigenvalues(a);
    REQUIRE(w.size() == expected.size());
    for (std::size_t i = 0; i < w.size(); ++i) CHECK(std::abs(w[i] - expected[i]) <= 1e-12 * (1.0 + frobenius_norm(a)));
  }
}

TEST_CASE("deterministic output") {
  const HermitianMatrix a = gen_hermitian(SampleConfig{3, 1, 9, GenericSpectrum{}});
  const Spectrum s1 = jacobi_eigh(a);
  const Spectrum s2 = jacobi_eigh(a);
  CHECK(s1.eigenvalues == s2.eigenvalues);
  CHECK(s1.eigenvectors == s2.eigenvectors);
}

TEST_CASE("unit vectors") {
  const UnitVector u = UnitVector::normalized({3.0, Complex(0.0, 4.0)});
  CHECK(u[0].real() == doctest::Approx(0.6));
  CHECK(norm2(u.components()) == doctest::Approx(1.0));
  CHECK_THROWS_AS(UnitVector::normalized({0.0, 0.0}), Error);
  CHECK_THROWS_AS(UnitVector::checked({1.0, 1.0}, 1e-12), Error);
  CHECK(UnitVector::checked({1.0, 0.0}, 1e-12).size() == 2);
}

TEST_CASE("phase normalization") {
  const Complex i{0.0, 1.0};
  SUBCASE("pure phase") {
    const UnitVector v = phase_normalize_first_real(UnitVector::normalized({i, 0.0}));
    CHECK(v[0] == Complex(1.0, 0.0));
    CHECK(v[1] == 0.0);
  }
  SUBCASE("zero first component is left alone") {
    const UnitVector v = phase_normalize_first_real(UnitVector::normalized({0.0, 1.0}));
    CHECK(v[0] == 0.0);
    CHECK(v[1] == 1.0);
  }
  SUBCASE("general vector") {
    const UnitVector in = UnitVector::normalized({Complex(1, 1) / 2.0, Complex(1, -1) / 2.0});
    const UnitVector v = phase_normalize_first_real(in);
    CHECK(v[0].imag() == 0.0);
    CHECK(v[0].real() == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
    CHECK(norm2(v.components()) == doctest::Approx(1.0).epsilon(1e-15));
    // second component rotated by the same phase e^{-i pi/4}
    CHECK(std::abs(v[1] - Complex(0.0, -std::sqrt(2.0) / 2.0)) < 1e-15);
  }
}
