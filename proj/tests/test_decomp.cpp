#include <doctest.h>

#include <cmath>
#include <numbers>

#include "jtp/decomp.hpp"
#include "jtp/random.hpp"
#include "jtp/verify.hpp"
#include "support.hpp"

using namespace jtp;
using jtp::test::diag;
using jtp::test::diff_norm;

namespace {

UnitVector random_unit_real_first(std::size_t n, Rng& rng) {
  std::vector<Complex> v(n);
  for (auto& z : v) z = rng.complex_normal();
  v[0] = std::abs(v[0]);
  return UnitVector::normalized(std::move(v));
}

HermitianMatrix conjugate_by(const DenseMatrix& u, const std::vector<double>& d) {
  return HermitianMatrix::symmetrize(mat_mul(mat_mul(u, HermitianMatrix::diagonal(d).dense()), adjoint(u)));
}

}  // namespace

TEST_CASE("reflection of e1 is the identity") {
  const ReflectionFactor f = reflection_mapping_e1_to(UnitVector::normalized({1.0, 0.0, 0.0}));
  CHECK(f.kind() == ReflectionFactor::Kind::Identity);
  CHECK(f.realize() == HermitianMatrix::identity(3));
}

TEST_CASE("reflection of e2 is the exchange matrix") {
  const ReflectionFactor f = reflection_mapping_e1_to(UnitVector::normalized({0.0, 1.0}));
  REQUIRE(f.kind() == ReflectionFactor::Kind::Householder);
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(f.c()[0] - h) < 1e-15);
  CHECK(std::abs(f.c()[1] + h) < 1e-15);
  CHECK(diff_norm(f.realize(), exchange_matrix(2)) < 1e-15);
}

TEST_CASE("reflection for a rotated real vector") {
  const double t = std::numbers::pi / 3.0;
  const UnitVector v = UnitVector::normalized({std::cos(t), std::sin(t)});
  const DenseMatrix b = reflection_mapping_e1_to(v).realize().dense();
  CHECK(std::abs(b(0, 0) - v[0]) < 1e-12);
  CHECK(std::abs(b(1, 0) - v[1]) < 1e-12);
  CHECK(diff_norm(mat_mul(b, b), DenseMatrix::identity(2)) < 1e-12);
}

TEST_CASE("reflection rejects a complex first component") {
  try {
    reflection_mapping_e1_to(UnitVector::normalized({Complex(0.6, 0.8), 0.0}));
    FAIL("expected FirstComponentNotReal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FirstComponentNotReal);
  }
}

TEST_CASE("reflection properties on random vectors") {
  Rng rng(17);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 24));
    const UnitVector v = random_unit_real_first(n, rng);
    const HermitianMatrix b = reflection_mapping_e1_to(v).realize();
    CHECK(max_asymmetry(b.dense()) == 0.0);
    CHECK(diff_norm(mat_mul(b.dense(), b.dense()), DenseMatrix::identity(n)) <= 1e-11 * static_cast<double>(n));
    double col = 0.0;
    for (std::size_t i = 0; i < n; ++i) col += std::norm(b(i, 0) - v[i]);
    CHECK(std::sqrt(col) <= 1e-11);
  }
}

TEST_CASE("near-e1 vectors fall back to the identity") {
  const UnitVector v = UnitVector::normalized({1.0, 1e-10});
  CHECK(reflection_mapping_e1_to(v).kind() == ReflectionFactor::Kind::Identity);
  const UnitVector w = UnitVector::normalized({1.0, 1e-6});
  CHECK(reflection_mapping_e1_to(w).kind() == ReflectionFactor::Kind::Householder);
}

TEST_CASE("conjugate equals the explicit product") {
  Rng rng(4);
  for (std::size_t n : {2, 3, 7, 12}) {
    const UnitVector c = random_unit_real_first(n, rng);
    const ReflectionFactor f = ReflectionFactor::householder(c);
    const HermitianMatrix m = gen_hermitian(GenericSpectrum{}, n, rng);
    const DenseMatrix b = f.realize().dense();
    const DenseMatrix explicit_product = mat_mul(mat_mul(b, m.dense()), b);
    CHECK(diff_norm(f.conjugate(m).dense(), explicit_product) <= 1e-13 * (1.0 + frobenius_norm(m)));
    CHECK(ReflectionFactor::identity(n).conjugate(m) == m);
  }
}

TEST_CASE("deflate") {
  SUBCASE("top eigenvector already e1") {
    const Deflation d = deflate(diag({5.0, 2.0, 1.0}));
    CHECK(d.factor.kind() == ReflectionFactor::Kind::Identity);
    CHECK(d.lambda == 5.0);
    CHECK(d.rest == diag({2.0, 1.0}));
  }
  SUBCASE("exchange matrix") {
    const Deflation d = deflate(exchange_matrix(2));
    CHECK(d.lambda == doctest::Approx(1.0).epsilon(1e-15));
    REQUIRE(d.factor.kind() == ReflectionFactor::Kind::Householder);
    const DenseMatrix b = d.factor.realize().dense();
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(b(0, 0) - h) < 1e-15);
    CHECK(std::abs(b(1, 0) - h) < 1e-15);
    CHECK(std::abs(d.rest(0, 0) + 1.0) < 1e-15);
  }
  SUBCASE("construct then deflate") {
    Rng rng(12);
    for (int rep = 0; rep < 10; ++rep) {
      const HermitianMatrix a = conjugate_by(random_unitary(2, rng), {4.0, 1.0});
      const Deflation d = deflate(a);
      CHECK(std::abs(d.lambda - 4.0) <= 1e-10);
      CHECK(std::abs(d.rest(0, 0) - 1.0) <= 1e-10);
    }
  }
  CHECK_THROWS_AS(deflate(diag({1.0})), Error);
}

TEST_CASE("decompose") {
  SUBCASE("identity") {
    const ReflectionDecomposition dec = decompose(HermitianMatrix::identity(3));
    CHECK(dec.diag == std::vector<double>{1.0, 1.0, 1.0});
    REQUIRE(dec.factors.size() == 2);
    for (const auto& f : dec.factors) CHECK(f.kind() == ReflectionFactor::Kind::Identity);
  }
  SUBCASE("diag(1, 2) needs one exchange") {
    const ReflectionDecomposition dec = decompose(diag({1.0, 2.0}));
    CHECK(dec.diag == std::vector<double>{2.0, 1.0});
    REQUIRE(dec.factors.size() == 1);
    CHECK(diff_norm(dec.factors[0].realize(), exchange_matrix(2)) < 1e-15);
    CHECK(diff_norm(reconstruct(dec), diag({1.0, 2.0})) < 1e-15);
  }
  SUBCASE("1x1") {
    const ReflectionDecomposition dec = decompose(diag({-3.0}));
    CHECK(dec.factors.empty());
    CHECK(dec.diag == std::vector<double>{-3.0});
  }
}

TEST_CASE("reconstruct") {
  SUBCASE("identity factors give the diagonal") {
    ReflectionDecomposition dec;
    dec.n = 3;
    dec.factors = {ReflectionFactor::identity(3), ReflectionFactor::identity(2)};
    dec.diag = {4.0, -1.0, 0.5};
    CHECK(reconstruct(dec) == diag({4.0, -1.0, 0.5}));
  }
  SUBCASE("single exchange factor") {
    ReflectionDecomposition dec;
    dec.n = 2;
    dec.factors = {reflection_mapping_e1_to(UnitVector::normalized({0.0, 1.0}))};
    dec.diag = {2.0, 1.0};
    CHECK(reconstruct(dec) == diag({1.0, 2.0}));
  }
}

TEST_CASE("round trip on random matrices") {
  for (std::size_t n : {2, 3, 8, 16}) {
    for (std::size_t trial = 0; trial < 25; ++trial) {
      const HermitianMatrix a = gen_hermitian(SampleConfig{77, 25, n, GenericSpectrum{}}, trial);
      const ReflectionDecomposition dec = decompose(a);
      CHECK(diff_norm(reconstruct(dec), a) <= 1e-9 * (1.0 + frobenius_norm(a)));
      const std::vector<double> w = eigenvalues(a);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(dec.diag[i] - w[i]) <= 1e-8);
    }
  }
}

TEST_CASE("round trip with repeated and zero eigenvalues") {
  Rng rng(31);
  for (const std::vector<double>& d : {std::vector<double>{2.0, 2.0, 2.0, -1.0}, std::vector<double>{0.0, 0.0, 1.0, 0.0},
                                       std::vector<double>{-3.0, -3.0, 5.0, 5.0, 0.0}}) {
    const HermitianMatrix a = conjugate_by(random_unitary(d.size(), rng), d);
    CHECK(diff_norm(reconstruct(decompose(a)), a) <= 1e-9 * (1.0 + frobenius_norm(a)));
  }
}
