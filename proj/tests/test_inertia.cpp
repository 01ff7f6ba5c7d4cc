#include <doctest.h>

#include "jtp/inertia.hpp"
#include "jtp/io.hpp"
#include "jtp/verify.hpp"
#include "support.hpp"

using namespace jtp;
using jtp::test::diag;

namespace {

Inertia inertia(std::size_t p, std::size_t m, std::size_t z) { return Inertia{p, m, z}; }

}  // namespace

TEST_CASE("inertia of small fixed matrices") {
  const HermitianMatrix d = diag({3.0, -2.0, 0.0});
  CHECK(inertia_eigen(d) == inertia(1, 1, 1));
  CHECK(inertia_ldl(d) == inertia(1, 1, 1));
  CHECK(syl(d) == 1);

  const HermitianMatrix e = exchange_matrix(2);
  CHECK(inertia_eigen(e) == inertia(1, 1, 0));
  CHECK(inertia_ldl(e) == inertia(1, 1, 0));

  CHECK(inertia_ldl(HermitianMatrix::zero(4)) == inertia(0, 0, 4));
  CHECK(inertia_eigen(HermitianMatrix::zero(4)) == inertia(0, 0, 4));
}

TEST_CASE("syl counts leading ones") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(syl(HermitianMatrix::identity(n)) == n);
    std::vector<double> neg(n, -1.0);
    CHECK(syl(HermitianMatrix::diagonal(neg)) == 0);
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<double> d(n, -1.0);
      for (std::size_t i = 0; i < k; ++i) d[i] = 1.0;
      CHECK(syl(HermitianMatrix::diagonal(d)) == k);
      CHECK(inertia_ldl(HermitianMatrix::diagonal(d)) == inertia(k, n - k, 0));
    }
  }
  CHECK(syl(diag({1.0, -1.0})) == 1);
}

TEST_CASE("ldl needs 2x2 pivots on zero-diagonal blocks") {
  const Complex i{0.0, 1.0};
  const HermitianMatrix a = jtp::test::herm(3, {0.0, i, 0.0, -i, 0.0, 1.0, 0.0, 1.0, 0.0});
  // eigenvalues 0, +-sqrt(2)
  CHECK(inertia_eigen(a) == inertia(1, 1, 1));
  CHECK(inertia_ldl(a) == inertia(1, 1, 1));
}

TEST_CASE("abs_det") {
  CHECK(abs_det(diag({2.0, 3.0})) == 6.0);
  CHECK(abs_det(diag({2.0, -3.0})) == 6.0);
  CHECK(abs_det(diag({1.0, 0.0})) == 0.0);
  CHECK(abs_det(exchange_matrix(3)) == doctest::Approx(1.0));
}

TEST_CASE("abs_det is multiplicative under the triple product") {
  for (std::size_t trial = 0; trial < 50; ++trial) {
    const SampleConfig cfg{5, 50, 5, IntegerSpectrum{}};
    const HermitianMatrix a = gen_hermitian(cfg, trial);
    const HermitianMatrix b = gen_hermitian(cfg, trial + 1000);
    const double lhs = abs_det(jtp::jtp(a, b));
    const double rhs = abs_det(a) * abs_det(a) * abs_det(b);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * rhs);
  }
}

TEST_CASE("planted generators give the planted inertia") {
  const SampleConfig planted{1, 1, 3, PlantedInertia{2, 1, 0}};
  CHECK(inertia_eigen(gen_hermitian(planted)) == inertia(2, 1, 0));

  const SampleConfig rank{1, 1, 3, RankDeficient{1}};
  const HermitianMatrix r = gen_hermitian(rank);
  CHECK(inertia_eigen(r).n_zero == 2);
  CHECK(abs_det(r) <= zero_threshold(r, ToleranceConfig{}));
}

TEST_CASE("cross-validation against eigenvalues on 200 seeded matrices") {
  Rng rng(2024);
  for (std::size_t trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 12));
    SpectrumKind kind = GenericSpectrum{};
    switch (trial % 4) {
      case 1: {
        const auto zero = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n)));
        const auto plus = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n - zero)));
        kind = PlantedInertia{plus, n - zero - plus, zero};
        break;
      }
      case 2:
        kind = RankDeficient{static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n)))};
        break;
      case 3:
        kind = IntegerSpectrum{};
        break;
      default:
        break;
    }
    const HermitianMatrix a = gen_hermitian(kind, n, rng);
    CAPTURE(trial);
    const Inertia e = inertia_eigen(a);
    CHECK(e == inertia_ldl(a));
    if (const auto* p = std::get_if<PlantedInertia>(&kind)) CHECK(e == inertia(p->plus, p->minus, p->zero));
    if (const auto* r = std::get_if<RankDeficient>(&kind)) CHECK(e.n_zero == n - r->rank);
  }
}

TEST_CASE("inertia matches the numpy oracle") {
  const io::json oracles = io::read_json_file(jtp::test::data_path("oracles.json"));
  for (const auto& c : oracles["cases"]) {
    const HermitianMatrix a = io::matrix_from_json(c["a"]);
    const auto expected = c["inertia"].get<std::vector<std::size_t>>();
    const Inertia want = inertia(expected[0], expected[1], expected[2]);
    CHECK(inertia_eigen(a) == want);
    CHECK(inertia_ldl(a) == want);
  }
}
