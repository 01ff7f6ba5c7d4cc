#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jtp/homs.hpp"
#include "jtp/random.hpp"
#include "jtp/verify.hpp"
#include "support.hpp"

using namespace jtp;
using jtp::test::diff_norm;

namespace {

std::vector<HomSample> sample(const MatrixHom& h, std::initializer_list<double> lambdas) {
  std::vector<HomSample> out;
  for (double l : lambdas) out.push_back({l, matrix_hom_eval(h, l)});
  return out;
}

double rel_error(const MatrixHom& got, const MatrixHom& want, Complex lambda) {
  const HermitianMatrix w = matrix_hom_eval(want, lambda);
  return diff_norm(matrix_hom_eval(got, lambda), w) / (1.0 + frobenius_norm(w));
}

std::vector<double> sorted_exponents(const MatrixHom& h) {
  std::vector<double> p;
  for (const auto& c : h.chars()) p.push_back(c.variant() == RealCharacter::Variant::SignedPower ? c.p() : 0.0);
  std::sort(p.begin(), p.end());
  return p;
}

ErrorKind recover_error(Domain d, const std::vector<HomSample>& s) {
  try {
    recover_structure(d, s);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected jtp::Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("recovers diagonal power exponents") {
  const MatrixHom h(DenseMatrix::identity(2), {1, 1},
                    {RealCharacter::signed_power(1.0, 0, Domain::RPlus0),
                     RealCharacter::signed_power(2.0, 0, Domain::RPlus0)},
                    Domain::RPlus0);
  const MatrixHom r = recover_structure(Domain::RPlus0, sample(h, {1.0, 2.0, 3.0}));
  const auto p = sorted_exponents(r);
  CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(p[1] == doctest::Approx(2.0).epsilon(1e-9));
  for (double l : {0.5, 4.0, 7.5}) CHECK(rel_error(r, h, l) <= 1e-9);
}

TEST_CASE("constant hom recovers flat characters") {
  Rng rng(10);
  const MatrixHom h(random_unitary(3, rng), {1, -1, -1}, std::vector<RealCharacter>(3, RealCharacter::one(Domain::C)),
                    Domain::C);
  const MatrixHom r = recover_structure(Domain::C, sample(h, {0.0, 1.0, 2.0, 3.0}));
  for (const auto& c : r.chars()) {
    const double p = c.variant() == RealCharacter::Variant::SignedPower ? c.p() : 0.0;
    CHECK(std::abs(p) <= 1e-9);
  }
  CHECK(r.unit_signature() == h.unit_signature());
  CHECK(rel_error(r, h, Complex(-4.0, 1.0)) <= 1e-9);
}

TEST_CASE("domain R recovers sign characters") {
  Rng rng(44);
  const MatrixHom h(random_unitary(3, rng), {1, -1, 1},
                    {RealCharacter::signed_power(1.0, 1, Domain::R), RealCharacter::signed_power(2.0, 0, Domain::R),
                     RealCharacter::signed_power(-0.5, 1, Domain::R)},
                    Domain::R);
  const MatrixHom r = recover_structure(Domain::R, sample(h, {1.0, 2.0, 3.0, -2.0}));
  for (double l : {-3.5, -0.25, 0.75, 5.0}) CHECK(rel_error(r, h, l) <= 1e-6);
}

TEST_CASE("zero slots are recovered") {
  for (const auto& named : builtin_matrix_homs()) {
    CAPTURE(named.name);
    const MatrixHom& h = named.hom;
    std::vector<HomSample> s = named.hom.domain() == Domain::R ? sample(h, {1.0, 2.0, 3.0, -2.0})
                                                               : sample(h, {0.0, 1.0, 2.0, 3.0});
    const MatrixHom r = recover_structure(h.domain(), s);
    CHECK(r.unit_signature() == h.unit_signature());
    for (double l : {0.5, 1.5, 6.0}) CHECK(rel_error(r, h, l) <= 1e-6);
  }
}

TEST_CASE("mixed samples from two homs are rejected") {
  const double c = std::cos(std::numbers::pi / 4.0);
  const DenseMatrix rot(2, {c, -c, c, c});
  const auto chars = std::vector<RealCharacter>{RealCharacter::signed_power(1.0, 0, Domain::C),
                                                RealCharacter::signed_power(3.0, 0, Domain::C)};
  const MatrixHom h1(DenseMatrix::identity(2), {1, 1}, chars, Domain::C);
  const MatrixHom h2(rot, {1, 1}, chars, Domain::C);
  std::vector<HomSample> mixed = sample(h1, {1.0, 2.0});
  const auto more = sample(h2, {3.0});
  mixed.insert(mixed.end(), more.begin(), more.end());
  CHECK(recover_error(Domain::C, mixed) == ErrorKind::NotSimultaneouslyDiagonalizable);
}

TEST_CASE("recovery preconditions") {
  const MatrixHom h(DenseMatrix::identity(1), {1}, {RealCharacter::signed_power(1.0, 0, Domain::C)}, Domain::C);
  CHECK(recover_error(Domain::C, {}) == ErrorKind::InsufficientSamples);
  CHECK(recover_error(Domain::C, sample(h, {2.0, 3.0})) == ErrorKind::InsufficientSamples);
  CHECK(recover_error(Domain::C, sample(h, {1.0})) == ErrorKind::InsufficientSamples);

  const MatrixHom hr(DenseMatrix::identity(1), {1}, {RealCharacter::signed_power(1.0, 1, Domain::R)}, Domain::R);
  CHECK(recover_error(Domain::R, sample(hr, {1.0, 2.0})) == ErrorKind::InsufficientSamples);

  // lambda = 1 image that is not a tripotent
  std::vector<HomSample> bad{{1.0, jtp::test::diag({0.5})}, {2.0, jtp::test::diag({1.0})}, {3.0, jtp::test::diag({2.0})}};
  CHECK(recover_error(Domain::C, bad) == ErrorKind::NotTripotent);

  // a sample inconsistent with any character
  std::vector<HomSample> off = sample(h, {1.0, 2.0, 4.0});
  off[2].image = jtp::test::diag({5.0});
  CHECK(recover_error(Domain::C, off) == ErrorKind::InconsistentSamples);
}

TEST_CASE("random homs round trip") {
  Rng rng(2718);
  for (int rep = 0; rep < 10; ++rep) {
    const Domain domain = rep % 2 == 0 ? Domain::C : Domain::R;
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 5));
    const MatrixHom h = random_matrix_hom(domain, n, rng);
    const auto s = domain == Domain::R ? sample(h, {1.0, 2.0, 3.0, -2.0}) : sample(h, {1.0, 2.0, 3.0});
    const MatrixHom r = recover_structure(domain, s);
    for (double l : {0.3, 1.7, 4.0}) CHECK(rel_error(r, h, l) <= 1e-6);
    if (domain == Domain::R) CHECK(rel_error(r, h, -1.3) <= 1e-6);
  }
}
