#include <doctest.h>

#include "jtp/io.hpp"
#include "jtp/random.hpp"
#include "support.hpp"

using namespace jtp;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected jtp::Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("matrices round trip bit-exactly") {
  const HermitianMatrix a = gen_hermitian(SampleConfig{8, 1, 5, GenericSpectrum{}});
  const io::json j = io::json::parse(io::dump(io::matrix_to_json(a)));
  CHECK(io::matrix_from_json(j) == a);
}

TEST_CASE("matrix parsing") {
  const io::json real_entries = io::json::parse(R"({"n": 2, "entries": [1, 0, 0, 2]})");
  CHECK(io::matrix_from_json(real_entries) == jtp::test::diag({1.0, 2.0}));
  CHECK(kind_of([] { io::matrix_from_json(io::json::parse(R"({"n": 2, "entries": [1, 0, 0]})")); }) ==
        ErrorKind::Parse);
  CHECK(kind_of([] { io::matrix_from_json(io::json::parse(R"({"entries": []})")); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::matrix_from_json(io::json::parse(R"({"n": 0, "entries": []})")); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::matrix_from_json(io::json::parse(R"({"n": 1, "entries": [[1, 2, 3]]})")); }) ==
        ErrorKind::Parse);
  CHECK(kind_of([] { io::matrix_from_json(io::json::parse(R"({"n": 2, "entries": [0, 1, 0, 0]})")); }) ==
        ErrorKind::AsymmetryTooLarge);
  CHECK(kind_of([] { io::read_json_file("/nonexistent/matrix.json"); }) == ErrorKind::Parse);
}

TEST_CASE("homs round trip") {
  for (const auto& h : builtin_scalar_homs(3)) {
    const io::Hom back = io::hom_from_json(io::json::parse(io::dump(io::hom_to_json(h.hom))));
    const auto& s = std::get<ScalarHom>(back);
    CHECK(s.n() == 3);
    CHECK(s.eta().signs() == h.hom.eta().signs());
    CHECK(s.psi().variant() == h.hom.psi().variant());
    CHECK(s.psi().exponent() == h.hom.psi().exponent());
  }
  for (const auto& h : builtin_matrix_homs()) {
    const io::Hom back = io::hom_from_json(io::json::parse(io::dump(io::hom_to_json(h.hom))));
    const auto& m = std::get<MatrixHom>(back);
    CHECK(m.t() == h.hom.t());
    CHECK(m.d() == h.hom.d());
    CHECK(m.domain() == h.hom.domain());
    CHECK(matrix_hom_eval(m, 2.0) == matrix_hom_eval(h.hom, 2.0));
  }
}

TEST_CASE("hom parsing errors") {
  CHECK(kind_of([] { io::hom_from_json(io::json::parse(R"({"kind": "vector", "n": 1})")); }) == ErrorKind::Parse);
  CHECK(kind_of([] {
          io::hom_from_json(io::json::parse(R"({"kind": "scalar", "n": 2, "psi": {"variant": "cube"}, "eta": [1,1,1]})"));
        }) == ErrorKind::Parse);
  CHECK(kind_of([] {
          io::hom_from_json(io::json::parse(R"({"kind": "scalar", "n": 2, "psi": {"variant": "one"}, "eta": [1,-1,1]})"));
        }) == ErrorKind::InvalidHom);
  const io::Hom h = io::hom_from_json(io::read_json_file(jtp::test::data_path("psi_pow1_eta_all_plus.json")));
  CHECK(std::holds_alternative<ScalarHom>(h));
}

TEST_CASE("samples round trip") {
  const MatrixHom h = builtin_matrix_homs()[1].hom;
  io::SampleSet s{h.domain(), {}};
  for (double l : {1.0, 2.0, -2.0}) s.samples.push_back({l, matrix_hom_eval(h, l)});
  const io::SampleSet back = io::samples_from_json(io::json::parse(io::dump(io::samples_to_json(s))));
  CHECK(back.domain == Domain::R);
  REQUIRE(back.samples.size() == 3);
  CHECK(back.samples[2].lambda == -2.0);
  CHECK(back.samples[2].image == s.samples[2].image);
}

TEST_CASE("reports serialize every field") {
  const VerificationReport r =
      falsify("trace", [](const HermitianMatrix& a) { return trace(a.dense()); }, SampleConfig{1, 3, 2, GenericSpectrum{}});
  const io::json j = io::json::parse(io::dump(io::report_to_json(r)));
  CHECK(j["suite"] == "falsify:trace");
  CHECK(j["config"]["seed"] == 1);
  CHECK(j["config"]["spectrum_kind"] == "generic");
  CHECK(j["passed"] == false);
  CHECK(j["failure_count"] == r.failures.size());
  CHECK(j["failures"][0]["matrices"].size() == 2);
}

TEST_CASE("dump prints round-trippable doubles") {
  CHECK(io::dump(io::json{{"x", 0.1}}) == R"({"x":0.10000000000000001})");
  CHECK(io::dump(io::json::array({1, 2.5, "s", nullptr, true})) == R"([1,2.5,"s",null,true])");
  CHECK(io::dump(io::json(std::numeric_limits<double>::infinity())) == "null");
}
