#include "jtp/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace jtp::io {
namespace {

void dump_into(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        dump_into(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ',';
        dump_into(j[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
      } else {
        out += fmt::format("{:.17g}", v);
      }
      break;
    }
    default:
      out += j.dump();
  }
}

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) parse_error(std::string(what) + " must be a number");
  return j.get<double>();
}

std::size_t dimension(const json& j) {
  if (!j.is_number_integer() || j.get<std::int64_t>() <= 0) parse_error("'n' must be a positive integer");
  return j.get<std::size_t>();
}

std::vector<int> sign_list(const json& j, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) parse_error(std::string(what) + " entries must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<Complex> entry_list(const json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n * n) {
    parse_error(std::string(what) + " must hold " + std::to_string(n * n) + " [re, im] pairs");
  }
  std::vector<Complex> out;
  out.reserve(n * n);
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

}  // namespace

std::string dump(const json& j) {
  std::string out;
  dump_into(j, out);
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << text;
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    parse_error("complex values are [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const DenseMatrix& m) {
  json entries = json::array();
  for (const Complex& z : m.entries()) entries.push_back(complex_to_json(z));
  return json{{"n", m.n()}, {"entries", std::move(entries)}};
}

json matrix_to_json(const HermitianMatrix& m) { return matrix_to_json(m.dense()); }

DenseMatrix dense_from_json(const json& j) {
  const std::size_t n = dimension(field(j, "n"));
  return DenseMatrix(n, entry_list(field(j, "entries"), n, "'entries'"));
}

HermitianMatrix matrix_from_json(const json& j, const ToleranceConfig& cfg) { return hermitize(dense_from_json(j), cfg); }

json hom_to_json(const ScalarHom& h) {
  json psi;
  switch (h.psi().variant()) {
    case MultiplicativeMap::Variant::Zero:
      psi = json{{"variant", "zero"}};
      break;
    case MultiplicativeMap::Variant::One:
      psi = json{{"variant", "one"}};
      break;
    case MultiplicativeMap::Variant::Power:
      psi = json{{"variant", "power"}, {"p", complex_to_json(h.psi().exponent())}};
      break;
  }
  return json{{"kind", "scalar"}, {"n", h.n()}, {"psi", psi}, {"eta", h.eta().signs()}};
}

json hom_to_json(const MatrixHom& h) {
  json chars = json::array();
  for (const auto& c : h.chars()) {
    switch (c.variant()) {
      case RealCharacter::Variant::Zero:
        chars.push_back(json{{"variant", "zero"}});
        break;
      case RealCharacter::Variant::One:
        chars.push_back(json{{"variant", "one"}});
        break;
      case RealCharacter::Variant::SignedPower:
        chars.push_back(json{{"variant", "signed_power"}, {"p", c.p()}, {"s", c.s()}});
        break;
    }
  }
  return json{{"kind", "matrix"}, {"n", h.n()},         {"T", matrix_to_json(h.t())["entries"]},
              {"d", h.d()},       {"chars", chars},     {"domain", to_string(h.domain())}};
}

Hom hom_from_json(const json& j, const ToleranceConfig& cfg) {
  const json& kind = field(j, "kind");
  if (!kind.is_string()) parse_error("'kind' must be a string");
  const std::size_t n = dimension(field(j, "n"));
  if (kind == "scalar") {
    const json& psi = field(j, "psi");
    const json& variant = field(psi, "variant");
    MultiplicativeMap map = MultiplicativeMap::zero();
    if (variant == "zero") {
      map = MultiplicativeMap::zero();
    } else if (variant == "one") {
      map = MultiplicativeMap::one();
    } else if (variant == "power") {
      map = MultiplicativeMap::power(complex_from_json(field(psi, "p")));
    } else {
      parse_error("unknown psi variant " + variant.dump());
    }
    return ScalarHom(n, map, EtaPattern(sign_list(field(j, "eta"), "'eta'")));
  }
  if (kind == "matrix") {
    const json& dom = field(j, "domain");
    if (!dom.is_string()) parse_error("'domain' must be a string");
    const Domain domain = domain_from_string(dom.get<std::string>());
    DenseMatrix t(n, entry_list(field(j, "T"), n, "'T'"));
    std::vector<RealCharacter> chars;
    const json& cj = field(j, "chars");
    if (!cj.is_array()) parse_error("'chars' must be an array");
    for (const auto& c : cj) {
      const json& variant = field(c, "variant");
      if (variant == "zero") {
        chars.push_back(RealCharacter::zero(domain));
      } else if (variant == "one") {
        chars.push_back(RealCharacter::one(domain));
      } else if (variant == "signed_power") {
        const json& s = field(c, "s");
        if (!s.is_number_integer()) parse_error("'s' must be 0 or 1");
        chars.push_back(RealCharacter::signed_power(number(field(c, "p"), "'p'"), s.get<int>(), domain));
      } else {
        parse_error("unknown character variant " + variant.dump());
      }
    }
    return MatrixHom(std::move(t), sign_list(field(j, "d"), "'d'"), std::move(chars), domain, cfg);
  }
  parse_error("unknown hom kind " + kind.dump());
}

json samples_to_json(const SampleSet& s) {
  json arr = json::array();
  for (const auto& sample : s.samples) {
    arr.push_back(json{{"lambda", complex_to_json(sample.lambda)}, {"image", matrix_to_json(sample.image)}});
  }
  return json{{"domain", to_string(s.domain)}, {"samples", std::move(arr)}};
}

SampleSet samples_from_json(const json& j, const ToleranceConfig& cfg) {
  SampleSet out;
  const json& dom = field(j, "domain");
  if (!dom.is_string()) parse_error("'domain' must be a string");
  out.domain = domain_from_string(dom.get<std::string>());
  const json& arr = field(j, "samples");
  if (!arr.is_array()) parse_error("'samples' must be an array");
  for (const auto& s : arr) {
    out.samples.push_back(HomSample{complex_from_json(field(s, "lambda")), matrix_from_json(field(s, "image"), cfg)});
  }
  return out;
}

json report_to_json(const VerificationReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    json mats = json::array();
    for (const auto& m : f.matrices) mats.push_back(matrix_to_json(m));
    json scalars = json::array();
    for (const auto& z : f.scalars) scalars.push_back(complex_to_json(z));
    failures.push_back(json{{"trial", f.trial},
                            {"residual", f.residual},
                            {"description", f.description},
                            {"matrices", std::move(mats)},
                            {"scalars", std::move(scalars)}});
  }
  return json{{"suite", r.suite_name},
              {"config",
               {{"seed", r.config.seed},
                {"trials", r.config.trials},
                {"n", r.config.n},
                {"spectrum_kind", to_string(r.config.spectrum_kind)}}},
              {"tolerance", r.tolerance},
              {"trials_run", r.trials_run},
              {"skipped", r.skipped},
              {"failure_count", r.failures.size()},
              {"max_residual", r.max_residual},
              {"passed", r.passed()},
              {"failures", std::move(failures)}};
}

}  // namespace jtp::io
