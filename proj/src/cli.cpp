#include "jtp/cli.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "jtp/decomp.hpp"
#include "jtp/eigen.hpp"
#include "jtp/inertia.hpp"
#include "jtp/io.hpp"
#include "jtp/verify.hpp"

namespace jtp::cli {
namespace {

using io::json;

struct Options {
  std::string input;
  std::string hom;
  std::string samples;
  std::string output;
  std::string lambda;
  std::string kind;
  std::string candidate = "trace";
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::size_t n = 4;
  std::size_t trial = 0;
  std::optional<double> tol;
  std::optional<double> zero_tol;
  bool as_json = false;

  ToleranceConfig tolerances() const {
    ToleranceConfig cfg;
    if (tol) {
      cfg.herm_tol = *tol;
      cfg.resid_tol = *tol;
    }
    if (zero_tol) cfg.zero_tol = *zero_tol;
    cfg.validate();
    return cfg;
  }
};

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return fmt::format("{}", z.real());
  return fmt::format("{}{:+}i", z.real(), z.imag());
}

std::string format_inertia(const Inertia& in) { return fmt::format("({},{},{})", in.n_plus, in.n_minus, in.n_zero); }

json inertia_json(const Inertia& in) { return json::array({in.n_plus, in.n_minus, in.n_zero}); }

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw Error(ErrorKind::InvalidArgument, std::string(flag) + " is required");
}

HermitianMatrix load_matrix(const Options& o) {
  require(o.input, "--input");
  return io::matrix_from_json(io::read_json_file(o.input), o.tolerances());
}

io::Hom load_hom(const Options& o) {
  require(o.hom, "--hom");
  return io::hom_from_json(io::read_json_file(o.hom), o.tolerances());
}

Complex parse_lambda(const std::string& text) {
  require(text, "--lambda");
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    const double re = std::stod(text.substr(0, comma), &used);
    if (used != text.substr(0, comma).size()) throw std::invalid_argument("trailing");
    double im = 0.0;
    if (comma != std::string::npos) {
      const std::string rest = text.substr(comma + 1);
      im = std::stod(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("trailing");
    }
    return {re, im};
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "--lambda expects RE or RE,IM, got '" + text + "'");
  }
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const HermitianMatrix a = load_matrix(o);
  const ReflectionDecomposition dec = decompose(a, o.tolerances());
  if (o.as_json) {
    json factors = json::array();
    for (const auto& f : dec.factors) {
      if (f.kind() == ReflectionFactor::Kind::Identity) {
        factors.push_back(nullptr);
      } else {
        json c = json::array();
        for (const Complex& z : f.c().components()) c.push_back(io::complex_to_json(z));
        factors.push_back(std::move(c));
      }
    }
    out << io::dump(json{{"n", dec.n}, {"diag", dec.diag}, {"factors", std::move(factors)}}) << '\n';
    return kSuccess;
  }
  out << "diag:";
  for (double d : dec.diag) out << ' ' << fmt::format("{}", d);
  out << '\n';
  for (std::size_t k = 0; k < dec.factors.size(); ++k) {
    const auto& f = dec.factors[k];
    out << "factor " << k + 1 << ": ";
    if (f.kind() == ReflectionFactor::Kind::Identity) {
      out << "identity\n";
      continue;
    }
    out << "c =";
    for (const Complex& z : f.c().components()) out << ' ' << format_complex(z);
    out << '\n';
  }
  return kSuccess;
}

int cmd_inertia(const Options& o, std::ostream& out) {
  const HermitianMatrix a = load_matrix(o);
  const ToleranceConfig cfg = o.tolerances();
  const Inertia eig = inertia_eigen(a, cfg);
  const Inertia ldl = inertia_ldl(a, cfg);
  const bool agree = eig == ldl;
  if (o.as_json) {
    out << io::dump(json{{"eigen", inertia_json(eig)}, {"ldl", inertia_json(ldl)}, {"agree", agree}}) << '\n';
  } else {
    out << "eigen: " << format_inertia(eig) << " ldl: " << format_inertia(ldl) << " agree: " << (agree ? "true" : "false")
        << '\n';
  }
  return agree ? kSuccess : kVerificationFailed;
}

int cmd_det(const Options& o, std::ostream& out) {
  const double d = abs_det(load_matrix(o), o.tolerances());
  if (o.as_json) {
    out << io::dump(json{{"abs_det", d}}) << '\n';
  } else {
    out << fmt::format("{}", d) << '\n';
  }
  return kSuccess;
}

int cmd_eval_scalar(const Options& o, std::ostream& out) {
  const io::Hom hom = load_hom(o);
  const auto* h = std::get_if<ScalarHom>(&hom);
  if (h == nullptr) throw Error(ErrorKind::InvalidArgument, "--hom must describe a scalar hom");
  const Complex v = scalar_hom_eval(*h, load_matrix(o), o.tolerances());
  if (o.as_json) {
    out << io::dump(json{{"value", io::complex_to_json(v)}}) << '\n';
  } else {
    out << format_complex(v) << '\n';
  }
  return kSuccess;
}

int cmd_eval_matrix(const Options& o, std::ostream& out) {
  const io::Hom hom = load_hom(o);
  const auto* h = std::get_if<MatrixHom>(&hom);
  if (h == nullptr) throw Error(ErrorKind::InvalidArgument, "--hom must describe a matrix hom");
  const HermitianMatrix m = matrix_hom_eval(*h, parse_lambda(o.lambda));
  if (o.as_json) {
    out << io::dump(io::matrix_to_json(m)) << '\n';
    return kSuccess;
  }
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) out << (j ? " " : "") << format_complex(m(i, j));
    out << '\n';
  }
  return kSuccess;
}

int cmd_recover(const Options& o, std::ostream& out) {
  require(o.samples, "--samples");
  const ToleranceConfig cfg = o.tolerances();
  const io::SampleSet set = io::samples_from_json(io::read_json_file(o.samples), cfg);
  RecoverOptions ropts;
  ropts.seed = o.seed;
  out << io::dump(io::hom_to_json(recover_structure(set.domain, set.samples, cfg, ropts))) << '\n';
  return kSuccess;
}

int cmd_gen(const Options& o, std::ostream& out) {
  SampleConfig config;
  config.seed = o.seed;
  config.n = o.n;
  config.trials = 1;
  if (!o.kind.empty()) config.spectrum_kind = spectrum_kind_from_string(o.kind);
  const std::string text = io::dump(io::matrix_to_json(gen_hermitian(config, o.trial))) + "\n";
  if (o.output.empty()) {
    out << text;
  } else {
    io::write_text_file(o.output, text);
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------
// verify

struct Labeled {
  std::string hom;
  VerificationReport report;
};

ScalarMap falsify_candidate(const std::string& name, const ToleranceConfig& cfg) {
  if (name == "trace") return [](const HermitianMatrix& a) { return trace(a.dense()); };
  if (name == "det") return [](const HermitianMatrix& a) { return determinant(a.dense()); };
  if (name == "max-eigenvalue") {
    return [cfg](const HermitianMatrix& a) { return Complex(eigenvalues(a, cfg).front(), 0.0); };
  }
  throw Error(ErrorKind::InvalidArgument, "unknown candidate '" + name + "' (trace, det, max-eigenvalue)");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"jtp-scalar", "jtp-matrix",      "power-law", "similarity",
                                              "sylvester",  "rank-deficiency", "falsify",   "all"};
  return names;
}

std::vector<Labeled> run_suite(const std::string& suite, const Options& o) {
  const ToleranceConfig cfg = o.tolerances();
  SampleConfig config;
  config.seed = o.seed;
  config.trials = o.trials;
  config.n = o.n;
  if (!o.kind.empty()) {
    config.spectrum_kind = spectrum_kind_from_string(o.kind);
  } else if (suite == "power-law") {
    // A^8 of an ill-conditioned A loses more than the 1e-8 budget.
    config.spectrum_kind = IntegerSpectrum{};
  }
  config.validate();

  std::vector<NamedScalarHom> scalar_homs;
  std::vector<NamedMatrixHom> matrix_homs;
  if (!o.hom.empty()) {
    io::Hom h = load_hom(o);
    if (auto* s = std::get_if<ScalarHom>(&h)) {
      config.n = s->n();
      scalar_homs.push_back({o.hom, *s});
    } else {
      matrix_homs.push_back({o.hom, std::get<MatrixHom>(h)});
    }
  } else {
    scalar_homs = builtin_scalar_homs(config.n);
    matrix_homs = builtin_matrix_homs();
  }

  std::vector<Labeled> out;
  if (suite == "jtp-scalar") {
    for (const auto& h : scalar_homs) out.push_back({h.name, check_jtp_scalar(h.hom, config, cfg)});
  } else if (suite == "jtp-matrix") {
    for (const auto& h : matrix_homs) out.push_back({h.name, check_jtp_matrix(h.hom, config, cfg)});
  } else if (suite == "power-law") {
    for (const auto& h : scalar_homs) out.push_back({h.name, check_power_law(h.hom, config, cfg)});
    for (const auto& h : matrix_homs) out.push_back({h.name, check_power_law(h.hom, config, cfg)});
  } else if (suite == "similarity") {
    for (const auto& h : scalar_homs) out.push_back({h.name, check_similarity_invariance(h.hom, config, cfg)});
  } else if (suite == "sylvester") {
    out.push_back({"", check_sylvester(config, cfg)});
  } else if (suite == "rank-deficiency") {
    for (const auto& h : scalar_homs) {
      if (h.hom.psi().at_zero() != 0.0) continue;
      out.push_back({h.name, check_rank_deficiency(h.hom, config, cfg)});
    }
  } else if (suite == "falsify") {
    out.push_back({o.candidate, falsify(o.candidate, falsify_candidate(o.candidate, cfg), config, cfg)});
  } else if (suite == "all") {
    for (const char* name : {"jtp-scalar", "jtp-matrix", "power-law", "similarity", "sylvester", "rank-deficiency"}) {
      auto part = run_suite(name, o);
      out.insert(out.end(), part.begin(), part.end());
    }
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "suite '" + suite + "' does not apply to the given hom");
  return out;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const std::vector<Labeled> reports = run_suite(o.suite, o);
  bool passed = true;
  for (const auto& r : reports) passed = passed && r.report.passed();
  if (o.as_json) {
    json arr = json::array();
    for (const auto& r : reports) {
      json j = io::report_to_json(r.report);
      j["hom"] = r.hom;
      arr.push_back(std::move(j));
    }
    out << io::dump(json{{"passed", passed}, {"reports", std::move(arr)}}) << '\n';
  } else {
    for (const auto& r : reports) {
      const auto& rep = r.report;
      out << fmt::format("{:<18} {:<18} trials={} skipped={} failures={} max_residual={:.3e} tol={:.0e} {}\n",
                         rep.suite_name, r.hom.empty() ? "-" : r.hom, rep.trials_run, rep.skipped, rep.failures.size(),
                         rep.max_residual, rep.tolerance, rep.passed() ? "PASS" : "FAIL");
      if (!rep.failures.empty()) {
        const Failure& f = rep.failures.front();
        out << fmt::format("  first failure: trial {} ({}), residual {:.3e}\n", f.trial, f.description, f.residual);
      }
    }
  }
  return passed ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jordan triple product homomorphisms on Hermitian matrices", "jtpctl"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "Hermitization and residual tolerance");
    sub->add_option("--zero-tol", o.zero_tol, "Relative eigenvalue-zero threshold");
    sub->add_flag("--json", o.as_json, "Machine-readable output");
  };
  auto add_input = [&](CLI::App* sub) { sub->add_option("--input", o.input, "Matrix JSON file")->required(); };

  auto* decompose_cmd = app.add_subcommand("decompose", "Reflection decomposition A = B1..Bn-1 D Bn-1..B1");
  add_input(decompose_cmd);
  add_common(decompose_cmd);

  auto* inertia_cmd = app.add_subcommand("inertia", "Inertia by eigenvalues and by LDL*");
  add_input(inertia_cmd);
  add_common(inertia_cmd);

  auto* det_cmd = app.add_subcommand("det", "|det A|");
  add_input(det_cmd);
  add_common(det_cmd);

  auto* eval_scalar_cmd = app.add_subcommand("eval-scalar-hom", "Evaluate a scalar hom file at a matrix");
  eval_scalar_cmd->add_option("--hom", o.hom, "Hom JSON file")->required();
  add_input(eval_scalar_cmd);
  add_common(eval_scalar_cmd);

  auto* eval_matrix_cmd = app.add_subcommand("eval-matrix-hom", "Evaluate a matrix hom file at a scalar");
  eval_matrix_cmd->add_option("--hom", o.hom, "Hom JSON file")->required();
  eval_matrix_cmd->add_option("--lambda", o.lambda, "Scalar as RE or RE,IM")->required();
  add_common(eval_matrix_cmd);

  auto* recover_cmd = app.add_subcommand("recover", "Recover a matrix hom from samples");
  recover_cmd->add_option("--samples", o.samples, "Samples JSON file")->required();
  recover_cmd->add_option("--seed", o.seed, "Seed for the joint-diagonalization weights");
  add_common(recover_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
  verify_cmd->add_option("suite", o.suite, "Suite name")->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--hom", o.hom, "Hom JSON file (default: built-in battery)");
  verify_cmd->add_option("--seed", o.seed, "Seed");
  verify_cmd->add_option("--trials", o.trials, "Random trials per suite")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--n", o.n, "Matrix size")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--kind", o.kind, "Spectrum kind: generic, integer, planted:P,M,Z, rank:R");
  verify_cmd->add_option("--candidate", o.candidate, "Map for the falsify suite: trace, det, max-eigenvalue");
  add_common(verify_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "Write a generated Hermitian matrix");
  gen_cmd->add_option("--n", o.n, "Matrix size")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", o.seed, "Seed");
  gen_cmd->add_option("--trial", o.trial, "Trial index within the seed's stream");
  gen_cmd->add_option("--kind", o.kind, "Spectrum kind: generic, integer, planted:P,M,Z, rank:R");
  gen_cmd->add_option("--output", o.output, "Output path (default: stdout)");
  add_common(gen_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (decompose_cmd->parsed()) return cmd_decompose(o, out);
    if (inertia_cmd->parsed()) return cmd_inertia(o, out);
    if (det_cmd->parsed()) return cmd_det(o, out);
    if (eval_scalar_cmd->parsed()) return cmd_eval_scalar(o, out);
    if (eval_matrix_cmd->parsed()) return cmd_eval_matrix(o, out);
    if (recover_cmd->parsed()) return cmd_recover(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (gen_cmd->parsed()) return cmd_gen(o, out);
  } catch (const Error& e) {
    err << "jtpctl: " << e.what() << '\n';
    return is_numerical(e.kind()) ? kNumericalFailure : kInputError;
  } catch (const std::exception& e) {
    err << "jtpctl: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kInputError;
}

}  // namespace jtp::cli
