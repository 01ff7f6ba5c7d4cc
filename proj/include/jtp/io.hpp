#pragma once

// JSON interchange:
//   matrix   {"n": N, "entries": [[re, im], ...]}            (row-major, N^2 pairs)
//   hom      {"kind": "scalar", "n", "psi": {"variant", "p": [re, im]}, "eta": [...]}
//            {"kind": "matrix", "n", "T": [[re, im], ...], "d": [...], "chars": [...], "domain"}
//   samples  {"domain": "R", "samples": [{"lambda": [re, im], "image": <matrix>}, ...]}
//   report   see report_to_json

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "jtp/core.hpp"
#include "jtp/homs.hpp"
#include "jtp/verify.hpp"

namespace jtp::io {

using json = nlohmann::json;

// Serializes with every floating point number printed to 17 significant digits.
std::string dump(const json& j);

json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);

json matrix_to_json(const DenseMatrix& m);
json matrix_to_json(const HermitianMatrix& m);
DenseMatrix dense_from_json(const json& j);
// Applies hermitize with cfg.herm_tol.
HermitianMatrix matrix_from_json(const json& j, const ToleranceConfig& cfg = {});

using Hom = std::variant<ScalarHom, MatrixHom>;
json hom_to_json(const ScalarHom& h);
json hom_to_json(const MatrixHom& h);
Hom hom_from_json(const json& j, const ToleranceConfig& cfg = {});

struct SampleSet {
  Domain domain = Domain::C;
  std::vector<HomSample> samples;
};
json samples_to_json(const SampleSet& s);
SampleSet samples_from_json(const json& j, const ToleranceConfig& cfg = {});

json report_to_json(const VerificationReport& r);

}  // namespace jtp::io
