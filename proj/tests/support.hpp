#pragma once

#include <string>

#include "jtp/core.hpp"
#include "jtp/io.hpp"

namespace jtp::test {

inline std::string data_path(const std::string& name) { return std::string(JTP_TEST_DATA) + "/" + name; }

inline HermitianMatrix diag(std::initializer_list<double> d) {
  const std::vector<double> v(d);
  return HermitianMatrix::diagonal(v);
}

inline HermitianMatrix herm(std::size_t n, std::vector<Complex> entries) {
  return hermitize(DenseMatrix(n, std::move(entries)));
}

inline double diff_norm(const DenseMatrix& a, const DenseMatrix& b) { return frobenius_norm(matrix_sub(a, b)); }
inline double diff_norm(const HermitianMatrix& a, const HermitianMatrix& b) { return diff_norm(a.dense(), b.dense()); }

}  // namespace jtp::test
