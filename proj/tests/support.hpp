#pragma once

#include "mukailat/intmatrix.hpp"
#include "oracles.hpp"

namespace test_support {

inline oracle::Mat to_mat(const mukailat::IntMatrix& m) {
  oracle::Mat out(m.rows(), oracle::Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline mukailat::IntMatrix from_mat(const oracle::Mat& m, std::size_t cols = 0) {
  std::vector<mukailat::Vector> rows(m.begin(), m.end());
  return mukailat::IntMatrix::from_rows(rows, cols);
}

}  // namespace test_support
