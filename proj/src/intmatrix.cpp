#include "mukailat/intmatrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace mukailat {

namespace {

using Rows = std::vector<Vector>;

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

void subtract_multiple(Vector& target, const Vector& source, const Integer& q) {
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= q * source[j];
}

// Echelon form on the leading `pivot_cols` columns, using unimodular row
// operations applied to the full row width. Returns the pivot columns; rows
// past the last pivot row are zero on the leading columns.
std::vector<std::size_t> echelonize(Rows& rows, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows.size(); ++c) {
    bool found = false;
    while (true) {
      std::size_t best = kNone;
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        if (best == kNone || cmpabs(rows[i][c], rows[best][c]) < 0) best = i;
      }
      if (best == kNone) break;
      found = true;
      std::swap(rows[r], rows[best]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        subtract_multiple(rows[i], rows[r], floor_div(rows[i][c], rows[r][c]));
        if (sgn(rows[i][c]) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!found) continue;
    if (sgn(rows[r][c]) < 0) {
      for (auto& x : rows[r]) x = -x;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void reduce_above_pivots(Rows& rows, const std::vector<std::size_t>& pivots) {
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const std::size_t c = pivots[r];
    for (std::size_t i = 0; i < r; ++i) {
      subtract_multiple(rows[i], rows[r], floor_div(rows[i][c], rows[r][c]));
    }
  }
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), rows.empty() ? cols : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + i * m.cols_);
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

Vector IntMatrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return {r.begin(), r.end()};
}

std::vector<Vector> IntMatrix::to_rows() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix: shape mismatch in product");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += aik * b(k, j);
    }
  }
  return p;
}

IntMatrix operator*(const Integer& t, const IntMatrix& m) {
  IntMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= t;
  }
  return out;
}

Integer det(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Rows a = m.to_rows();
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t swap_with = kNone;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (sgn(a[i][k]) != 0) {
          swap_with = i;
          break;
        }
      }
      if (swap_with == kNone) return 0;
      std::swap(a[k], a[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<Integer> snf(const IntMatrix& m) {
  Rows a = m.to_rows();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t n = std::min(rows, cols);

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (auto& r : a) std::swap(r[x], r[y]);
  };

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      std::size_t bi = kNone;
      std::size_t bj = kNone;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (sgn(a[i][j]) == 0) continue;
          if (bi == kNone || cmpabs(a[i][j], a[bi][bj]) < 0) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == kNone) break;
      std::swap(a[t], a[bi]);
      swap_cols(t, bj);

      bool residue = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        subtract_multiple(a[i], a[t], floor_div(a[i][t], a[t][t]));
        if (sgn(a[i][t]) != 0) residue = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        const Integer q = floor_div(a[t][j], a[t][t]);
        for (std::size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (sgn(a[t][j]) != 0) residue = true;
      }
      if (residue) continue;

      // Pivot isolated; enforce that it divides the rest of the block.
      std::size_t offender = kNone;
      for (std::size_t i = t + 1; i < rows && offender == kNone; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            offender = i;
            break;
          }
        }
      }
      if (offender == kNone) break;
      for (std::size_t j = 0; j < cols; ++j) a[t][j] += a[offender][j];
    }
  }

  std::vector<Integer> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = abs(a[i][i]);
  return diag;
}

IntMatrix hnf(const IntMatrix& m) {
  Rows a = m.to_rows();
  const auto pivots = echelonize(a, m.cols());
  reduce_above_pivots(a, pivots);
  a.resize(pivots.size());
  return IntMatrix::from_rows(a, m.cols());
}

std::size_t rank(const IntMatrix& m) {
  Rows a = m.to_rows();
  return echelonize(a, m.cols()).size();
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  const std::size_t r = m.rows();
  // Row j is [column j of m | e_j]; unimodular row operations keep the right
  // block a basis transform, so rows whose left block vanishes span the kernel.
  Rows aug(n, Vector(r + n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < r; ++i) aug[j][i] = m(i, j);
    aug[j][r + j] = 1;
  }
  const auto pivots = echelonize(aug, r);
  Rows kernel;
  for (std::size_t j = pivots.size(); j < n; ++j) {
    kernel.emplace_back(aug[j].begin() + static_cast<std::ptrdiff_t>(r), aug[j].end());
  }
  return hnf(IntMatrix::from_rows(kernel, n));
}

IntMatrix stack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0) {
    throw std::invalid_argument("stack: column counts differ");
  }
  auto rows = a.to_rows();
  auto more = b.to_rows();
  rows.insert(rows.end(), more.begin(), more.end());
  return IntMatrix::from_rows(rows, std::max(a.cols(), b.cols()));
}

}  // namespace mukailat
