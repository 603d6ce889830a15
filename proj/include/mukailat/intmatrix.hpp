#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "mukailat/integer.hpp"

namespace mukailat {

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Zero-sized shapes are valid: a 0 x n matrix is the basis of the zero
/// sublattice of Z^n.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows);

  // Throws std::invalid_argument on ragged input. `cols` is only consulted
  // when `rows` is empty.
  static IntMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols = 0);
  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Integer> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  Vector row_vector(std::size_t i) const;
  std::vector<Vector> to_rows() const;
  std::span<const Integer> entries() const { return entries_; }

  IntMatrix transpose() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Integer& t, const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws std::invalid_argument for non-square input. det of 0x0 is 1.
Integer det(const IntMatrix& m);

/// Smith normal form diagonal: min(rows, cols) nonnegative entries forming a
/// divisibility chain, with zeros trailing when m is rank deficient.
std::vector<Integer> snf(const IntMatrix& m);

/// Row-style Hermite normal form of the row lattice of m: upper echelon,
/// positive pivots, entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped, so the result has rank(m) rows.
IntMatrix hnf(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Basis (as rows, in Hermite form) of { v in Z^cols : m v = 0 }.
/// The kernel of an integer matrix is always a saturated subgroup.
IntMatrix integer_kernel(const IntMatrix& m);

/// Rows of `a` followed by rows of `b`; column counts must agree.
IntMatrix stack(const IntMatrix& a, const IntMatrix& b);

}  // namespace mukailat
