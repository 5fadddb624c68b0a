#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gkz/number.hpp"

namespace gkz {

// Dense integer matrix, arbitrary precision, row-major storage. Columns are
// the generators a_1..a_n of the lattice/semigroup under study.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, size_t rows);

  size_t rows() const noexcept { return rows_; }
  size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(size_t i) const;
  IntVector column(size_t j) const;
  std::vector<IntVector> columns() const;
  IntMatrix select_columns(std::span<const size_t> idx) const;

  IntMatrix transpose() const;
  IntVector apply(std::span<const Integer> x) const;  // A * x
  RationalVector apply(std::span<const Rational> x) const;

  void swap_rows(size_t a, size_t b);
  void swap_cols(size_t a, size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(size_t dst, size_t src, const Integer& k);
  // col[dst] += k * col[src]
  void add_col_multiple(size_t dst, size_t src, const Integer& k);
  void negate_row(size_t r);
  void negate_col(size_t c);

  // True iff the columns generate Z^d.
  bool spans_lattice() const;
  size_t rank() const;

  // "3 2 0; 1 1 1" or one row per line.
  static IntMatrix parse(std::string_view text);
  std::string to_string() const;  // "3 2 0; 1 1 1"

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// Determinant by fraction-free elimination; square matrices only.
Integer determinant(const IntMatrix& m);

using RationalMatrix = std::vector<RationalVector>;  // list of rows

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> row_reduce(RationalMatrix& m, size_t cols);
size_t rational_rank(const RationalMatrix& rows, size_t cols);
// Basis of {x : M x = 0}.
std::vector<RationalVector> rational_nullspace(const RationalMatrix& m, size_t cols);

// Integral basis of the annihilator of span(vectors) in Q^dim, each row primitive.
std::vector<IntVector> annihilator_basis(const std::vector<IntVector>& vectors, size_t dim);

// Scale a rational vector to a primitive integer vector with the same direction.
IntVector primitive_integer_vector(std::span<const Rational> v);

}  // namespace gkz
