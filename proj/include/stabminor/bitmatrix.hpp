#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "stabminor/bitvec.hpp"

namespace stabminor::f2 {

// Dense matrix over F2, stored row-major as packed BitVectors.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

  static BitMatrix identity(std::size_t n);
  // One string per row, e.g. {"101", "011"}.
  static BitMatrix from_rows(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }
  void flip(std::size_t r, std::size_t c) { data_[r].flip(c); }

  const BitVector& row(std::size_t r) const { return data_[r]; }
  BitVector& row(std::size_t r) { return data_[r]; }

  BitVector column(std::size_t c) const;
  void set_column(std::size_t c, const BitVector& v);

  void xor_row(std::size_t dst, std::size_t src) { data_[dst] ^= data_[src]; }
  void swap_rows(std::size_t a, std::size_t b) {
    std::swap(data_[a], data_[b]);
  }

  BitMatrix transposed() const;
  BitMatrix operator*(const BitMatrix& o) const;
  BitVector operator*(const BitVector& v) const;

  BitMatrix submatrix(std::span<const std::size_t> row_idx,
                      std::span<const std::size_t> col_idx) const;

  bool is_symmetric() const;
  bool is_zero() const;

  bool operator==(const BitMatrix&) const = default;

  std::string to_string() const;  // rows of 0/1, newline separated

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

struct RrefResult {
  BitMatrix matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column indices, one per pivot row
};

// Reduced row-echelon form over F2; preserves the row space.
RrefResult rref(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

// Unique column-reduced echelon basis of the column space: the output has
// exactly rank(m) columns, and two inputs with equal column spaces produce
// bit-identical outputs.
BitMatrix column_canonical(const BitMatrix& m);

// Determinant over F2. Throws std::invalid_argument on non-square input.
int det(const BitMatrix& m);

// Determinant of the submatrix selected by row_idx x col_idx (0-based).
// The empty minor (both selections empty) is 1. Throws
// std::invalid_argument on mismatched cardinalities or out-of-range
// indices.
int minor_det(const BitMatrix& m, std::span<const std::size_t> row_idx,
              std::span<const std::size_t> col_idx);

// Inverse of a square invertible matrix. Throws std::invalid_argument if
// the matrix is singular or non-square.
BitMatrix inverse(const BitMatrix& m);

bool is_invertible(const BitMatrix& m);

}  // namespace stabminor::f2
