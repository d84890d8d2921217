#include "stabminor/bitmatrix.hpp"

#include <stdexcept>

namespace stabminor::f2 {

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) return {};
  BitMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) {
      throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
    }
    m.data_[r] = BitVector::from_string(rows[r]);
  }
  return m;
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.set(r, get(r, c));
  return v;
}

void BitMatrix::set_column(std::size_t c, const BitVector& v) {
  for (std::size_t r = 0; r < rows_; ++r) set(r, c, v.get(r));
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
  if (cols_ != o.rows_) {
    throw std::invalid_argument("BitMatrix::operator*: shape mismatch");
  }
  BitMatrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (get(r, k)) out.data_[r] ^= o.data_[k];
    }
  }
  return out;
}

BitVector BitMatrix::operator*(const BitVector& v) const {
  if (cols_ != v.size()) {
    throw std::invalid_argument("BitMatrix::operator*: shape mismatch");
  }
  BitVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.set(r, data_[r].dot(v));
  return out;
}

BitMatrix BitMatrix::submatrix(std::span<const std::size_t> row_idx,
                               std::span<const std::size_t> col_idx) const {
  BitMatrix out(row_idx.size(), col_idx.size());
  for (std::size_t r = 0; r < row_idx.size(); ++r) {
    if (row_idx[r] >= rows_) {
      throw std::invalid_argument("BitMatrix::submatrix: row out of range");
    }
    for (std::size_t c = 0; c < col_idx.size(); ++c) {
      if (col_idx[c] >= cols_) {
        throw std::invalid_argument("BitMatrix::submatrix: col out of range");
      }
      out.set(r, c, get(row_idx[r], col_idx[c]));
    }
  }
  return out;
}

bool BitMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if (get(r, c) != get(c, r)) return false;
    }
  }
  return true;
}

bool BitMatrix::is_zero() const {
  for (const auto& row : data_) {
    if (row.any()) return false;
  }
  return true;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    s += data_[r].to_string();
    if (r + 1 < rows_) s += '\n';
  }
  return s;
}

RrefResult rref(const BitMatrix& m) {
  RrefResult res;
  res.matrix = m;
  BitMatrix& a = res.matrix;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && !a.get(pivot, c)) ++pivot;
    if (pivot == m.rows()) continue;
    a.swap_rows(r, pivot);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != r && a.get(i, c)) a.xor_row(i, r);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

BitMatrix column_canonical(const BitMatrix& m) {
  RrefResult t = rref(m.transposed());
  BitMatrix out(m.rows(), t.rank);
  for (std::size_t c = 0; c < t.rank; ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      out.set(r, c, t.matrix.get(c, r));
    }
  }
  return out;
}

int det(const BitMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("det: non-square matrix");
  }
  return rank(m) == m.rows() ? 1 : 0;
}

int minor_det(const BitMatrix& m, std::span<const std::size_t> row_idx,
              std::span<const std::size_t> col_idx) {
  if (row_idx.size() != col_idx.size()) {
    throw std::invalid_argument("minor_det: |rows| != |cols|");
  }
  if (row_idx.empty()) return 1;
  return det(m.submatrix(row_idx, col_idx));
}

BitMatrix inverse(const BitMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("inverse: non-square matrix");
  }
  std::size_t n = m.rows();
  BitMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m.get(r, c));
    aug.set(r, n + r, true);
  }
  RrefResult res = rref(aug);
  if (res.rank < n || res.pivots[n - 1] >= n) {
    throw std::invalid_argument("inverse: singular matrix");
  }
  BitMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.set(r, c, res.matrix.get(r, n + c));
  }
  return out;
}

bool is_invertible(const BitMatrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

}  // namespace stabminor::f2
