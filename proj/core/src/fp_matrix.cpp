#include "cwl/fp_matrix.hpp"

#include <stdexcept>

namespace cwl {

std::vector<int> FpMatrix::row_reduce() {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int piv = -1;
    for (int i = r; i < rows_; ++i) {
      if (at(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < cols_; ++j) std::swap(at(piv, j), at(r, j));
    }
    auto inv = field_.inv(at(r, c));
    for (int j = c; j < cols_; ++j) at(r, j) = field_.mul(at(r, j), inv);
    for (int i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      auto f = at(i, c);
      for (int j = c; j < cols_; ++j) {
        at(i, j) = field_.sub(at(i, j), field_.mul(f, at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int FpMatrix::rank() const {
  FpMatrix copy = *this;
  return static_cast<int>(copy.row_reduce().size());
}

bool FpMatrix::is_invertible() const {
  return rows_ == cols_ && rank() == rows_;
}

void FpMatrix::append_rows(const FpMatrix& other) {
  if (other.cols_ != cols_) throw std::invalid_argument("append_rows: width");
  a_.insert(a_.end(), other.a_.begin(), other.a_.end());
  rows_ += other.rows_;
}

bool RowSpace::reduce(std::vector<PrimeField::Scalar>& row) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    auto c = row[pivots_[k]];
    if (c == 0) continue;
    for (int j = 0; j < width_; ++j) {
      row[j] = field_.sub(row[j], field_.mul(c, rows_[k][j]));
    }
  }
  for (int j = 0; j < width_; ++j) {
    if (row[j] != 0) return false;  // nonzero residue
  }
  return true;
}

bool RowSpace::insert(std::vector<PrimeField::Scalar> row) {
  if (static_cast<int>(row.size()) != width_) {
    throw std::invalid_argument("RowSpace: width mismatch");
  }
  if (reduce(row)) return false;
  int piv = 0;
  while (row[piv] == 0) ++piv;
  auto inv = field_.inv(row[piv]);
  for (int j = 0; j < width_; ++j) row[j] = field_.mul(row[j], inv);
  // keep existing rows reduced against the new one
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    auto c = rows_[k][piv];
    if (c == 0) continue;
    for (int j = 0; j < width_; ++j) {
      rows_[k][j] = field_.sub(rows_[k][j], field_.mul(c, row[j]));
    }
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(piv);
  return true;
}

bool RowSpace::contains(std::vector<PrimeField::Scalar> row) const {
  if (static_cast<int>(row.size()) != width_) {
    throw std::invalid_argument("RowSpace: width mismatch");
  }
  return reduce(row);
}

}  // namespace cwl
