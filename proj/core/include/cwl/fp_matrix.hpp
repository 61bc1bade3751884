#pragma once

#include <vector>

#include "cwl/prime_field.hpp"

namespace cwl {

/// Dense matrix over a prime field with row-reduction utilities. Degrees at
/// desk scale keep these matrices small, so plain Gaussian elimination is used.
class FpMatrix {
 public:
  FpMatrix(PrimeField field, int rows, int cols)
      : field_(field), rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  PrimeField::Scalar& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  PrimeField::Scalar at(int i, int j) const {
    return a_[std::size_t(i) * cols_ + j];
  }

  /// Reduce to row echelon form in place; returns pivot column per pivot row.
  std::vector<int> row_reduce();
  int rank() const;
  bool is_invertible() const;

  /// Append the rows of other (same width).
  void append_rows(const FpMatrix& other);

 private:
  PrimeField field_;
  int rows_, cols_;
  std::vector<PrimeField::Scalar> a_;
};

/// Incremental row space: feed rows, learns rank; reports whether a row is in
/// the span of those inserted so far.
class RowSpace {
 public:
  RowSpace(PrimeField field, int width) : field_(field), width_(width) {}

  int rank() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }

  /// Returns true if the row enlarged the span.
  bool insert(std::vector<PrimeField::Scalar> row);
  bool contains(std::vector<PrimeField::Scalar> row) const;

  /// Echelon-form basis of the span.
  const std::vector<std::vector<PrimeField::Scalar>>& basis_rows() const {
    return rows_;
  }

 private:
  // rows in echelon form, pivots_ [k] = pivot column of rows_[k]
  bool reduce(std::vector<PrimeField::Scalar>& row) const;
  PrimeField field_;
  int width_;
  std::vector<std::vector<PrimeField::Scalar>> rows_;
  std::vector<int> pivots_;
};

}  // namespace cwl
