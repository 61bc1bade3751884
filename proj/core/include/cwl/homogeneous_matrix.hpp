#pragma once

#include <vector>

#include "cwl/polynomial.hpp"

namespace cwl {

/// Integer matrix of formal entry degrees u_ij = f_j - g_i. The homogeneity
/// relation u_{i,i} + u_{i+1,i+1} = u_{i+1,i} + u_{i,i+1} must hold wherever
/// defined.
class DegreeMatrix {
 public:
  DegreeMatrix(int rows, int cols, std::vector<int> entries);
  /// Grid from row degrees g and column degrees f: u_ij = f_j - g_i.
  static DegreeMatrix from_shifts(const std::vector<int>& row_deg,
                                  const std::vector<int>& col_deg);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int i, int j) const { return u_[std::size_t(i) * cols_ + j]; }

  bool satisfies_homogeneity() const;
  /// Non-increasing along rows, non-decreasing down columns (condition used
  /// by the determinantal classifiers).
  bool is_normalized() const;

  friend bool operator==(const DegreeMatrix&, const DegreeMatrix&) = default;

 private:
  int rows_, cols_;
  std::vector<int> u_;
};

struct NormalizedDegreeMatrix {
  DegreeMatrix matrix;
  std::vector<int> row_perm;  // row i of output = row row_perm[i] of input
  std::vector<int> col_perm;
};

/// Stable row/column permutation bringing the grid to normalized form.
NormalizedDegreeMatrix normalize_degree_matrix(const DegreeMatrix& d);

/// A matrix of homogeneous polynomials describing a graded map: the nonzero
/// entry (i,j) is homogeneous of degree exactly col_deg[j] - row_deg[i], and
/// positions of non-positive formal degree hold zero.
class HomogeneousMatrix {
 public:
  HomogeneousMatrix(std::vector<int> row_deg, std::vector<int> col_deg,
                    std::vector<std::vector<Polynomial>> entries);

  int rows() const { return static_cast<int>(row_deg_.size()); }
  int cols() const { return static_cast<int>(col_deg_.size()); }
  const std::vector<int>& row_degrees() const { return row_deg_; }
  const std::vector<int>& col_degrees() const { return col_deg_; }
  const Polynomial& at(int i, int j) const { return entries_[i][j]; }
  int formal_degree(int i, int j) const { return col_deg_[j] - row_deg_[i]; }
  DegreeMatrix degree_matrix() const;

  const PrimeField& field() const { return entries_[0][0].field(); }
  int arity() const { return entries_[0][0].arity(); }

  bool is_symmetric() const;
  bool entries_in_max_ideal() const;  // no nonzero degree-0 entries

  std::vector<Polynomial> minors(int size) const;
  Polynomial determinant() const;

  friend bool operator==(const HomogeneousMatrix& a,
                         const HomogeneousMatrix& b);

 private:
  std::vector<int> row_deg_, col_deg_;
  std::vector<std::vector<Polynomial>> entries_;
};

/// Zero every entry of degree >= 2; degree-1 entries and the degree data are
/// unchanged (the matrix linearization A^lin).
HomogeneousMatrix linearize(const HomogeneousMatrix& a);

}  // namespace cwl
