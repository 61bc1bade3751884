#include "cwl/homogeneous_matrix.hpp"

#include <algorithm>
#include <numeric>

namespace cwl {

DegreeMatrix::DegreeMatrix(int rows, int cols, std::vector<int> entries)
    : rows_(rows), cols_(cols), u_(std::move(entries)) {
  if (rows < 1 || cols < 1 ||
      u_.size() != static_cast<std::size_t>(rows) * cols) {
    throw std::invalid_argument("DegreeMatrix: bad shape");
  }
}

DegreeMatrix DegreeMatrix::from_shifts(const std::vector<int>& row_deg,
                                       const std::vector<int>& col_deg) {
  std::vector<int> u;
  u.reserve(row_deg.size() * col_deg.size());
  for (int g : row_deg) {
    for (int f : col_deg) u.push_back(f - g);
  }
  return DegreeMatrix(static_cast<int>(row_deg.size()),
                      static_cast<int>(col_deg.size()), std::move(u));
}

bool DegreeMatrix::satisfies_homogeneity() const {
  // separability u_ij + u_kl = u_il + u_kj, i.e. the grid comes from shifts
  for (int i = 1; i < rows_; ++i) {
    for (int j = 1; j < cols_; ++j) {
      if (at(i, j) + at(0, 0) != at(i, 0) + at(0, j)) return false;
    }
  }
  return true;
}

bool DegreeMatrix::is_normalized() const {
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j + 1 < cols_; ++j) {
      if (at(i, j) < at(i, j + 1)) return false;
    }
  }
  for (int j = 0; j < cols_; ++j) {
    for (int i = 1; i < rows_; ++i) {
      if (at(i, j) < at(i - 1, j)) return false;
    }
  }
  return true;
}

NormalizedDegreeMatrix normalize_degree_matrix(const DegreeMatrix& d) {
  if (!d.satisfies_homogeneity()) {
    throw std::invalid_argument(
        "normalize_degree_matrix: inconsistent homogeneity relation");
  }
  const int r = d.rows(), c = d.cols();
  std::vector<int> rp(r), cp(c);
  std::iota(rp.begin(), rp.end(), 0);
  std::iota(cp.begin(), cp.end(), 0);
  // rows ascending by row vector, columns descending by column vector;
  // stable for deterministic output on ties
  std::stable_sort(rp.begin(), rp.end(), [&](int a, int b) {
    for (int j = 0; j < c; ++j) {
      if (d.at(a, j) != d.at(b, j)) return d.at(a, j) < d.at(b, j);
    }
    return false;
  });
  std::stable_sort(cp.begin(), cp.end(), [&](int a, int b) {
    for (int i = 0; i < r; ++i) {
      if (d.at(i, a) != d.at(i, b)) return d.at(i, a) > d.at(i, b);
    }
    return false;
  });
  std::vector<int> out;
  out.reserve(std::size_t(r) * c);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) out.push_back(d.at(rp[i], cp[j]));
  }
  return NormalizedDegreeMatrix{DegreeMatrix(r, c, std::move(out)),
                                std::move(rp), std::move(cp)};
}

HomogeneousMatrix::HomogeneousMatrix(
    std::vector<int> row_deg, std::vector<int> col_deg,
    std::vector<std::vector<Polynomial>> entries)
    : row_deg_(std::move(row_deg)), col_deg_(std::move(col_deg)),
      entries_(std::move(entries)) {
  if (row_deg_.empty() || col_deg_.empty() ||
      entries_.size() != row_deg_.size()) {
    throw std::invalid_argument("HomogeneousMatrix: bad shape");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].size() != col_deg_.size()) {
      throw std::invalid_argument("HomogeneousMatrix: ragged rows");
    }
    for (std::size_t j = 0; j < entries_[i].size(); ++j) {
      const Polynomial& e = entries_[i][j];
      if (!(e.field() == field()) || e.arity() != arity()) {
        throw std::invalid_argument("HomogeneousMatrix: entry ring mismatch");
      }
      if (e.is_zero()) continue;
      const int want = col_deg_[j] - static_cast<int>(row_deg_[i]);
      if (want <= 0) {
        throw std::invalid_argument(
            "HomogeneousMatrix: nonzero entry at non-positive formal degree");
      }
      if (!e.is_homogeneous() || e.degree() != want) {
        throw std::invalid_argument(
            "HomogeneousMatrix: entry degree violates the degree data");
      }
    }
  }
}

DegreeMatrix HomogeneousMatrix::degree_matrix() const {
  return DegreeMatrix::from_shifts(row_deg_, col_deg_);
}

bool HomogeneousMatrix::is_symmetric() const {
  if (rows() != cols()) return false;
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < i; ++j) {
      if (!(entries_[i][j] == entries_[j][i])) return false;
    }
  }
  return true;
}

bool HomogeneousMatrix::entries_in_max_ideal() const {
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) {
      if (!entries_[i][j].is_zero() && entries_[i][j].degree() == 0) {
        return false;
      }
    }
  }
  return true;
}

namespace {
Polynomial det_recursive(const HomogeneousMatrix& a,
                         const std::vector<int>& rows,
                         std::vector<int>& cols) {
  const PrimeField f = a.field();
  if (rows.size() == 1) return a.at(rows[0], cols[0]);
  Polynomial acc(f, a.arity());
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Polynomial& e = a.at(rows[0], cols[k]);
    if (e.is_zero()) continue;
    std::vector<int> sub_cols;
    for (std::size_t l = 0; l < cols.size(); ++l) {
      if (l != k) sub_cols.push_back(cols[l]);
    }
    Polynomial minor = det_recursive(a, sub_rows, sub_cols);
    Polynomial contrib = e * minor;
    acc = (k % 2 == 0) ? acc + contrib : acc - contrib;
  }
  return acc;
}
}  // namespace

Polynomial HomogeneousMatrix::determinant() const {
  if (rows() != cols()) throw std::invalid_argument("determinant: not square");
  std::vector<int> r(rows()), c(cols());
  std::iota(r.begin(), r.end(), 0);
  std::iota(c.begin(), c.end(), 0);
  return det_recursive(*this, r, c);
}

std::vector<Polynomial> HomogeneousMatrix::minors(int size) const {
  if (size < 1 || size > rows() || size > cols()) {
    throw std::invalid_argument("minors: bad size");
  }
  std::vector<Polynomial> out;
  std::vector<int> rsel(size), csel(size);
  // iterate over all row/column combinations
  std::vector<int> ridx(size);
  std::iota(ridx.begin(), ridx.end(), 0);
  auto next_comb = [](std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
      if (idx[i] < n - k + i) {
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  do {
    std::vector<int> cidx(size);
    std::iota(cidx.begin(), cidx.end(), 0);
    do {
      std::vector<int> cc = cidx;
      out.push_back(det_recursive(*this, ridx, cc));
    } while (next_comb(cidx, cols()));
  } while (next_comb(ridx, rows()));
  return out;
}

bool operator==(const HomogeneousMatrix& a, const HomogeneousMatrix& b) {
  if (a.row_deg_ != b.row_deg_ || a.col_deg_ != b.col_deg_) return false;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (!(a.at(i, j) == b.at(i, j))) return false;
    }
  }
  return true;
}

HomogeneousMatrix linearize(const HomogeneousMatrix& a) {
  std::vector<std::vector<Polynomial>> entries;
  entries.reserve(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    std::vector<Polynomial> row;
    row.reserve(a.cols());
    for (int j = 0; j < a.cols(); ++j) {
      const Polynomial& e = a.at(i, j);
      if (!e.is_zero() && e.degree() >= 2) {
        row.emplace_back(e.field(), e.arity());
      } else {
        row.push_back(e);
      }
    }
    entries.push_back(std::move(row));
  }
  return HomogeneousMatrix(a.row_degrees(), a.col_degrees(),
                           std::move(entries));
}

}  // namespace cwl
