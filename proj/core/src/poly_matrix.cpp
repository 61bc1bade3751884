#include "cwl/poly_matrix.hpp"

#include <stdexcept>

namespace cwl {

namespace {

struct GridShape {
  int rows, cols;
};

GridShape check_grid(const PolyGrid& m) {
  if (m.empty() || m[0].empty()) {
    throw std::invalid_argument("poly grid: empty matrix");
  }
  const std::size_t cols = m[0].size();
  for (const auto& row : m) {
    if (row.size() != cols) {
      throw std::invalid_argument("poly grid: ragged rows");
    }
  }
  return GridShape{static_cast<int>(m.size()), static_cast<int>(cols)};
}

// Fraction-free elimination (Bareiss) with full pivoting. Returns the number
// of pivots; if det is non-null and the matrix is square of full rank, stores
// the determinant (the last pivot, sign-corrected).
int bareiss(PolyGrid a, Polynomial* det) {
  auto [rows, cols] = check_grid(a);
  const PrimeField field = a[0][0].field();
  const int arity = a[0][0].arity();
  Polynomial prev = Polynomial::term(field, 1, ExponentVector(arity));
  int sign = 1;
  int r = 0;
  const int steps = std::min(rows, cols);
  while (r < steps) {
    int pi = -1, pj = -1;
    for (int i = r; i < rows && pi < 0; ++i) {
      for (int j = r; j < cols; ++j) {
        if (!a[i][j].is_zero()) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi < 0) break;
    if (pi != r) {
      std::swap(a[pi], a[r]);
      sign = -sign;
    }
    if (pj != r) {
      for (int i = 0; i < rows; ++i) std::swap(a[i][pj], a[i][r]);
      sign = -sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = r + 1; j < cols; ++j) {
        a[i][j] = (a[r][r] * a[i][j] - a[i][r] * a[r][j])
                      .divided_exactly_by(prev);
      }
      a[i][r] = Polynomial(field, arity);
    }
    prev = a[r][r];
    ++r;
  }
  if (det) {
    if (rows != cols) throw std::invalid_argument("determinant: not square");
    if (r < rows) {
      *det = Polynomial(field, arity);
    } else {
      *det = sign < 0 ? -a[rows - 1][rows - 1] : a[rows - 1][rows - 1];
    }
  }
  return r;
}

void next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) {
    c.clear();
    return;
  }
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
}

}  // namespace

Polynomial grid_determinant(const PolyGrid& m) {
  Polynomial det(m[0][0].field(), m[0][0].arity());
  bareiss(m, &det);
  return det;
}

int grid_rank(const PolyGrid& m) { return bareiss(m, nullptr); }

std::vector<Polynomial> grid_minors(const PolyGrid& m, int size,
                                    Budget* budget) {
  auto [rows, cols] = check_grid(m);
  if (size < 1 || size > rows || size > cols) {
    throw std::invalid_argument("grid_minors: size out of range");
  }
  std::vector<Polynomial> out;
  std::vector<int> ri(size), ci(size);
  for (int i = 0; i < size; ++i) ri[i] = i;
  while (!ri.empty()) {
    ci.resize(size);
    for (int i = 0; i < size; ++i) ci[i] = i;
    while (!ci.empty()) {
      if (budget) budget->charge();
      PolyGrid sub(size, std::vector<Polynomial>());
      for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) sub[i].push_back(m[ri[i]][ci[j]]);
      }
      out.push_back(grid_determinant(sub));
      next_combination(ci, cols);
    }
    next_combination(ri, rows);
  }
  return out;
}

}  // namespace cwl
