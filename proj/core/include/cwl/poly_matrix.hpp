#pragma once

#include <vector>

#include "cwl/budget.hpp"
#include "cwl/polynomial.hpp"

namespace cwl {

/// Plain grid of polynomials over a common ring (no grading data).
using PolyGrid = std::vector<std::vector<Polynomial>>;

/// Determinant of a square grid by fraction-free (Bareiss) elimination with
/// exact polynomial division.
Polynomial grid_determinant(const PolyGrid& m);

/// Rank over the fraction field: the largest t with a nonzero t-minor,
/// computed by fraction-free elimination with full pivoting.
int grid_rank(const PolyGrid& m);

/// All size x size minors (row/column combinations in lexicographic order).
/// The budget, if given, is charged once per minor.
std::vector<Polynomial> grid_minors(const PolyGrid& m, int size,
                                    Budget* budget = nullptr);

}  // namespace cwl
