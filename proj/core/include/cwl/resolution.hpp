#pragma once

#include <vector>

#include "cwl/betti.hpp"
#include "cwl/budget.hpp"
#include "cwl/graded_ideal.hpp"
#include "cwl/homogeneous_matrix.hpp"

namespace cwl {

/// A finite complex of graded free modules F_len -> ... -> F_1 -> F_0.
/// differential(k) is the map F_k -> F_{k-1} (1-based); entries are
/// homogeneous of the degree dictated by the shifts, and the composition of
/// consecutive differentials is exactly zero (checked on construction).
class GradedFreeComplex {
 public:
  GradedFreeComplex(std::vector<std::vector<int>> shifts,
                    std::vector<HomogeneousMatrix> differentials);

  /// Number of differentials; modules are F_0 .. F_length().
  int length() const { return static_cast<int>(diffs_.size()); }
  const std::vector<int>& shifts(int k) const { return shifts_[k]; }
  const HomogeneousMatrix& differential(int k) const { return diffs_[k - 1]; }

  const PrimeField& field() const { return diffs_[0].field(); }
  int arity() const { return diffs_[0].arity(); }

  friend bool operator==(const GradedFreeComplex&, const GradedFreeComplex&);

 private:
  std::vector<std::vector<int>> shifts_;
  std::vector<HomogeneousMatrix> diffs_;
};

/// Minimal graded free resolution of S/I (F_0 = S). Deterministic for a
/// fixed (ideal, order); every differential entry lies in the irrelevant
/// maximal ideal, so the Betti numbers can be read off the shifts.
GradedFreeComplex minimal_resolution(const GradedIdeal& ideal,
                                     MonomialOrder ord = MonomialOrder::degrevlex,
                                     Budget* budget = nullptr);

/// Drop F_0 = S from a resolution of S/I, giving the minimal resolution of
/// the ideal itself (F_0 = free module on the minimal generators).
GradedFreeComplex ideal_resolution(const GradedFreeComplex& f);

/// Betti table of S/I read from the shifts of a minimal resolution of S/I.
BettiTable betti_table(const GradedFreeComplex& f);

/// max(j - i) over the support of the S/I table.
int regularity(const GradedFreeComplex& f);

/// Construction replacing every differential entry of degree >= 2 by zero
/// (the linear part F^lin); shifts unchanged, still a complex.
GradedFreeComplex linear_part(const GradedFreeComplex& f);

/// Buchsbaum-Eisenbud acyclicity: true iff for every k >= 1 the ranks
/// satisfy rank d_k + rank d_{k+1} = rank F_k and the ideal of
/// (rank d_k)-minors of d_k has height >= k (the unit ideal when
/// rank d_k = 0). The budget is charged per minor and per Groebner step.
bool is_acyclic(const GradedFreeComplex& f, Budget* budget = nullptr);

}  // namespace cwl
