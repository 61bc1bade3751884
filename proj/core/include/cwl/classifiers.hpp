#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cwl/betti.hpp"
#include "cwl/criteria.hpp"
#include "cwl/homogeneous_matrix.hpp"
#include "cwl/monomial_ideal.hpp"

namespace cwl {

/// Degree data of a standard determinantal ideal: normalized degree matrix of
/// an (m+c-1) x m homogeneous matrix (c = rows - cols + 1), optionally with a
/// concrete realization. When only the degree matrix is given the height
/// hypothesis is trusted, not verified.
struct DeterminantalInput {
  DegreeMatrix degrees;
  std::optional<HomogeneousMatrix> matrix;

  int m() const { return degrees.cols(); }
  int c() const { return degrees.rows() - degrees.cols() + 1; }
  /// Formal degree of the bottom-right entry (the maximal one in normalized
  /// position).
  int e() const { return degrees.at(degrees.rows() - 1, degrees.cols() - 1); }
};

/// Degree data of a symmetric matrix of submaximal-minor type: sizes m and
/// half-integers d_1 <= ... <= d_m stored doubled for exactness.
struct SymmetricInput {
  int m;
  std::vector<int> doubled_degrees;  // 2*d_1, ..., 2*d_m, ascending
  std::optional<HomogeneousMatrix> matrix;

  /// s = max{ j : d_j = d_1 }, t = min{ j : d_j = d_m } (1-based).
  int s() const;
  int t() const;
  int e() const { return doubled_degrees.back(); }  // 2*d_m
};

/// Complete-intersection classifier for ideals asserted to be Gorenstein of
/// finite projective dimension: componentwise linear iff I is a complete
/// intersection with all minimal generators linear except possibly one.
/// Gorensteinness itself is not verified.
CwlVerdict classify_gorenstein(const GradedIdeal& ideal,
                               Budget* budget = nullptr);

/// The stable model with the same Betti numbers: (x_1,...,x_{c-1}, x_c^e).
MonomialIdeal gorenstein_companion(int c, int e);

/// Degree-matrix classifier for standard determinantal ideals of height c:
/// yes iff c = 1; or c = 2 with all diagonal degrees equal to one; or c >= 3
/// with every row except possibly the last all of degree one.
CwlVerdict classify_determinantal(const DeterminantalInput& input);

/// Linearization-height test on a concrete matrix: requires height I_m(A)=c,
/// answers yes iff the maximal minors of A^lin generate an ideal of height
/// at least c-1.
CwlVerdict test_cwl_determinantal(const HomogeneousMatrix& a, int c,
                                  Budget* budget = nullptr);

/// Strongly stable model for a componentwise linear standard determinantal
/// ideal with c >= 3: (x_1,...,x_c)^{m-1} * (x_1,...,x_{c-1}, x_c^e).
MonomialIdeal determinantal_companion(const DeterminantalInput& input);

/// Which of the three degeneracy statements about an (m+1) x m matrix hold:
/// a diagonal degree >= 2 forces all maximal minors of A^lin to vanish; a
/// subdiagonal degree >= 2 bounds the height of their ideal by one; and with
/// a linear diagonal, some subdiagonal degree >= 2 and height I_m(A) = 2,
/// some maximal minor of A^lin survives.
struct MinorDegeneracyReport {
  bool diagonal_degree_two;       // hypothesis: some deg a_{i,i} >= 2
  bool all_linearized_minors_zero;
  bool subdiagonal_degree_two;    // hypothesis: some deg a_{i+1,i} >= 2
  bool linearized_height_at_most_one;
  bool mixed_hypotheses;          // linear diagonal, subdiag >= 2, height 2
  bool linearized_minor_survives;
};

MinorDegeneracyReport minor_degeneracy_checks(const HomogeneousMatrix& a,
                                              Budget* budget = nullptr);

/// Degree-data classifier for submaximal minors of a symmetric m x m matrix
/// of height 3: yes iff all entries have degree one, or m is odd and the
/// degrees split as d_1 = ... = d_s <= 0, d_{s+1} = ... = d_m = 1 - d_1 with
/// s = (m-1)/2.
CwlVerdict classify_symmetric(const SymmetricInput& input);

/// Linearization-height test for a concrete symmetric matrix: requires
/// height I_{m-1}(A) = 3, answers yes iff height I_{m-1}(A^lin) >= 2.
CwlVerdict test_cwl_symmetric(const HomogeneousMatrix& a,
                              Budget* budget = nullptr);

/// Betti table of S/I read off the three-strand resolution of the ideal of
/// submaximal minors with degree data d_1 = ... = d_s = 1 - e/ ... (m odd,
/// s = (m-1)/2, e the common top degree); for e = 1 this is the linear table
/// of (x_1,x_2,x_3)^{m-1}.
BettiTable jozefiak_betti(int m, int e);

/// The unique (t, r) with t >= -1, 0 <= r <= 2s-2-t and
/// r + sum_{i=2s-t}^{2s} i = C(s,2).
std::pair<int, int> compute_tr(int s);

/// Strongly stable model for the symmetric classifier; the construction
/// self-validates against jozefiak_betti and reports mismatches instead of
/// returning a silently wrong ideal.
struct SymmetricCompanionResult {
  std::optional<MonomialIdeal> ideal;  // empty when no term survives
  bool matches;                        // strongly stable and Betti-equal
  std::string note;
};

SymmetricCompanionResult symmetric_companion(int m, int e);

}  // namespace cwl
