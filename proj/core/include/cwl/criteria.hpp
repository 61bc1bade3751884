#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "cwl/budget.hpp"
#include "cwl/graded_ideal.hpp"
#include "cwl/resolution.hpp"

namespace cwl {

enum class CwlDecision { yes, no, inconclusive };

std::string to_string(CwlDecision d);

/// Outcome of a componentwise-linearity test: the decision, the method that
/// produced it, and a reproducible witness (seeds, orders, the ideals that
/// were compared). gin-based runs are flagged probabilistic.
struct CwlVerdict {
  CwlDecision decision;
  std::string method;
  nlohmann::json witness;
  bool probabilistic = false;
};

/// True iff the Betti table of I is supported on j = i + d. Throws
/// std::invalid_argument unless I is minimally generated in degree d only.
bool has_linear_resolution(const GradedIdeal& ideal, int d,
                           MonomialOrder ord = MonomialOrder::degrevlex,
                           Budget* budget = nullptr);

/// One-directional initial-ideal test: yes when in_ord(I) is stable with the
/// same number of minimal generators as I; otherwise inconclusive (the
/// hypothesis fails, or the converse direction is not available in the given
/// coordinates).
CwlVerdict test_cwl_initial(const GradedIdeal& ideal,
                            MonomialOrder ord = MonomialOrder::degrevlex,
                            Budget* budget = nullptr);

/// Generic-initial-ideal test under degrevlex: yes iff the sampled gin is
/// stable and beta_0 agrees with I; no when the agreed sample is unstable or
/// beta_0 differs; inconclusive when the trials disagree (the field is too
/// small for generic coordinates). Probabilistic (the gin is sampled, never
/// certified).
CwlVerdict test_cwl_gin(const GradedIdeal& ideal, std::uint64_t seed = 1,
                        int trials = 3, Budget* budget = nullptr);

/// Linear-part test: yes iff the linear part of the minimal resolution of I
/// is acyclic (decided by the rank/height criterion); budget exhaustion is
/// reported as inconclusive.
CwlVerdict test_cwl_linear_part(const GradedIdeal& ideal,
                                Budget* budget = nullptr);

/// Definition-based test: every component ideal I_<d> for d between the
/// least and largest minimal-generator degree must have a d-linear
/// resolution.
CwlVerdict test_cwl_direct(const GradedIdeal& ideal, Budget* budget = nullptr);

}  // namespace cwl
