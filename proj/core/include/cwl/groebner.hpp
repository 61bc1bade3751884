#pragma once

#include <vector>

#include "cwl/budget.hpp"
#include "cwl/polynomial.hpp"

namespace cwl {

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: f = sum q_i g_i + r with no term of r divisible by
/// a leading term of G and lt(q_i g_i) <= lt(f). Divisor choice: first match
/// in list order (deterministic).
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& g,
                      MonomialOrder ord);

/// Remainder of division only.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g,
                       MonomialOrder ord, Budget* budget = nullptr);

/// Reduced Groebner basis: monic, auto-reduced, sorted descending by leading
/// monomial. Normal selection strategy with Gebauer-Moeller pair elimination;
/// deterministic for a fixed input.
std::vector<Polynomial> buchberger(std::vector<Polynomial> gens,
                                   MonomialOrder ord, Budget* budget = nullptr);

/// Interreduce an arbitrary basis (used on Buchberger output).
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g,
                                     MonomialOrder ord);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        MonomialOrder ord);

}  // namespace cwl
