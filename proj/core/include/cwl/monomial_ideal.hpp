#pragma once

#include <vector>

#include "cwl/betti.hpp"
#include "cwl/exponent_vector.hpp"

namespace cwl {

/// A monomial ideal given by its minimal generators: an antichain under
/// divisibility, kept sorted degrevlex-descending for canonical form.
class MonomialIdeal {
 public:
  MonomialIdeal(int arity, std::vector<ExponentVector> generators);

  int arity() const { return arity_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  bool contains(const ExponentVector& m) const;

  int min_generator_degree() const;
  int max_generator_degree() const;

  /// Number of monomials of degree d lying in the ideal, i.e. dim_K I_d.
  long monomial_count(int d) const;

  /// Krull dimension of S/I: the largest cardinality of a variable subset Y
  /// such that no minimal generator is supported inside Y.
  int quotient_dimension() const;
  int height() const { return arity_ - quotient_dimension(); }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  std::string str() const;

 private:
  int arity_;
  std::vector<ExponentVector> gens_;
};

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, int k);
/// (x_1,...,x_n)^k * I
MonomialIdeal max_ideal_multiple(const MonomialIdeal& a, int k);
/// The irrelevant ideal (x_1,...,x_n) of the given arity.
MonomialIdeal max_ideal(int arity);

struct StabilityReport {
  bool stable;
  // on failure, the violating generator and the variable swapped in
  ExponentVector witness_generator{1};
  int witness_variable = 0;
};

/// Stable: for every monomial m in I and j < max(m), x_j * m / x_max(m) lies
/// in I; tested on minimal generators, which suffices.
StabilityReport stability_report(const MonomialIdeal& ideal);
bool is_stable(const MonomialIdeal& ideal);
/// Strongly stable: exchange x_i -> x_j for every i dividing m and j <= i.
bool is_strongly_stable(const MonomialIdeal& ideal);

/// Eliahou-Kervaire graded Betti numbers of S/I for a stable ideal:
/// beta_{i,i+j}(S/I) = sum over generators of degree j of C(max(m)-1, i-1).
/// Throws std::invalid_argument (with the violating generator) if not stable.
BettiTable ek_betti(const MonomialIdeal& ideal);

long binomial(int n, int k);

}  // namespace cwl
