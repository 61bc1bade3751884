#pragma once

#include <optional>
#include <vector>

#include "cwl/exponent_vector.hpp"
#include "cwl/prime_field.hpp"

namespace cwl {

struct Term {
  PrimeField::Scalar coef;  // nonzero
  ExponentVector mono;
};

/// A polynomial over a prime field: terms with nonzero coefficients, no
/// duplicate monomials, kept strictly descending under the active order.
class Polynomial {
 public:
  Polynomial(PrimeField field, int arity,
             MonomialOrder ord = MonomialOrder::degrevlex)
      : field_(field), arity_(arity), ord_(ord) {}
  Polynomial(PrimeField field, int arity, std::vector<Term> terms,
             MonomialOrder ord = MonomialOrder::degrevlex);

  static Polynomial term(PrimeField field, PrimeField::Scalar c,
                         const ExponentVector& m,
                         MonomialOrder ord = MonomialOrder::degrevlex);
  /// The variable x_i (1-based).
  static Polynomial variable(PrimeField field, int arity, int i,
                             MonomialOrder ord = MonomialOrder::degrevlex);

  const PrimeField& field() const { return field_; }
  int arity() const { return arity_; }
  MonomialOrder order() const { return ord_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading_term() const;
  const ExponentVector& leading_monomial() const { return leading_term().mono; }
  PrimeField::Scalar leading_coef() const { return leading_term().coef; }

  /// Max total degree of a term; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  /// Same polynomial with terms re-sorted for another order.
  Polynomial with_order(MonomialOrder ord) const;

  Polynomial operator+(const Polynomial& q) const;
  Polynomial operator-(const Polynomial& q) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& q) const;
  Polynomial scaled(PrimeField::Scalar c) const;
  /// c * x^m * this
  Polynomial times_term(PrimeField::Scalar c, const ExponentVector& m) const;
  Polynomial monic() const;

  /// Exact division by q (throws std::domain_error if not divisible).
  Polynomial divided_exactly_by(const Polynomial& q) const;

  /// Substitute x_i -> linear_forms[i]; preserves homogeneity.
  Polynomial substitute(const std::vector<Polynomial>& linear_forms) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string str() const;

 private:
  void normalize();
  void check_compatible(const Polynomial& q) const;

  PrimeField field_;
  int arity_;
  MonomialOrder ord_;
  std::vector<Term> terms_;
};

}  // namespace cwl
