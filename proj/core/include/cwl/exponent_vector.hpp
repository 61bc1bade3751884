#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace cwl {

/// Monomial orders used throughout; variables are ordered x_1 > x_2 > ... > x_n.
enum class MonomialOrder { degrevlex, lex };

/// The exponent vector of a monomial x^a in a fixed arity. Dense storage,
/// arity capped at kMaxArity; the total degree is cached.
class ExponentVector {
 public:
  static constexpr int kMaxArity = 16;

  explicit ExponentVector(int arity) : arity_(check_arity(arity)), deg_(0) {
    e_.fill(0);
  }
  ExponentVector(int arity, std::initializer_list<int> exps);

  int arity() const { return arity_; }
  int degree() const { return deg_; }
  int operator[](int i) const { return e_[i]; }
  void set(int i, int v);

  bool is_one() const { return deg_ == 0; }
  /// Largest index (1-based) of a variable dividing the monomial; 0 for 1.
  int max_var() const;

  bool divides(const ExponentVector& m) const;
  ExponentVector operator*(const ExponentVector& b) const;
  /// Componentwise difference; requires divisibility of *this by b.
  ExponentVector quotient(const ExponentVector& b) const;
  ExponentVector lcm(const ExponentVector& b) const;
  bool coprime(const ExponentVector& b) const;

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.arity_ == b.arity_ && a.e_ == b.e_;
  }

  std::string str() const;  // e.g. "x1^2*x3"

 private:
  static int check_arity(int n) {
    if (n < 1 || n > kMaxArity) {
      throw std::invalid_argument("ExponentVector: arity out of range");
    }
    return n;
  }
  std::int16_t arity_;
  std::int16_t deg_;
  std::array<std::int16_t, kMaxArity> e_;
};

std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b,
                             MonomialOrder ord);

/// Visit every monomial of the given total degree, in a fixed deterministic
/// order (x_1-exponent descending, then x_2, ...).
void for_each_monomial(int arity, int degree,
                       const std::function<void(const ExponentVector&)>& fn);

/// Number of monomials of the given total degree in the given arity.
long monomial_space_dim(int arity, int degree);

/// Comparator adapter for ordered containers; descending when reversed.
struct MonomialLess {
  MonomialOrder ord;
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return compare(a, b, ord) == std::strong_ordering::less;
  }
};
struct MonomialGreater {
  MonomialOrder ord;
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return compare(a, b, ord) == std::strong_ordering::greater;
  }
};

}  // namespace cwl
