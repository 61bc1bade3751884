#pragma once

#include <cstdint>
#include <stdexcept>

namespace cwl {

/// Arithmetic in Z/p for a prime p < 2^31. Scalars are canonical
/// representatives in [0, p), so products fit in int64 without overflow.
class PrimeField {
 public:
  using Scalar = std::int64_t;

  explicit PrimeField(std::int64_t p);

  std::int64_t characteristic() const { return p_; }

  Scalar reduce(std::int64_t x) const {
    Scalar r = x % p_;
    return r < 0 ? r + p_ : r;
  }
  Scalar add(Scalar a, Scalar b) const {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const {
    Scalar s = a - b;
    return s < 0 ? s + p_ : s;
  }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const { return (a * b) % p_; }
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::int64_t p_;
};

bool is_prime(std::int64_t n);

}  // namespace cwl
