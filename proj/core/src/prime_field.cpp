#include "cwl/prime_field.hpp"

namespace cwl {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
  if (p < 2 || p >= (std::int64_t{1} << 31)) {
    throw std::invalid_argument("PrimeField: characteristic out of range");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("PrimeField: characteristic is not prime");
  }
}

PrimeField::Scalar PrimeField::inv(Scalar a) const {
  if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
  // extended Euclid
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return reduce(t);
}

}  // namespace cwl
