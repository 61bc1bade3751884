#include "cwl/exponent_vector.hpp"

#include <numeric>

namespace cwl {

ExponentVector::ExponentVector(int arity, std::initializer_list<int> exps)
    : arity_(check_arity(arity)), deg_(0) {
  if (static_cast<int>(exps.size()) != arity) {
    throw std::invalid_argument("ExponentVector: initializer size != arity");
  }
  e_.fill(0);
  int i = 0;
  for (int v : exps) {
    if (v < 0) throw std::invalid_argument("ExponentVector: negative exponent");
    e_[i++] = static_cast<std::int16_t>(v);
    deg_ += static_cast<std::int16_t>(v);
  }
}

void ExponentVector::set(int i, int v) {
  if (i < 0 || i >= arity_) throw std::out_of_range("ExponentVector::set");
  if (v < 0) throw std::invalid_argument("ExponentVector: negative exponent");
  deg_ += static_cast<std::int16_t>(v - e_[i]);
  e_[i] = static_cast<std::int16_t>(v);
}

int ExponentVector::max_var() const {
  for (int i = arity_ - 1; i >= 0; --i) {
    if (e_[i] > 0) return i + 1;
  }
  return 0;
}

bool ExponentVector::divides(const ExponentVector& m) const {
  if (arity_ != m.arity_) throw std::invalid_argument("arity mismatch");
  if (deg_ > m.deg_) return false;
  for (int i = 0; i < arity_; ++i) {
    if (e_[i] > m.e_[i]) return false;
  }
  return true;
}

ExponentVector ExponentVector::operator*(const ExponentVector& b) const {
  if (arity_ != b.arity_) throw std::invalid_argument("arity mismatch");
  ExponentVector r(arity_);
  for (int i = 0; i < arity_; ++i) r.e_[i] = e_[i] + b.e_[i];
  r.deg_ = deg_ + b.deg_;
  return r;
}

ExponentVector ExponentVector::quotient(const ExponentVector& b) const {
  if (!b.divides(*this)) throw std::domain_error("quotient: not divisible");
  ExponentVector r(arity_);
  for (int i = 0; i < arity_; ++i) r.e_[i] = e_[i] - b.e_[i];
  r.deg_ = deg_ - b.deg_;
  return r;
}

ExponentVector ExponentVector::lcm(const ExponentVector& b) const {
  if (arity_ != b.arity_) throw std::invalid_argument("arity mismatch");
  ExponentVector r(arity_);
  std::int16_t d = 0;
  for (int i = 0; i < arity_; ++i) {
    r.e_[i] = std::max(e_[i], b.e_[i]);
    d += r.e_[i];
  }
  r.deg_ = d;
  return r;
}

bool ExponentVector::coprime(const ExponentVector& b) const {
  if (arity_ != b.arity_) throw std::invalid_argument("arity mismatch");
  for (int i = 0; i < arity_; ++i) {
    if (e_[i] > 0 && b.e_[i] > 0) return false;
  }
  return true;
}

std::string ExponentVector::str() const {
  if (is_one()) return "1";
  std::string s;
  for (int i = 0; i < arity_; ++i) {
    if (e_[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
  }
  return s;
}

void for_each_monomial(int arity, int degree,
                       const std::function<void(const ExponentVector&)>& fn) {
  ExponentVector m(arity);
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == arity - 1) {
      m.set(var, remaining);
      fn(m);
      m.set(var, 0);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      m.set(var, e);
      rec(var + 1, remaining - e);
    }
    m.set(var, 0);
  };
  if (degree >= 0) rec(0, degree);
}

long monomial_space_dim(int arity, int degree) {
  if (degree < 0) return 0;
  // C(arity - 1 + degree, degree)
  long r = 1;
  for (int i = 1; i <= arity - 1; ++i) {
    r = r * (degree + i) / i;
  }
  return r;
}

std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b,
                             MonomialOrder ord) {
  if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
  const int n = a.arity();
  switch (ord) {
    case MonomialOrder::degrevlex: {
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      // ties: the monomial whose last nonzero entry of a-b is negative is larger
      for (int i = n - 1; i >= 0; --i) {
        int d = a[i] - b[i];
        if (d != 0) return d < 0 ? std::strong_ordering::greater
                                 : std::strong_ordering::less;
      }
      return std::strong_ordering::equal;
    }
    case MonomialOrder::lex: {
      for (int i = 0; i < n; ++i) {
        int d = a[i] - b[i];
        if (d != 0) return d > 0 ? std::strong_ordering::greater
                                 : std::strong_ordering::less;
      }
      return std::strong_ordering::equal;
    }
  }
  throw std::logic_error("unknown monomial order");
}

}  // namespace cwl
