#include "cwl/polynomial.hpp"

#include <algorithm>
#include <map>

namespace cwl {

Polynomial::Polynomial(PrimeField field, int arity, std::vector<Term> terms,
                       MonomialOrder ord)
    : field_(field), arity_(arity), ord_(ord), terms_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  for (auto& t : terms_) {
    if (t.mono.arity() != arity_) {
      throw std::invalid_argument("Polynomial: term arity mismatch");
    }
    t.coef = field_.reduce(t.coef);
  }
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return compare(a.mono, b.mono, ord_) == std::strong_ordering::greater;
  });
  // merge duplicates, drop zeros
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef = field_.add(out.back().coef, t.coef);
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coef == 0; });
  terms_ = std::move(out);
}

Polynomial Polynomial::term(PrimeField field, PrimeField::Scalar c,
                            const ExponentVector& m, MonomialOrder ord) {
  return Polynomial(field, m.arity(), {Term{c, m}}, ord);
}

Polynomial Polynomial::variable(PrimeField field, int arity, int i,
                                MonomialOrder ord) {
  ExponentVector m(arity);
  m.set(i - 1, 1);
  return term(field, 1, m, ord);
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero");
  return terms_.front();
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.mono.degree() == d; });
}

Polynomial Polynomial::with_order(MonomialOrder ord) const {
  if (ord == ord_) return *this;
  return Polynomial(field_, arity_, terms_, ord);
}

void Polynomial::check_compatible(const Polynomial& q) const {
  if (!(field_ == q.field_) || arity_ != q.arity_) {
    throw std::invalid_argument("Polynomial: field/arity mismatch");
  }
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
  check_compatible(q);
  const Polynomial& b = q.ord_ == ord_ ? q : q.with_order(ord_);
  std::vector<Term> out;
  out.reserve(terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < b.terms_.size()) {
    auto c = compare(terms_[i].mono, b.terms_[j].mono, ord_);
    if (c == std::strong_ordering::greater) {
      out.push_back(terms_[i++]);
    } else if (c == std::strong_ordering::less) {
      out.push_back(b.terms_[j++]);
    } else {
      auto s = field_.add(terms_[i].coef, b.terms_[j].coef);
      if (s != 0) out.push_back(Term{s, terms_[i].mono});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < b.terms_.size(); ++j) out.push_back(b.terms_[j]);
  Polynomial r(field_, arity_, ord_);
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = field_.neg(t.coef);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const {
  return *this + (-q);
}

Polynomial Polynomial::scaled(PrimeField::Scalar c) const {
  c = field_.reduce(c);
  if (c == 0) return Polynomial(field_, arity_, ord_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = field_.mul(t.coef, c);
  return r;
}

Polynomial Polynomial::times_term(PrimeField::Scalar c,
                                  const ExponentVector& m) const {
  c = field_.reduce(c);
  if (c == 0) return Polynomial(field_, arity_, ord_);
  Polynomial r(field_, arity_, ord_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    r.terms_.push_back(Term{field_.mul(t.coef, c), t.mono * m});
  }
  // multiplication by a monomial preserves every monomial order
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
  check_compatible(q);
  std::map<ExponentVector, PrimeField::Scalar, MonomialGreater> acc(
      MonomialGreater{ord_});
  for (const auto& a : terms_) {
    for (const auto& b : q.terms_) {
      auto m = a.mono * b.mono;
      auto& slot = acc.try_emplace(m, 0).first->second;
      slot = field_.add(slot, field_.mul(a.coef, b.coef));
    }
  }
  Polynomial r(field_, arity_, ord_);
  for (const auto& [m, c] : acc) {
    if (c != 0) r.terms_.push_back(Term{c, m});
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading_coef()));
}

Polynomial Polynomial::divided_exactly_by(const Polynomial& q) const {
  check_compatible(q);
  if (q.is_zero()) throw std::domain_error("division by zero polynomial");
  Polynomial r = *this;
  Polynomial quot(field_, arity_, ord_);
  const Polynomial qq = q.with_order(ord_);
  const auto qinv = field_.inv(qq.leading_coef());
  while (!r.is_zero()) {
    if (!qq.leading_monomial().divides(r.leading_monomial())) {
      throw std::domain_error("divided_exactly_by: not divisible");
    }
    auto c = field_.mul(r.leading_coef(), qinv);
    auto m = r.leading_monomial().quotient(qq.leading_monomial());
    quot = quot + Polynomial::term(field_, c, m, ord_);
    r = r - qq.times_term(c, m);
  }
  return quot;
}

Polynomial Polynomial::substitute(
    const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != arity_) {
    throw std::invalid_argument("substitute: need one image per variable");
  }
  Polynomial result(field_, arity_, ord_);
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::term(field_, t.coef,
                                       ExponentVector(arity_), ord_);
    for (int i = 0; i < arity_; ++i) {
      for (int k = 0; k < t.mono[i]; ++k) prod = prod * images[i];
    }
    result = result + prod;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.field_ == b.field_) || a.arity_ != b.arity_) return false;
  const Polynomial bb = b.with_order(a.ord_);
  if (a.terms_.size() != bb.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coef != bb.terms_[i].coef ||
        !(a.terms_[i].mono == bb.terms_[i].mono)) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    if (t.mono.is_one()) {
      s += std::to_string(t.coef);
    } else if (t.coef == 1) {
      s += t.mono.str();
    } else {
      s += std::to_string(t.coef) + "*" + t.mono.str();
    }
  }
  return s;
}

}  // namespace cwl
