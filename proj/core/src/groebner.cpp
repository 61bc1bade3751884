#include "cwl/groebner.hpp"

#include <algorithm>
#include <list>
#include <map>

namespace cwl {

namespace {

// map-based accumulator for repeated tail subtraction
using Acc = std::map<ExponentVector, PrimeField::Scalar, MonomialGreater>;

Acc to_acc(const Polynomial& f, MonomialOrder ord) {
  Acc acc{MonomialGreater{ord}};
  for (const auto& t : f.terms()) acc.emplace(t.mono, t.coef);
  return acc;
}

Polynomial from_acc(const PrimeField& field, int arity, MonomialOrder ord,
                    const Acc& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc) {
    if (c != 0) terms.push_back(Term{c, m});
  }
  Polynomial r(field, arity, ord);
  return Polynomial(field, arity, std::move(terms), ord);
}

// acc -= c * x^m * g
void sub_multiple(Acc& acc, const PrimeField& field, PrimeField::Scalar c,
                  const ExponentVector& m, const Polynomial& g) {
  for (const auto& t : g.terms()) {
    ExponentVector mono = t.mono * m;
    auto it = acc.find(mono);
    auto delta = field.mul(c, t.coef);
    if (it == acc.end()) {
      acc.emplace(mono, field.neg(delta));
    } else {
      it->second = field.sub(it->second, delta);
      if (it->second == 0) acc.erase(it);
    }
  }
}

}  // namespace

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& g,
                      MonomialOrder ord) {
  if (g.empty()) throw std::invalid_argument("divide: empty divisor list");
  for (const auto& gi : g) {
    if (gi.is_zero()) throw std::invalid_argument("divide: zero divisor");
  }
  const PrimeField field = f.field();
  const int arity = f.arity();
  std::vector<Polynomial> sorted;
  sorted.reserve(g.size());
  for (const auto& gi : g) sorted.push_back(gi.with_order(ord));

  std::vector<Polynomial> quotients(g.size(), Polynomial(field, arity, ord));
  Acc rem{MonomialGreater{ord}};
  Acc work = to_acc(f.with_order(ord), ord);
  while (!work.empty()) {
    auto [mono, coef] = *work.begin();
    bool reduced = false;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (!sorted[i].leading_monomial().divides(mono)) continue;
      auto q = mono.quotient(sorted[i].leading_monomial());
      auto c = field.div(coef, sorted[i].leading_coef());
      quotients[i] = quotients[i] + Polynomial::term(field, c, q, ord);
      sub_multiple(work, field, c, q, sorted[i]);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.emplace(mono, coef);
      work.erase(work.begin());
    }
  }
  return DivisionResult{std::move(quotients), from_acc(field, arity, ord, rem)};
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g,
                       MonomialOrder ord, Budget* budget) {
  const PrimeField field = f.field();
  const int arity = f.arity();
  Acc rem{MonomialGreater{ord}};
  Acc work = to_acc(f.with_order(ord), ord);
  while (!work.empty()) {
    if (budget) budget->charge();
    auto [mono, coef] = *work.begin();
    bool reduced = false;
    for (const auto& gi : g) {
      if (!gi.leading_monomial().divides(mono)) continue;
      auto q = mono.quotient(gi.leading_monomial());
      auto c = field.div(coef, gi.leading_coef());
      sub_multiple(work, field, c, q, gi);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.emplace(mono, coef);
      work.erase(work.begin());
    }
  }
  return from_acc(field, arity, ord, rem);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        MonomialOrder ord) {
  const PrimeField field = f.field();
  const Polynomial ff = f.with_order(ord), gg = g.with_order(ord);
  auto l = ff.leading_monomial().lcm(gg.leading_monomial());
  auto mf = l.quotient(ff.leading_monomial());
  auto mg = l.quotient(gg.leading_monomial());
  return ff.times_term(field.inv(ff.leading_coef()), mf) -
         gg.times_term(field.inv(gg.leading_coef()), mg);
}

namespace {

struct Pair {
  std::size_t i, j;
  ExponentVector lcm;
};

// Gebauer-Moeller UPDATE of the pair set on arrival of basis element t
void update_pairs(std::vector<Pair>& pairs,
                  const std::vector<Polynomial>& basis, std::size_t t,
                  MonomialOrder /*ord*/) {
  const ExponentVector& lt = basis[t].leading_monomial();
  std::list<Pair> c;
  for (std::size_t i = 0; i < t; ++i) {
    c.push_back(Pair{i, t, basis[i].leading_monomial().lcm(lt)});
  }
  std::vector<Pair> d;
  while (!c.empty()) {
    Pair p = c.front();
    c.pop_front();
    const bool coprime = basis[p.i].leading_monomial().coprime(lt);
    auto divides_p = [&](const Pair& q) { return q.lcm.divides(p.lcm); };
    if (coprime || (std::none_of(c.begin(), c.end(), divides_p) &&
                    std::none_of(d.begin(), d.end(), divides_p))) {
      d.push_back(p);
    }
  }
  std::erase_if(d, [&](const Pair& p) {
    return basis[p.i].leading_monomial().coprime(lt);
  });
  // chain criterion on the old pairs
  std::erase_if(pairs, [&](const Pair& p) {
    if (!lt.divides(p.lcm)) return false;
    auto l_it = basis[p.i].leading_monomial().lcm(lt);
    auto l_jt = basis[p.j].leading_monomial().lcm(lt);
    return !(l_it == p.lcm) && !(l_jt == p.lcm);
  });
  pairs.insert(pairs.end(), d.begin(), d.end());
}

}  // namespace

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g,
                                     MonomialOrder ord) {
  std::erase_if(g, [](const Polynomial& p) { return p.is_zero(); });
  for (auto& p : g) p = p.with_order(ord).monic();
  // minimalize: drop elements whose leading monomial is divisible by another's
  std::vector<Polynomial> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b) continue;
      const auto& la = g[a].leading_monomial();
      const auto& lb = g[b].leading_monomial();
      if (lb.divides(la) && (!(la == lb) || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[a]);
  }
  // tail-reduce each against the rest
  std::vector<Polynomial> out;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial> others;
    for (std::size_t b = 0; b < minimal.size(); ++b) {
      if (b != a) others.push_back(minimal[b]);
    }
    out.push_back(others.empty()
                      ? minimal[a]
                      : normal_form(minimal[a], others, ord).monic());
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& x,
                                        const Polynomial& y) {
    return compare(x.leading_monomial(), y.leading_monomial(), ord) ==
           std::strong_ordering::greater;
  });
  return out;
}

std::vector<Polynomial> buchberger(std::vector<Polynomial> gens,
                                   MonomialOrder ord, Budget* budget) {
  std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
  if (gens.empty()) {
    throw std::invalid_argument("buchberger: zero ideal");
  }
  std::vector<Polynomial> basis;
  std::vector<Pair> pairs;
  for (const auto& g : gens) {
    basis.push_back(g.with_order(ord).monic());
    update_pairs(pairs, basis, basis.size() - 1, ord);
  }
  while (!pairs.empty()) {
    // normal selection: smallest lcm degree first (degree-by-degree
    // processing, essential for lex), ties broken by the order
    auto it = std::min_element(
        pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
          if (a.lcm.degree() != b.lcm.degree()) {
            return a.lcm.degree() < b.lcm.degree();
          }
          return compare(a.lcm, b.lcm, ord) == std::strong_ordering::less;
        });
    Pair p = *it;
    pairs.erase(it);
    if (budget) budget->charge();
    Polynomial s = s_polynomial(basis[p.i], basis[p.j], ord);
    Polynomial r = normal_form(s, basis, ord, budget);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    update_pairs(pairs, basis, basis.size() - 1, ord);
  }
  return reduce_basis(std::move(basis), ord);
}

}  // namespace cwl
