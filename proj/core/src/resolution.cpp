#include "cwl/resolution.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cwl/fp_matrix.hpp"
#include "cwl/poly_matrix.hpp"

namespace cwl {

namespace {

// ---------------------------------------------------------------------------
// Elements of graded free modules: terms (coef, monomial, component) kept
// strictly descending under a position-over-term order in which a smaller
// component index is greater.  With the syzygy components placed after the
// ambient ones this doubles as an elimination order.
// ---------------------------------------------------------------------------

struct MTerm {
  PrimeField::Scalar coef;
  ExponentVector mono;
  int comp;
};

struct MKey {
  ExponentVector mono;
  int comp;
};

struct MKeyGreater {
  MonomialOrder ord;
  bool operator()(const MKey& a, const MKey& b) const {
    if (a.comp != b.comp) return a.comp < b.comp;
    return compare(a.mono, b.mono, ord) == std::strong_ordering::greater;
  }
};

using MElem = std::vector<MTerm>;  // strictly descending, nonzero coefs
using MAcc = std::map<MKey, PrimeField::Scalar, MKeyGreater>;

MAcc to_acc(const MElem& e, MonomialOrder ord) {
  MAcc acc{MKeyGreater{ord}};
  for (const auto& t : e) acc.emplace(MKey{t.mono, t.comp}, t.coef);
  return acc;
}

MElem from_acc(const MAcc& acc) {
  MElem e;
  e.reserve(acc.size());
  for (const auto& [k, c] : acc) {
    if (c != 0) e.push_back(MTerm{c, k.mono, k.comp});
  }
  return e;
}

// degree of a homogeneous element, shifts indexed by component
int elem_degree(const MElem& e, const std::vector<int>& shifts) {
  return e.front().mono.degree() + shifts[e.front().comp];
}

MElem scaled(const MElem& e, const PrimeField& field, PrimeField::Scalar c) {
  MElem out;
  out.reserve(e.size());
  for (const auto& t : e) out.push_back(MTerm{field.mul(t.coef, c), t.mono, t.comp});
  return out;
}

MElem monic(const MElem& e, const PrimeField& field) {
  return scaled(e, field, field.inv(e.front().coef));
}

// acc -= c * x^m * g
void sub_multiple(MAcc& acc, const PrimeField& field, PrimeField::Scalar c,
                  const ExponentVector& m, const MElem& g) {
  for (const auto& t : g) {
    MKey key{t.mono * m, t.comp};
    auto delta = field.mul(c, t.coef);
    auto it = acc.find(key);
    if (it == acc.end()) {
      acc.emplace(key, field.neg(delta));
    } else {
      it->second = field.sub(it->second, delta);
      if (it->second == 0) acc.erase(it);
    }
  }
}

MElem normal_form(const MElem& e, const std::vector<MElem>& basis,
                  const PrimeField& field, MonomialOrder ord, Budget* budget) {
  MAcc rem{MKeyGreater{ord}};
  MAcc work = to_acc(e, ord);
  while (!work.empty()) {
    if (budget) budget->charge();
    auto [key, coef] = *work.begin();
    bool reduced = false;
    for (const auto& g : basis) {
      const MTerm& lt = g.front();
      if (lt.comp != key.comp || !lt.mono.divides(key.mono)) continue;
      auto q = key.mono.quotient(lt.mono);
      auto c = field.div(coef, lt.coef);
      sub_multiple(work, field, c, q, g);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.emplace(key, coef);
      work.erase(work.begin());
    }
  }
  return from_acc(rem);
}

MElem s_vector(const MElem& a, const MElem& b, const PrimeField& field,
               MonomialOrder ord) {
  const MTerm& la = a.front();
  const MTerm& lb = b.front();
  auto l = la.mono.lcm(lb.mono);
  MAcc acc{MKeyGreater{ord}};
  sub_multiple(acc, field, field.neg(field.inv(la.coef)),
               l.quotient(la.mono), a);
  sub_multiple(acc, field, field.inv(lb.coef), l.quotient(lb.mono), b);
  return from_acc(acc);
}

struct MPair {
  std::size_t i, j;
  ExponentVector lcm;
  int comp;
};

// pair-set update on arrival of basis element t; the product (coprimality)
// criterion is not valid for modules, so only the lcm-divisibility and chain
// criteria are applied
void update_pairs(std::vector<MPair>& pairs, const std::vector<MElem>& basis,
                  std::size_t t) {
  const MTerm& lt = basis[t].front();
  std::vector<MPair> fresh;
  for (std::size_t i = 0; i < t; ++i) {
    const MTerm& li = basis[i].front();
    if (li.comp != lt.comp) continue;
    fresh.push_back(MPair{i, t, li.mono.lcm(lt.mono), lt.comp});
  }
  // keep only pairs whose lcm is minimal among the fresh ones (first of ties)
  std::vector<MPair> kept;
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    bool drop = false;
    for (std::size_t b = 0; b < fresh.size() && !drop; ++b) {
      if (a == b) continue;
      if (fresh[b].lcm.divides(fresh[a].lcm) &&
          (!(fresh[b].lcm == fresh[a].lcm) || b < a)) {
        drop = true;
      }
    }
    if (!drop) kept.push_back(fresh[a]);
  }
  // chain criterion on the old pairs
  std::erase_if(pairs, [&](const MPair& p) {
    if (p.comp != lt.comp || !lt.mono.divides(p.lcm)) return false;
    auto l_it = basis[p.i].front().mono.lcm(lt.mono);
    auto l_jt = basis[p.j].front().mono.lcm(lt.mono);
    return !(l_it == p.lcm) && !(l_jt == p.lcm);
  });
  pairs.insert(pairs.end(), kept.begin(), kept.end());
}

std::vector<MElem> reduce_module_basis(std::vector<MElem> g,
                                       const PrimeField& field,
                                       MonomialOrder ord) {
  std::erase_if(g, [](const MElem& e) { return e.empty(); });
  for (auto& e : g) e = monic(e, field);
  std::vector<MElem> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b) continue;
      const MTerm& la = g[a].front();
      const MTerm& lb = g[b].front();
      if (lb.comp == la.comp && lb.mono.divides(la.mono) &&
          (!(la.mono == lb.mono) || b < a)) {
        redundant = true;
      }
    }
    if (!redundant) minimal.push_back(g[a]);
  }
  std::vector<MElem> out;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<MElem> others;
    for (std::size_t b = 0; b < minimal.size(); ++b) {
      if (b != a) others.push_back(minimal[b]);
    }
    out.push_back(others.empty()
                      ? minimal[a]
                      : monic(normal_form(minimal[a], others, field, ord,
                                          nullptr),
                              field));
  }
  MKeyGreater gt{ord};
  std::sort(out.begin(), out.end(), [&](const MElem& x, const MElem& y) {
    return gt(MKey{x.front().mono, x.front().comp},
              MKey{y.front().mono, y.front().comp});
  });
  return out;
}

// reduced module Groebner basis; shifts are used only for the degree-first
// pair selection (inputs are homogeneous)
std::vector<MElem> module_buchberger(std::vector<MElem> gens,
                                     const std::vector<int>& shifts,
                                     const PrimeField& field,
                                     MonomialOrder ord, Budget* budget) {
  std::erase_if(gens, [](const MElem& e) { return e.empty(); });
  if (gens.empty()) return {};
  std::vector<MElem> basis;
  std::vector<MPair> pairs;
  for (auto& g : gens) {
    basis.push_back(monic(g, field));
    update_pairs(pairs, basis, basis.size() - 1);
  }
  auto pair_degree = [&](const MPair& p) {
    return p.lcm.degree() + shifts[p.comp];
  };
  MKeyGreater gt{ord};
  while (!pairs.empty()) {
    auto it = std::min_element(
        pairs.begin(), pairs.end(), [&](const MPair& a, const MPair& b) {
          if (pair_degree(a) != pair_degree(b)) {
            return pair_degree(a) < pair_degree(b);
          }
          return !gt(MKey{a.lcm, a.comp}, MKey{b.lcm, b.comp}) &&
                 !(a.lcm == b.lcm && a.comp == b.comp);
        });
    MPair p = *it;
    pairs.erase(it);
    if (budget) budget->charge();
    MElem s = s_vector(basis[p.i], basis[p.j], field, ord);
    MElem r = normal_form(s, basis, field, ord, budget);
    if (r.empty()) continue;
    basis.push_back(monic(r, field));
    update_pairs(pairs, basis, basis.size() - 1);
  }
  return reduce_module_basis(std::move(basis), field, ord);
}

// Groebner basis of the syzygy module of homogeneous generators gens of a
// submodule of the free module with the given shifts; syzygies live in S^t
// with shifts deg(gens[i]).
std::vector<MElem> syzygy_basis(const std::vector<MElem>& gens,
                                const std::vector<int>& shifts,
                                const PrimeField& field, int arity,
                                MonomialOrder ord, Budget* budget) {
  const int r = static_cast<int>(shifts.size());
  const int t = static_cast<int>(gens.size());
  std::vector<int> ext_shifts = shifts;
  std::vector<MElem> ext;
  for (int i = 0; i < t; ++i) {
    MElem e = gens[i];
    e.push_back(MTerm{1, ExponentVector(arity), r + i});
    ext.push_back(std::move(e));
    ext_shifts.push_back(elem_degree(gens[i], shifts));
  }
  auto gb = module_buchberger(std::move(ext), ext_shifts, field, ord, budget);
  std::vector<MElem> syz;
  for (const auto& e : gb) {
    if (e.front().comp < r) continue;  // nonzero ambient part
    MElem s = e;
    for (auto& term : s) term.comp -= r;
    syz.push_back(std::move(s));
  }
  return syz;
}

// ---------------------------------------------------------------------------
// Minimal generators of a module from a Groebner basis: degree by degree,
// a K-basis of N_d modulo (mN)_d via incremental row reduction.
// ---------------------------------------------------------------------------

std::vector<PrimeField::Scalar> vectorize(const MElem& e, int d,
                                          const std::vector<int>& shifts,
                                          int arity, long width,
                                          const std::vector<long>& offsets,
                                          const std::map<std::pair<int, int>,
                                                         std::map<ExponentVector,
                                                                  long,
                                                                  MonomialLess>>&
                                              index) {
  std::vector<PrimeField::Scalar> row(width, 0);
  for (const auto& t : e) {
    const auto& m = index.at({t.comp, d - shifts[t.comp]});
    row[offsets[t.comp] + m.at(t.mono)] = t.coef;
  }
  return row;
}

std::vector<MElem> module_min_gens(const std::vector<MElem>& gb,
                                   const std::vector<int>& shifts,
                                   const PrimeField& field, int arity,
                                   MonomialOrder ord, Budget* budget) {
  if (gb.empty()) return {};
  int dmin = elem_degree(gb.front(), shifts);
  int dmax = dmin;
  for (const auto& e : gb) {
    dmin = std::min(dmin, elem_degree(e, shifts));
    dmax = std::max(dmax, elem_degree(e, shifts));
  }
  const int ncomp = static_cast<int>(shifts.size());
  std::vector<MElem> out;
  for (int d = dmin; d <= dmax; ++d) {
    // index the module monomials of degree d
    std::map<std::pair<int, int>, std::map<ExponentVector, long, MonomialLess>>
        index;
    std::vector<long> offsets(ncomp, 0);
    long width = 0;
    for (int c = 0; c < ncomp; ++c) {
      offsets[c] = width;
      int rd = d - shifts[c];
      if (rd < 0) continue;
      std::map<ExponentVector, long, MonomialLess> m{MonomialLess{ord}};
      long k = 0;
      for_each_monomial(arity, rd, [&](const ExponentVector& mono) {
        m.emplace(mono, k++);
      });
      width += k;
      index.emplace(std::make_pair(c, rd), std::move(m));
    }
    if (width == 0) continue;
    RowSpace span(field, static_cast<int>(width));
    // (mN)_d: proper monomial multiples of lower-degree basis elements
    for (const auto& e : gb) {
      int de = elem_degree(e, shifts);
      if (de >= d) continue;
      for_each_monomial(arity, d - de, [&](const ExponentVector& a) {
        if (budget) budget->charge();
        MAcc acc{MKeyGreater{ord}};
        sub_multiple(acc, field, field.reduce(-1), a, e);
        span.insert(vectorize(from_acc(acc), d, shifts, arity, width, offsets,
                              index));
      });
    }
    for (const auto& e : gb) {
      if (elem_degree(e, shifts) != d) continue;
      if (span.insert(vectorize(e, d, shifts, arity, width, offsets, index))) {
        out.push_back(e);
      }
    }
  }
  return out;  // ascending by degree, deterministic within a degree
}

// ---------------------------------------------------------------------------

HomogeneousMatrix compose(const HomogeneousMatrix& a,
                          const HomogeneousMatrix& b) {
  const PrimeField field = a.field();
  const int arity = a.arity();
  std::vector<std::vector<Polynomial>> prod(
      a.rows(), std::vector<Polynomial>(b.cols(), Polynomial(field, arity)));
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      for (int k = 0; k < a.cols(); ++k) {
        prod[i][j] = prod[i][j] + a.at(i, k) * b.at(k, j);
      }
    }
  }
  return HomogeneousMatrix(a.row_degrees(), b.col_degrees(), std::move(prod));
}

bool is_zero_matrix(const HomogeneousMatrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_zero()) return false;
    }
  }
  return true;
}

PolyGrid to_grid(const HomogeneousMatrix& m) {
  PolyGrid g;
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<Polynomial> row;
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    g.push_back(std::move(row));
  }
  return g;
}

}  // namespace

GradedFreeComplex::GradedFreeComplex(std::vector<std::vector<int>> shifts,
                                     std::vector<HomogeneousMatrix> diffs)
    : shifts_(std::move(shifts)), diffs_(std::move(diffs)) {
  if (diffs_.empty() || shifts_.size() != diffs_.size() + 1) {
    throw std::invalid_argument("GradedFreeComplex: shape mismatch");
  }
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    if (diffs_[k].row_degrees() != shifts_[k] ||
        diffs_[k].col_degrees() != shifts_[k + 1]) {
      throw std::invalid_argument("GradedFreeComplex: shift mismatch");
    }
  }
  for (std::size_t k = 0; k + 1 < diffs_.size(); ++k) {
    if (!is_zero_matrix(compose(diffs_[k], diffs_[k + 1]))) {
      throw std::invalid_argument(
          "GradedFreeComplex: consecutive differentials do not compose to "
          "zero");
    }
  }
}

bool operator==(const GradedFreeComplex& a, const GradedFreeComplex& b) {
  return a.shifts_ == b.shifts_ && a.diffs_ == b.diffs_;
}

GradedFreeComplex minimal_resolution(const GradedIdeal& ideal,
                                     MonomialOrder ord, Budget* budget) {
  if (ideal.is_zero()) {
    throw std::invalid_argument("minimal_resolution: zero ideal");
  }
  const PrimeField field = ideal.field();
  const int arity = ideal.arity();

  auto mingens = minimal_generators(ideal);
  std::sort(mingens.begin(), mingens.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return compare(a.leading_monomial(), b.leading_monomial(), ord) ==
                     std::strong_ordering::greater;
            });

  std::vector<std::vector<int>> shifts;
  std::vector<HomogeneousMatrix> diffs;
  shifts.push_back({0});

  // current generators as elements of the free module F_{k-1}
  std::vector<MElem> gens;
  std::vector<int> gen_degrees;
  for (const auto& g : mingens) {
    MElem e;
    const Polynomial sorted = g.with_order(ord);
    for (const auto& t : sorted.terms()) {
      e.push_back(MTerm{t.coef, t.mono, 0});
    }
    gens.push_back(std::move(e));
    gen_degrees.push_back(g.degree());
  }
  {
    std::vector<std::vector<Polynomial>> entries(1);
    for (const auto& g : mingens) entries[0].push_back(g);
    shifts.push_back(gen_degrees);
    diffs.push_back(HomogeneousMatrix({0}, gen_degrees, std::move(entries)));
  }

  for (int step = 1; step <= arity; ++step) {
    // copies: the push_back below may reallocate `shifts`
    const std::vector<int> ambient = shifts[step - 1];
    auto syz_gb = syzygy_basis(gens, ambient, field, arity, ord, budget);
    if (syz_gb.empty()) break;
    const std::vector<int> syz_shifts = shifts[step];
    auto next =
        module_min_gens(syz_gb, syz_shifts, field, arity, ord, budget);
    if (next.empty()) break;
    std::vector<int> degrees;
    for (const auto& e : next) degrees.push_back(elem_degree(e, syz_shifts));
    std::vector<std::vector<Polynomial>> entries(
        syz_shifts.size(),
        std::vector<Polynomial>(next.size(), Polynomial(field, arity, ord)));
    for (std::size_t col = 0; col < next.size(); ++col) {
      for (const auto& t : next[col]) {
        entries[t.comp][col] =
            entries[t.comp][col] + Polynomial::term(field, t.coef, t.mono, ord);
      }
    }
    shifts.push_back(degrees);
    diffs.push_back(
        HomogeneousMatrix(syz_shifts, degrees, std::move(entries)));
    gens = std::move(next);
  }
  return GradedFreeComplex(std::move(shifts), std::move(diffs));
}

GradedFreeComplex ideal_resolution(const GradedFreeComplex& f) {
  if (f.length() < 2) {
    throw std::invalid_argument(
        "ideal_resolution: resolution has no syzygies to keep");
  }
  std::vector<std::vector<int>> shifts;
  std::vector<HomogeneousMatrix> diffs;
  for (int k = 1; k <= f.length(); ++k) shifts.push_back(f.shifts(k));
  for (int k = 2; k <= f.length(); ++k) diffs.push_back(f.differential(k));
  return GradedFreeComplex(std::move(shifts), std::move(diffs));
}

BettiTable betti_table(const GradedFreeComplex& f) {
  BettiTable t(BettiTable::Subject::quotient);
  for (int k = 0; k <= f.length(); ++k) {
    for (int s : f.shifts(k)) t.add(k, s, 1);
  }
  return t;
}

int regularity(const GradedFreeComplex& f) {
  return betti_table(f).regularity();
}

GradedFreeComplex linear_part(const GradedFreeComplex& f) {
  std::vector<std::vector<int>> shifts;
  std::vector<HomogeneousMatrix> diffs;
  for (int k = 0; k <= f.length(); ++k) shifts.push_back(f.shifts(k));
  for (int k = 1; k <= f.length(); ++k) {
    diffs.push_back(linearize(f.differential(k)));
  }
  return GradedFreeComplex(std::move(shifts), std::move(diffs));
}

bool is_acyclic(const GradedFreeComplex& f, Budget* budget) {
  const int len = f.length();
  // rank conditions first: they are cheap and fail fast
  std::vector<int> ranks(len + 2, 0);
  for (int k = 1; k <= len; ++k) {
    ranks[k] = grid_rank(to_grid(f.differential(k)));
  }
  for (int k = 1; k <= len; ++k) {
    const int rank_fk = static_cast<int>(f.shifts(k).size());
    if (ranks[k] + ranks[k + 1] != rank_fk) return false;
  }
  // height conditions, hardest (largest k) first for early exit
  for (int k = len; k >= 1; --k) {
    if (ranks[k] == 0) continue;  // unit ideal of 0-minors
    auto minors = grid_minors(to_grid(f.differential(k)), ranks[k], budget);
    std::vector<Polynomial> nonzero;
    for (auto& m : minors) {
      if (!m.is_zero()) nonzero.push_back(m.monic());
    }
    std::sort(nonzero.begin(), nonzero.end(),
              [](const Polynomial& a, const Polynomial& b) {
                return a.str() < b.str();
              });
    nonzero.erase(std::unique(nonzero.begin(), nonzero.end()), nonzero.end());
    GradedIdeal minor_ideal(f.field(), f.arity(), std::move(nonzero));
    if (height(minor_ideal, budget) < k) return false;
  }
  return true;
}

}  // namespace cwl
