#include "cwl/graded_ideal.hpp"

#include <algorithm>
#include <random>

#include "cwl/fp_matrix.hpp"

namespace cwl {

GradedIdeal::GradedIdeal(PrimeField field, int arity,
                         std::vector<Polynomial> generators)
    : field_(field), arity_(arity), gens_(std::move(generators)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_) {
    if (!(g.field() == field_) || g.arity() != arity_) {
      throw std::invalid_argument("GradedIdeal: generator ring mismatch");
    }
    if (g.is_zero()) {
      throw std::invalid_argument("GradedIdeal: zero generator");
    }
    if (!g.is_homogeneous()) {
      throw std::invalid_argument("GradedIdeal: inhomogeneous generator");
    }
  }
}

GradedIdeal GradedIdeal::from_monomials(PrimeField field,
                                        const MonomialIdeal& ideal) {
  std::vector<Polynomial> gens;
  for (const auto& m : ideal.generators()) {
    gens.push_back(Polynomial::term(field, 1, m));
  }
  return GradedIdeal(field, ideal.arity(), std::move(gens));
}

const std::vector<Polynomial>& GradedIdeal::groebner_basis(
    MonomialOrder ord, Budget* budget) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->bases.find(ord);
    if (it != cache_->bases.end()) return it->second;
  }
  if (is_zero()) throw std::domain_error("groebner_basis: zero ideal");
  // compute outside the lock, publish once
  auto basis = buchberger(gens_, ord, budget);
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->bases.try_emplace(ord, std::move(basis)).first->second;
}

MonomialIdeal GradedIdeal::initial_ideal(MonomialOrder ord,
                                         Budget* budget) const {
  std::vector<ExponentVector> lead;
  for (const auto& g : groebner_basis(ord, budget)) {
    lead.push_back(g.leading_monomial());
  }
  return MonomialIdeal(arity_, std::move(lead));
}

RandomCoordinateChange identity_change(const PrimeField& /*field*/,
                                       int arity) {
  std::vector<std::vector<PrimeField::Scalar>> m(
      arity, std::vector<PrimeField::Scalar>(arity, 0));
  for (int i = 0; i < arity; ++i) m[i][i] = 1;
  return RandomCoordinateChange{std::move(m), 0};
}

RandomCoordinateChange draw_coordinate_change(const PrimeField& field,
                                              int arity, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(
      0, field.characteristic() - 1);
  for (;;) {
    FpMatrix m(field, arity, arity);
    for (int i = 0; i < arity; ++i) {
      for (int j = 0; j < arity; ++j) m.at(i, j) = dist(rng);
    }
    if (!m.is_invertible()) continue;
    std::vector<std::vector<PrimeField::Scalar>> rows(
        arity, std::vector<PrimeField::Scalar>(arity));
    for (int i = 0; i < arity; ++i) {
      for (int j = 0; j < arity; ++j) rows[i][j] = m.at(i, j);
    }
    return RandomCoordinateChange{std::move(rows), seed};
  }
}

GradedIdeal apply_coordinate_change(const GradedIdeal& ideal,
                                    const RandomCoordinateChange& phi) {
  const PrimeField field = ideal.field();
  const int n = ideal.arity();
  if (static_cast<int>(phi.matrix.size()) != n) {
    throw std::invalid_argument("coordinate change: size mismatch");
  }
  std::vector<Polynomial> images;
  for (int i = 0; i < n; ++i) {
    Polynomial li(field, n);
    for (int j = 0; j < n; ++j) {
      li = li + Polynomial::variable(field, n, j + 1).scaled(phi.matrix[i][j]);
    }
    images.push_back(li);
  }
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    gens.push_back(g.substitute(images));
  }
  return GradedIdeal(field, n, std::move(gens));
}

namespace {

// fixed indexing of the degree-d monomials (descending degrevlex)
std::vector<ExponentVector> monomial_basis(int arity, int d) {
  std::vector<ExponentVector> basis;
  for_each_monomial(arity, d, [&](const ExponentVector& m) {
    basis.push_back(m);
  });
  std::sort(basis.begin(), basis.end(),
            [](const ExponentVector& a, const ExponentVector& b) {
              return compare(a, b, MonomialOrder::degrevlex) ==
                     std::strong_ordering::greater;
            });
  return basis;
}

std::vector<PrimeField::Scalar> to_vector(
    const Polynomial& p, const std::map<ExponentVector, int, MonomialGreater>&
                             index, std::size_t width) {
  std::vector<PrimeField::Scalar> v(width, 0);
  for (const auto& t : p.terms()) {
    v[index.at(t.mono)] = t.coef;
  }
  return v;
}

struct DegreeBasis {
  std::vector<ExponentVector> monos;
  std::map<ExponentVector, int, MonomialGreater> index{
      MonomialGreater{MonomialOrder::degrevlex}};
};

DegreeBasis degree_basis(int arity, int d) {
  DegreeBasis b;
  b.monos = monomial_basis(arity, d);
  for (std::size_t i = 0; i < b.monos.size(); ++i) {
    b.index.emplace(b.monos[i], static_cast<int>(i));
  }
  return b;
}

}  // namespace

long graded_piece_dim(const GradedIdeal& ideal, int d) {
  if (d < 0) throw std::invalid_argument("graded_piece_dim: negative degree");
  if (ideal.is_zero()) return 0;
  return ideal.initial_ideal(MonomialOrder::degrevlex).monomial_count(d);
}

std::vector<Polynomial> minimal_generators(const GradedIdeal& ideal) {
  if (ideal.is_zero()) {
    throw std::domain_error("minimal_generators: zero ideal");
  }
  const auto& gb = ideal.groebner_basis(MonomialOrder::degrevlex);
  int dmin = gb.front().degree(), dmax = gb.front().degree();
  for (const auto& g : gb) {
    dmin = std::min(dmin, g.degree());
    dmax = std::max(dmax, g.degree());
  }
  std::vector<Polynomial> result;
  for (int d = dmin; d <= dmax; ++d) {
    DegreeBasis basis = degree_basis(ideal.arity(), d);
    RowSpace rs(ideal.field(), static_cast<int>(basis.monos.size()));
    // span of (m I)_d: proper monomial multiples of basis elements
    for (const auto& g : gb) {
      const int k = d - g.degree();
      if (k <= 0) continue;
      for_each_monomial(ideal.arity(), k, [&](const ExponentVector& a) {
        rs.insert(to_vector(g.times_term(1, a), basis.index,
                            basis.monos.size()));
      });
    }
    for (const auto& g : gb) {
      if (g.degree() != d) continue;
      if (rs.insert(to_vector(g, basis.index, basis.monos.size()))) {
        result.push_back(g);
      }
    }
  }
  return result;
}

std::map<int, long> beta0_graded(const GradedIdeal& ideal) {
  std::map<int, long> hist;
  for (const auto& g : minimal_generators(ideal)) ++hist[g.degree()];
  return hist;
}

long beta0(const GradedIdeal& ideal) {
  long total = 0;
  for (const auto& [d, k] : beta0_graded(ideal)) total += k;
  return total;
}

GradedIdeal component_ideal(const GradedIdeal& ideal, int d) {
  if (d < 0) throw std::invalid_argument("component_ideal: negative degree");
  if (ideal.is_zero()) return GradedIdeal::zero(ideal.field(), ideal.arity());
  const auto& gb = ideal.groebner_basis(MonomialOrder::degrevlex);
  DegreeBasis basis = degree_basis(ideal.arity(), d);
  RowSpace rs(ideal.field(), static_cast<int>(basis.monos.size()));
  for (const auto& g : gb) {
    const int k = d - g.degree();
    if (k < 0) continue;
    for_each_monomial(ideal.arity(), k, [&](const ExponentVector& a) {
      rs.insert(to_vector(g.times_term(1, a), basis.index,
                          basis.monos.size()));
    });
  }
  std::vector<Polynomial> gens;
  for (const auto& row : rs.basis_rows()) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] != 0) terms.push_back(Term{row[i], basis.monos[i]});
    }
    gens.emplace_back(ideal.field(), ideal.arity(), std::move(terms));
  }
  return GradedIdeal(ideal.field(), ideal.arity(), std::move(gens));
}

GradedIdeal truncation(const GradedIdeal& ideal, int d) {
  if (d < 0) throw std::invalid_argument("truncation: negative degree");
  if (ideal.is_zero()) return ideal;
  std::vector<Polynomial> gens;
  for (const auto& g : minimal_generators(ideal)) {
    const int k = std::max(0, d - g.degree());
    for_each_monomial(ideal.arity(), k, [&](const ExponentVector& a) {
      gens.push_back(g.times_term(1, a));
    });
  }
  return GradedIdeal(ideal.field(), ideal.arity(), std::move(gens));
}

std::vector<long> hilbert_function(const GradedIdeal& ideal, int d_max) {
  std::vector<long> h;
  for (int d = 0; d <= d_max; ++d) {
    h.push_back(monomial_space_dim(ideal.arity(), d) -
                graded_piece_dim(ideal, d));
  }
  return h;
}

int quotient_dimension(const GradedIdeal& ideal, Budget* budget) {
  if (ideal.is_zero()) return ideal.arity();
  return ideal.initial_ideal(MonomialOrder::degrevlex, budget)
      .quotient_dimension();
}

int height(const GradedIdeal& ideal, Budget* budget) {
  return ideal.arity() - quotient_dimension(ideal, budget);
}

namespace {
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace

GinSample gin_sample(const GradedIdeal& ideal, MonomialOrder ord,
                     std::uint64_t seed, int trials, Budget* budget) {
  if (trials < 2) throw std::invalid_argument("gin_sample: trials < 2");
  if (ideal.is_zero()) throw std::domain_error("gin_sample: zero ideal");
  std::vector<MonomialIdeal> samples;
  for (int t = 0; t < trials; ++t) {
    auto phi = draw_coordinate_change(ideal.field(), ideal.arity(),
                                      mix_seed(seed, t));
    auto moved = apply_coordinate_change(ideal, phi);
    samples.push_back(moved.initial_ideal(ord, budget));
  }
  // majority vote
  std::size_t best = 0;
  int best_count = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    int count = 0;
    for (const auto& s : samples) {
      if (s == samples[i]) ++count;
    }
    if (count > best_count) {
      best_count = count;
      best = i;
    }
  }
  return GinSample{samples[best],
                   best_count == static_cast<int>(samples.size())};
}

}  // namespace cwl
