#include "doctest.h"

#include <algorithm>
#include <random>

#include "cwl/graded_ideal.hpp"
#include "cwl/groebner.hpp"
#include "test_util.hpp"

using namespace cwl;
using namespace cwl::testutil;

namespace {

// 2-minors of the generic 2x4 matrix [[x1..x4],[x5..x8]]
GradedIdeal two_by_four_minors(const PrimeField& f) {
  std::vector<Polynomial> gens;
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      auto a = Polynomial::variable(f, 8, i);
      auto b = Polynomial::variable(f, 8, j);
      auto c = Polynomial::variable(f, 8, 4 + i);
      auto d = Polynomial::variable(f, 8, 4 + j);
      gens.push_back(a * d - b * c);
    }
  }
  return GradedIdeal(f, 8, std::move(gens));
}

// the stable 11-generator lex gin of the minors ideal
MonomialIdeal minors_lex_gin() {
  return MonomialIdeal(
      8, {ev({2, 0, 0, 0, 0, 0, 0, 0}), ev({1, 1, 0, 0, 0, 0, 0, 0}),
          ev({1, 0, 1, 0, 0, 0, 0, 0}), ev({1, 0, 0, 1, 0, 0, 0, 0}),
          ev({1, 0, 0, 0, 1, 0, 0, 0}), ev({0, 2, 0, 0, 0, 0, 0, 0}),
          ev({0, 1, 2, 0, 0, 0, 0, 0}), ev({0, 1, 1, 1, 0, 0, 0, 0}),
          ev({0, 1, 1, 0, 1, 0, 0, 0}), ev({0, 1, 0, 3, 0, 0, 0, 0}),
          ev({0, 0, 4, 0, 0, 0, 0, 0})});
}

}  // namespace

TEST_CASE("division contract") {
  PrimeField f(31013);
  auto x = Polynomial::variable(f, 2, 1);
  auto y = Polynomial::variable(f, 2, 2);
  auto g1 = x * x;
  auto g2 = x * y - y * y;
  auto target = x * x * y + y * y * y;
  auto res = divide(target, {g1, g2}, MonomialOrder::degrevlex);
  // f = sum q_i g_i + r
  Polynomial acc = res.remainder;
  acc = acc + res.quotients[0] * g1 + res.quotients[1] * g2;
  CHECK(acc == target);
  // no remainder term divisible by a leading monomial
  for (const auto& t : res.remainder.terms()) {
    CHECK(!g1.leading_monomial().divides(t.mono));
    CHECK(!g2.leading_monomial().divides(t.mono));
  }
}

TEST_CASE("division contract on random inputs") {
  PrimeField f(31013);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 3);
    std::vector<Polynomial> g;
    for (int i = 0; i < 3; ++i) {
      auto p = random_polynomial(rng, f, n, 3, 3);
      if (!p.is_zero()) g.push_back(p);
    }
    if (g.empty()) continue;
    auto target = random_polynomial(rng, f, n, 5, 6);
    auto res = divide(target, g, MonomialOrder::degrevlex);
    Polynomial acc = res.remainder;
    for (std::size_t i = 0; i < g.size(); ++i) acc = acc + res.quotients[i] * g[i];
    CHECK(acc == target);
    for (const auto& t : res.remainder.terms()) {
      for (const auto& d : g) CHECK(!d.leading_monomial().divides(t.mono));
    }
  }
}

TEST_CASE("buchberger on hand examples") {
  PrimeField f(31013);
  auto x = Polynomial::variable(f, 2, 1);
  auto y = Polynomial::variable(f, 2, 2);

  // (x^2, xy - y^2) under lex gains y^3
  auto gb = buchberger({x * x, x * y - y * y}, MonomialOrder::lex);
  REQUIRE(gb.size() == 3);
  CHECK(gb[0] == x * x);
  CHECK(gb[1] == x * y - y * y);
  CHECK(gb[2] == y * y * y);

  // a principal ideal is its own reduced basis (made monic)
  auto one_gen = buchberger({(x + y).scaled(5)}, MonomialOrder::degrevlex);
  REQUIRE(one_gen.size() == 1);
  CHECK(one_gen[0] == x + y);
}

TEST_CASE("the six 2x4 minors are a degrevlex Groebner basis") {
  PrimeField f(31013);
  auto ideal = two_by_four_minors(f);
  auto gb = ideal.groebner_basis(MonomialOrder::degrevlex);
  CHECK(gb.size() == 6);
  for (const auto& g : gb) CHECK(g.degree() == 2);
  // every generator reduces to zero against the basis
  for (const auto& g : ideal.generators()) {
    CHECK(normal_form(g, gb, MonomialOrder::degrevlex).is_zero());
  }
}

TEST_CASE("Groebner basis membership and zero normal forms") {
  PrimeField f(31013);
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    std::vector<Polynomial> gens;
    for (int i = 0; i < 2; ++i) {
      auto p = random_polynomial(rng, f, n, 2, 3);
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    auto gb = buchberger(gens, MonomialOrder::degrevlex);
    // random combinations are members
    for (int k = 0; k < 5; ++k) {
      Polynomial member(f, n);
      for (const auto& g : gens) {
        member = member + g * random_polynomial(rng, f, n, 2, 2);
      }
      CHECK(normal_form(member, gb, MonomialOrder::degrevlex).is_zero());
    }
    // all S-polynomials of the basis reduce to zero
    for (std::size_t i = 0; i < gb.size(); ++i) {
      for (std::size_t j = i + 1; j < gb.size(); ++j) {
        auto s = s_polynomial(gb[i], gb[j], MonomialOrder::degrevlex);
        CHECK(normal_form(s, gb, MonomialOrder::degrevlex).is_zero());
      }
    }
  }
}

TEST_CASE("reduced basis is independent of generator order") {
  PrimeField f(31013);
  std::mt19937_64 rng(29);
  auto ideal = two_by_four_minors(f);
  auto gens = ideal.generators();
  auto reference = buchberger(gens, MonomialOrder::degrevlex);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    auto gb = buchberger(gens, MonomialOrder::degrevlex);
    CHECK(gb == reference);
  }
}

TEST_CASE("initial ideal examples") {
  PrimeField f(31013);
  auto x = Polynomial::variable(f, 2, 1);
  auto y = Polynomial::variable(f, 2, 2);
  // already-monomial ideal: in(I) = I
  GradedIdeal i(f, 2, {x * x, x * y, y * y * y});
  auto in = i.initial_ideal(MonomialOrder::degrevlex);
  CHECK(in == MonomialIdeal(2, {ev({2, 0}), ev({1, 1}), ev({0, 3})}));

  GradedIdeal j(f, 2, {x * x, x * y - y * y});
  CHECK(j.initial_ideal(MonomialOrder::lex) ==
        MonomialIdeal(2, {ev({2, 0}), ev({1, 1}), ev({0, 3})}));
}

TEST_CASE("graded pieces, Hilbert function, coordinate-change invariance") {
  PrimeField f(31013);
  auto ideal = two_by_four_minors(f);
  CHECK(graded_piece_dim(ideal, 2) == 6);

  auto phi = draw_coordinate_change(f, 8, 424242);
  auto moved = apply_coordinate_change(ideal, phi);
  for (int d = 0; d <= 6; ++d) {
    CHECK(graded_piece_dim(moved, d) == graded_piece_dim(ideal, d));
  }

  // Hilbert function of S/(x^2, xy): 1, 2, 1, 1, 1, ...
  auto x = Polynomial::variable(f, 2, 1);
  auto y = Polynomial::variable(f, 2, 2);
  GradedIdeal small(f, 2, {x * x, x * y});
  CHECK(hilbert_function(small, 4) == std::vector<long>{1, 2, 1, 1, 1});
}

TEST_CASE("coordinate change preserves Hilbert functions on random ideals") {
  PrimeField f(31013);
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    std::vector<Polynomial> gens;
    for (int i = 0; i < 2; ++i) {
      auto p = random_polynomial(rng, f, n, 2, 3);
      if (!p.is_zero() && p.is_homogeneous()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    GradedIdeal ideal(f, n, gens);
    auto phi = draw_coordinate_change(f, n, rng());
    auto moved = apply_coordinate_change(ideal, phi);
    CHECK(hilbert_function(moved, 5) == hilbert_function(ideal, 5));
  }
}

TEST_CASE("minimal generators and beta0") {
  PrimeField f(31013);
  auto ideal = two_by_four_minors(f);
  CHECK(beta0(ideal) == 6);
  auto hist = beta0_graded(ideal);
  REQUIRE(hist.size() == 1);
  CHECK(hist.at(2) == 6);

  // a redundant generating set collapses
  auto x = Polynomial::variable(f, 2, 1);
  auto y = Polynomial::variable(f, 2, 2);
  GradedIdeal redundant(f, 2, {x, x * x + y * y, y * y * y});
  CHECK(beta0(redundant) == 2);  // (x, y^2)

  auto j = GradedIdeal::from_monomials(f, minors_lex_gin());
  CHECK(beta0(j) == 11);
}

TEST_CASE("component ideals and truncations") {
  PrimeField f(31013);
  auto x = Polynomial::variable(f, 2, 1);
  auto y = Polynomial::variable(f, 2, 2);
  GradedIdeal ideal(f, 2, {x * x, y * y * y});

  // I_<2> = (x^2)
  auto comp2 = component_ideal(ideal, 2);
  CHECK(beta0(comp2) == 1);
  CHECK(graded_piece_dim(comp2, 2) == 1);

  // I_<3> = (x^3, x^2 y, y^3)
  auto comp3 = component_ideal(ideal, 3);
  CHECK(graded_piece_dim(comp3, 3) == 3);
  CHECK(beta0(comp3) == 3);

  // truncation I_>=3 equals I_<3> here
  auto tr = truncation(ideal, 3);
  CHECK(tr.initial_ideal(MonomialOrder::degrevlex) ==
        comp3.initial_ideal(MonomialOrder::degrevlex));

  // in(I_{>=d}) = in(I)_{>=d} on the minors ideal, d = 3
  auto minors = two_by_four_minors(f);
  auto lhs = truncation(minors, 3).initial_ideal(MonomialOrder::degrevlex);
  auto in_i = minors.initial_ideal(MonomialOrder::degrevlex);
  auto rhs =
      truncation(GradedIdeal::from_monomials(f, in_i), 3)
          .initial_ideal(MonomialOrder::degrevlex);
  CHECK(lhs == rhs);
}

TEST_CASE("dimension and height") {
  PrimeField f(31013);
  auto x = Polynomial::variable(f, 2, 1);
  auto y = Polynomial::variable(f, 2, 2);
  GradedIdeal small(f, 2, {x * x, x * y});
  CHECK(height(small) == 1);
  CHECK(quotient_dimension(small) == 1);

  std::vector<Polynomial> vars;
  for (int i = 1; i <= 4; ++i) vars.push_back(Polynomial::variable(f, 4, i));
  GradedIdeal maximal(f, 4, vars);
  CHECK(height(maximal) == 4);

  CHECK(height(two_by_four_minors(f)) == 3);

  // height is computed through the initial ideal, so it is invariant under
  // coordinate change for these examples
  auto phi = draw_coordinate_change(f, 2, 7);
  CHECK(height(apply_coordinate_change(small, phi)) == 1);
}

TEST_CASE("gin of simple ideals") {
  PrimeField f(31013);
  // principal linear ideal
  GradedIdeal lin(f, 3, {Polynomial::variable(f, 3, 1)});
  auto s = gin_sample(lin, MonomialOrder::degrevlex, 1, 3);
  CHECK(s.agreed);
  CHECK(s.ideal == MonomialIdeal(3, {ev({1, 0, 0})}));

  // complete intersection (x1, x2, x3^2): gin = itself
  auto x1 = Polynomial::variable(f, 3, 1);
  auto x2 = Polynomial::variable(f, 3, 2);
  auto x3 = Polynomial::variable(f, 3, 3);
  GradedIdeal ci(f, 3, {x1, x2, x3 * x3});
  auto s2 = gin_sample(ci, MonomialOrder::degrevlex, 2, 3);
  CHECK(s2.agreed);
  CHECK(s2.ideal == MonomialIdeal(3, {ev({1, 0, 0}), ev({0, 1, 0}),
                                      ev({0, 0, 2})}));
}

TEST_CASE("lex gin of the 2x4 minors ideal is the 11-generator stable ideal") {
  PrimeField f(31013);
  auto ideal = two_by_four_minors(f);
  auto s = gin_sample(ideal, MonomialOrder::lex, 1001, 2);
  CHECK(s.agreed);
  CHECK(s.ideal == minors_lex_gin());
  CHECK(is_stable(s.ideal));
}

TEST_CASE("gin sample preserves Hilbert functions") {
  PrimeField f(31013);
  auto x = Polynomial::variable(f, 2, 1);
  auto y = Polynomial::variable(f, 2, 2);
  GradedIdeal ideal(f, 2, {x * x, x * y - y * y});
  auto s = gin_sample(ideal, MonomialOrder::degrevlex, 5, 3);
  auto gin_ideal = GradedIdeal::from_monomials(f, s.ideal);
  CHECK(hilbert_function(gin_ideal, 6) == hilbert_function(ideal, 6));
}

TEST_CASE("budget exhaustion raises") {
  PrimeField f(31013);
  auto ideal = two_by_four_minors(f);
  Budget tiny(10);
  CHECK_THROWS_AS(buchberger(ideal.generators(), MonomialOrder::lex, &tiny),
                  BudgetExceeded);
}
