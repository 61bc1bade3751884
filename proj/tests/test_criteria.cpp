#include "doctest.h"

#include <random>
#include <vector>

#include "cwl/criteria.hpp"
#include "cwl/monomial_ideal.hpp"
#include "cwl/simplicial_complex.hpp"
#include "test_util.hpp"

using namespace cwl;
using namespace cwl::testutil;

namespace {

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

GradedIdeal variable_ideal(const PrimeField& f, int n) {
  std::vector<Polynomial> vars;
  for (int i = 1; i <= n; ++i) vars.push_back(Polynomial::variable(f, n, i));
  return GradedIdeal(f, n, std::move(vars));
}

// (x^2, xy, y^3) in two variables
GradedIdeal mixed_stable_ideal(const PrimeField& f) {
  return GradedIdeal(f, 2,
                     {poly(f, {{1, {2, 0}}}), poly(f, {{1, {1, 1}}}),
                      poly(f, {{1, {0, 3}}})});
}

// (x1^2, x2^2) in `n` variables
GradedIdeal two_squares(const PrimeField& f, int n) {
  auto x1 = Polynomial::variable(f, n, 1);
  auto x2 = Polynomial::variable(f, n, 2);
  return GradedIdeal(f, n, {x1 * x1, x2 * x2});
}

GradedIdeal rp2_ideal(const PrimeField& f) {
  return GradedIdeal::from_monomials(f, stanley_reisner(rp2_triangulation()));
}

}  // namespace

TEST_CASE("linear resolution predicate") {
  PrimeField f(31013);
  CHECK(has_linear_resolution(variable_ideal(f, 3), 1));
  CHECK(has_linear_resolution(two_by_four_minors(f), 2));
  // the Koszul relation of the two squares lives in degree 4
  CHECK_FALSE(has_linear_resolution(two_squares(f, 2), 2));
  // generated in mixed degrees: no single d applies
  CHECK_THROWS_AS(has_linear_resolution(mixed_stable_ideal(f), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(has_linear_resolution(GradedIdeal::zero(f, 2), 1),
                  std::invalid_argument);
}

TEST_CASE("initial-ideal test is one-directional") {
  PrimeField f(31013);

  SUBCASE("stable monomial ideal certifies itself") {
    auto v = test_cwl_initial(mixed_stable_ideal(f));
    CHECK(v.decision == CwlDecision::yes);
    CHECK(v.witness["beta0_ideal"] == 3);
    CHECK(v.witness["beta0_initial"] == 3);
    CHECK_FALSE(v.probabilistic);
  }

  SUBCASE("non-stable initial ideal gives no information") {
    // (x2, x3) in three variables: stability fails at x2 already
    auto i = GradedIdeal(f, 3, {Polynomial::variable(f, 3, 2),
                                Polynomial::variable(f, 3, 3)});
    auto v = test_cwl_initial(i);
    CHECK(v.decision == CwlDecision::inconclusive);
    CHECK(v.witness.contains("stability_witness"));
  }

  SUBCASE("stable lex initial ideal with extra generators stays open") {
    // after a random coordinate change the lex initial ideal of the minors
    // ideal is stable with 11 generators, yet the ideal itself has 6 and is
    // componentwise linear: the converse of the criterion genuinely fails,
    // so the verdict must not be "no"
    auto i = two_by_four_minors(f);
    auto moved = apply_coordinate_change(i, draw_coordinate_change(f, 8, 1));
    auto v = test_cwl_initial(moved, MonomialOrder::lex);
    CHECK(v.decision == CwlDecision::inconclusive);
    CHECK(v.witness["beta0_ideal"] == 6);
    CHECK(v.witness["beta0_initial"] == 11);
  }
}

TEST_CASE("generic initial ideal test") {
  PrimeField f(31013);

  SUBCASE("minors ideal is componentwise linear") {
    auto v = test_cwl_gin(two_by_four_minors(f));
    CHECK(v.decision == CwlDecision::yes);
    CHECK(v.probabilistic);
    CHECK(v.witness["beta0_ideal"] == 6);
    CHECK(v.witness["beta0_gin"] == 6);
  }

  SUBCASE("complete intersection of two quadrics is not") {
    auto v = test_cwl_gin(two_squares(f, 3));
    CHECK(v.decision == CwlDecision::no);
  }

  SUBCASE("projective plane ideal depends on the characteristic") {
    // over the large field the sampled gin is (x1,x2,x3)^3 with beta_0 = 10,
    // matching the ideal, so the test certifies componentwise linearity
    auto big = test_cwl_gin(rp2_ideal(f));
    CHECK(big.decision == CwlDecision::yes);
    CHECK(big.witness["agreed"] == true);
    // F_2 and F_3 are too small for generic coordinate changes: the sampled
    // initial ideals never stabilize, and the honest verdict is inconclusive
    // (the characteristic dependence is decided by the deterministic methods
    // below)
    auto small2 = test_cwl_gin(rp2_ideal(PrimeField(2)));
    CHECK(small2.decision == CwlDecision::inconclusive);
    auto small3 = test_cwl_gin(rp2_ideal(PrimeField(3)));
    CHECK(small3.decision == CwlDecision::inconclusive);
    // deterministic verdicts: not componentwise linear in characteristic 2,
    // componentwise linear in characteristic 3
    CHECK(test_cwl_linear_part(rp2_ideal(PrimeField(2))).decision ==
          CwlDecision::no);
    CHECK(test_cwl_linear_part(rp2_ideal(PrimeField(3))).decision ==
          CwlDecision::yes);
  }
}

TEST_CASE("linear-part acyclicity test") {
  PrimeField f(31013);

  SUBCASE("one quadric and one linear form") {
    auto i = GradedIdeal(f, 2, {poly(f, {{1, {2, 0}}}), poly(f, {{1, {0, 1}}})});
    CHECK(test_cwl_linear_part(i).decision == CwlDecision::yes);
  }

  SUBCASE("mixed-degree stable ideal") {
    CHECK(test_cwl_linear_part(mixed_stable_ideal(f)).decision ==
          CwlDecision::yes);
  }

  SUBCASE("two quadrics: the linear part of Koszul collapses") {
    auto v = test_cwl_linear_part(two_squares(f, 2));
    CHECK(v.decision == CwlDecision::no);
    CHECK(v.witness["linear_part_acyclic"] == false);
  }

  SUBCASE("tiny budget reports inconclusive") {
    Budget b(10);
    auto v = test_cwl_linear_part(two_by_four_minors(f), &b);
    CHECK(v.decision == CwlDecision::inconclusive);
  }
}

TEST_CASE("direct componentwise test") {
  PrimeField f(31013);

  SUBCASE("components of (x1^2, x2)") {
    auto i = GradedIdeal(f, 2, {poly(f, {{1, {2, 0}}}), poly(f, {{1, {0, 1}}})});
    auto v = test_cwl_direct(i);
    CHECK(v.decision == CwlDecision::yes);
    CHECK(v.witness["degree_range"] == nlohmann::json({1, 2}));
  }

  SUBCASE("projective plane over F_2 fails in its generating degree") {
    auto v = test_cwl_direct(rp2_ideal(PrimeField(2)));
    CHECK(v.decision == CwlDecision::no);
    CHECK(v.witness["failing_degree"] == 3);
  }

  SUBCASE("equigenerated ideal with linear resolution") {
    CHECK(test_cwl_direct(two_by_four_minors(f)).decision == CwlDecision::yes);
  }

  SUBCASE("tiny budget reports inconclusive") {
    Budget b(10);
    CHECK(test_cwl_direct(two_by_four_minors(f), &b).decision ==
          CwlDecision::inconclusive);
  }
}

TEST_CASE("the three decision methods agree on the corpus") {
  PrimeField f(31013);
  std::vector<GradedIdeal> corpus = {
      mixed_stable_ideal(f),
      two_squares(f, 2),
      two_squares(f, 3),
      variable_ideal(f, 3),
      GradedIdeal(f, 2, {poly(f, {{1, {2, 0}}}), poly(f, {{1, {0, 1}}})}),
      rp2_ideal(f),
  };
  for (const auto& i : corpus) {
    CAPTURE(i.generators().front().str());
    auto gin = test_cwl_gin(i);
    auto lin = test_cwl_linear_part(i);
    auto direct = test_cwl_direct(i);
    CHECK(gin.decision == lin.decision);
    CHECK(gin.decision == direct.decision);
  }
}

TEST_CASE("a direct yes forces agreement of the full Betti tables with gin") {
  PrimeField f(31013);
  for (const auto& i : {mixed_stable_ideal(f), two_by_four_minors(f)}) {
    REQUIRE(test_cwl_direct(i).decision == CwlDecision::yes);
    auto sample = gin_sample(i, MonomialOrder::degrevlex, 5, 2);
    REQUIRE(is_stable(sample.ideal));
    auto of_ideal = betti_table(minimal_resolution(i)).for_ideal();
    auto of_gin =
        betti_table(minimal_resolution(GradedIdeal::from_monomials(
                        f, sample.ideal)))
            .for_ideal();
    CHECK(of_ideal == of_gin);
  }
}

TEST_CASE("verdicts are invariant under coordinate changes") {
  PrimeField f(31013);
  for (std::uint64_t seed : {11u, 12u}) {
    auto cwl = mixed_stable_ideal(f);
    auto moved2 = apply_coordinate_change(cwl, draw_coordinate_change(f, 2, seed));
    CHECK(test_cwl_linear_part(moved2).decision == CwlDecision::yes);
    CHECK(test_cwl_direct(moved2).decision == CwlDecision::yes);

    auto bad = two_squares(f, 3);
    auto moved3 = apply_coordinate_change(bad, draw_coordinate_change(f, 3, seed));
    CHECK(test_cwl_linear_part(moved3).decision == CwlDecision::no);
    CHECK(test_cwl_direct(moved3).decision == CwlDecision::no);
  }
}

TEST_CASE("linear components keep linear initial components") {
  PrimeField f(31013);
  // if I_<d> has a d-linear resolution, so does the part of its degrevlex
  // initial ideal generated in degree d
  std::vector<std::pair<GradedIdeal, int>> samples = {
      {mixed_stable_ideal(f), 2},
      {mixed_stable_ideal(f), 3},
      {two_by_four_minors(f), 2},
  };
  for (const auto& [i, d] : samples) {
    auto comp = component_ideal(i, d);
    REQUIRE_FALSE(comp.is_zero());
    if (!has_linear_resolution(comp, d)) continue;
    auto in = comp.initial_ideal(MonomialOrder::degrevlex);
    std::vector<ExponentVector> degree_d;
    for (const auto& g : in.generators()) {
      if (g.degree() == d) degree_d.push_back(g);
    }
    REQUIRE_FALSE(degree_d.empty());
    auto part = GradedIdeal::from_monomials(f, MonomialIdeal(i.arity(),
                                                             degree_d));
    CHECK(has_linear_resolution(part, d));
  }
}

TEST_CASE("zero ideals are rejected by every method") {
  PrimeField f(31013);
  auto z = GradedIdeal::zero(f, 2);
  CHECK_THROWS_AS(test_cwl_initial(z), std::invalid_argument);
  CHECK_THROWS_AS(test_cwl_gin(z), std::invalid_argument);
  CHECK_THROWS_AS(test_cwl_linear_part(z), std::invalid_argument);
  CHECK_THROWS_AS(test_cwl_direct(z), std::invalid_argument);
}
