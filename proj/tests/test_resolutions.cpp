#include "doctest.h"

#include <random>

#include "cwl/monomial_ideal.hpp"
#include "cwl/simplicial_complex.hpp"
#include "cwl/poly_matrix.hpp"
#include "cwl/resolution.hpp"
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

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Hilbert function of S/I recomputed from the shifts of a resolution of S/I
// via the Euler characteristic: HF(d) = sum_k (-1)^k sum_{j in shifts_k}
// C(n - 1 + d - j, n - 1).
long euler_hilbert(const GradedFreeComplex& r, int d) {
  long acc = 0;
  int sign = 1;
  for (int k = 0; k <= r.length(); ++k) {
    for (int j : r.shifts(k)) acc += sign * binom(r.arity() - 1 + d - j,
                                                  r.arity() - 1);
    sign = -sign;
  }
  return acc;
}

}  // namespace

TEST_CASE("grid determinant and rank") {
  PrimeField f(31013);
  auto x = Polynomial::variable(f, 2, 1);
  auto y = Polynomial::variable(f, 2, 2);
  Polynomial zero(f, 2);

  PolyGrid m{{x, y}, {y, x}};
  CHECK(grid_determinant(m) == x * x - y * y);
  CHECK(grid_rank(m) == 2);

  PolyGrid sing{{x, y}, {x * x, x * y}};  // second row = x * first
  CHECK(grid_determinant(sing).is_zero());
  CHECK(grid_rank(sing) == 1);

  PolyGrid zrow{{zero, zero}, {x, y}};
  CHECK(grid_rank(zrow) == 1);

  auto minors = grid_minors(PolyGrid{{x, y, zero}, {zero, x, y}}, 2);
  REQUIRE(minors.size() == 3);
  CHECK(minors[0] == x * x);
  CHECK(minors[1] == x * y);
  CHECK(minors[2] == y * y);
}

TEST_CASE("grid determinant agrees with cofactor expansion on random input") {
  PrimeField f(31013);
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    PolyGrid m(n, std::vector<Polynomial>());
    std::vector<std::vector<Polynomial>> entries(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        auto p = random_polynomial(rng, f, 2, 1, 2);
        m[i].push_back(p);
        entries[i].push_back(p);
      }
    }
    // cofactor along the first row
    std::function<Polynomial(const PolyGrid&)> cof =
        [&](const PolyGrid& a) -> Polynomial {
      const int k = static_cast<int>(a.size());
      if (k == 1) return a[0][0];
      Polynomial acc(f, 2);
      for (int j = 0; j < k; ++j) {
        PolyGrid sub;
        for (int i = 1; i < k; ++i) {
          std::vector<Polynomial> row;
          for (int c = 0; c < k; ++c) {
            if (c != j) row.push_back(a[i][c]);
          }
          sub.push_back(std::move(row));
        }
        auto term = a[0][j] * cof(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
      }
      return acc;
    };
    CHECK(grid_determinant(m) == cof(m));
  }
}

TEST_CASE("Koszul resolution of the variable ideal") {
  PrimeField f(31013);
  for (int n = 1; n <= 4; ++n) {
    auto r = minimal_resolution(variable_ideal(f, n));
    CHECK(r.length() == n);
    auto t = betti_table(r);
    for (int i = 0; i <= n; ++i) {
      CHECK(t.total(i) == binom(n, i));
      CHECK(t.at(i, i) == binom(n, i));
    }
    CHECK(regularity(r) == 0);
    CHECK(is_acyclic(r));
  }
}

TEST_CASE("resolution of the 2x4 minors ideal is pure with totals 1,6,8,3") {
  PrimeField f(31013);
  auto r = minimal_resolution(two_by_four_minors(f));
  CHECK(r.length() == 3);
  auto t = betti_table(r);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(1, 2) == 6);
  CHECK(t.at(2, 3) == 8);
  CHECK(t.at(3, 4) == 3);
  CHECK(t.total(1) == 6);
  CHECK(t.total(2) == 8);
  CHECK(t.total(3) == 3);
  CHECK(regularity(r) == 1);
  CHECK(t.for_ideal().regularity() == 2);  // 2-linear resolution of I
}

TEST_CASE("resolution of (x^2, xy, y^3)") {
  PrimeField f(31013);
  auto x = Polynomial::variable(f, 2, 1);
  auto y = Polynomial::variable(f, 2, 2);
  GradedIdeal i(f, 2, {x * x, x * y, y * y * y});
  auto r = minimal_resolution(i);
  auto t = betti_table(r).for_ideal();
  CHECK(t.total(0) == 3);
  CHECK(t.total(1) == 2);
  CHECK(t.at(0, 2) == 2);
  CHECK(t.at(0, 3) == 1);
  CHECK(t.at(1, 3) == 1);
  CHECK(t.at(1, 4) == 1);
  // matches the combinatorial formula for this stable ideal
  auto ek = ek_betti(MonomialIdeal(2, {ev({2, 0}), ev({1, 1}), ev({0, 3})}));
  CHECK(betti_table(r) == ek);
}

TEST_CASE("regularity of complete intersections (x1, x2, x3^e)") {
  PrimeField f(31013);
  for (int e = 1; e <= 4; ++e) {
    auto x1 = Polynomial::variable(f, 3, 1);
    auto x2 = Polynomial::variable(f, 3, 2);
    auto x3 = Polynomial::variable(f, 3, 3);
    Polynomial p = x3;
    for (int k = 1; k < e; ++k) p = p * x3;
    GradedIdeal ci(f, 3, {x1, x2, p});
    auto r = minimal_resolution(ci);
    CHECK(betti_table(r).for_ideal().regularity() == e);
  }
}

TEST_CASE("projective plane triangulation: regularity 3 away from char 2") {
  auto delta = rp2_triangulation();
  auto i_delta = stanley_reisner(delta);
  PrimeField f3(3);
  auto ideal = GradedIdeal::from_monomials(f3, i_delta);
  auto r = minimal_resolution(ideal);
  CHECK(betti_table(r).for_ideal().regularity() == 3);

  // over F_2 the resolution is strictly longer
  PrimeField f2(2);
  auto r2 = minimal_resolution(GradedIdeal::from_monomials(f2, i_delta));
  CHECK(r2.length() > r.length());
}

TEST_CASE("linear part: shapes, fixed points, idempotence") {
  PrimeField f(31013);
  auto x1 = Polynomial::variable(f, 2, 1);
  auto x2 = Polynomial::variable(f, 2, 2);
  GradedIdeal i(f, 2, {x1 * x1, x2});
  auto r = ideal_resolution(minimal_resolution(i));
  REQUIRE(r.length() == 1);
  // the Koszul syzygy column (x2, -x1^2) loses its quadratic entry
  auto lin = linear_part(r);
  const auto& d = lin.differential(1);
  REQUIRE(d.rows() == 2);
  REQUIRE(d.cols() == 1);
  int zeros = 0, linear = 0;
  for (int row = 0; row < 2; ++row) {
    if (d.at(row, 0).is_zero()) {
      ++zeros;
    } else {
      CHECK(d.at(row, 0).degree() == 1);
      ++linear;
    }
  }
  CHECK(zeros == 1);
  CHECK(linear == 1);
  CHECK(linear_part(lin) == lin);

  // all-linear resolution is a fixed point
  auto koszul = minimal_resolution(variable_ideal(f, 3));
  CHECK(linear_part(koszul) == koszul);
}

TEST_CASE("acyclicity of linear parts") {
  PrimeField f(31013);
  auto x1 = Polynomial::variable(f, 2, 1);
  auto x2 = Polynomial::variable(f, 2, 2);

  // (x1^2, x2): linear part of the ideal resolution is acyclic
  GradedIdeal good(f, 2, {x1 * x1, x2});
  CHECK(is_acyclic(linear_part(ideal_resolution(minimal_resolution(good)))));

  // (x1^2, x2^2): linear part has a zero differential, not acyclic
  GradedIdeal bad(f, 2, {x1 * x1, x2 * x2});
  CHECK(!is_acyclic(linear_part(ideal_resolution(minimal_resolution(bad)))));

  // (x^2, xy, y^3) from the Hilbert-Burch example: acyclic linear part
  auto y = x2;
  GradedIdeal hb(f, 2, {x1 * x1, x1 * y, y * y * y});
  CHECK(is_acyclic(linear_part(ideal_resolution(minimal_resolution(hb)))));
}

TEST_CASE("Betti tables are invariant under shuffles and coordinate changes") {
  PrimeField f(31013);
  std::mt19937_64 rng(53);
  auto x = Polynomial::variable(f, 3, 1);
  auto y = Polynomial::variable(f, 3, 2);
  auto z = Polynomial::variable(f, 3, 3);
  std::vector<Polynomial> gens{x * x, x * y - z * z, y * y * y};
  auto reference = betti_table(minimal_resolution(GradedIdeal(f, 3, gens)));
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(betti_table(minimal_resolution(GradedIdeal(f, 3, gens))) ==
          reference);
  }
  auto phi = draw_coordinate_change(f, 3, 99);
  auto moved = apply_coordinate_change(GradedIdeal(f, 3, gens), phi);
  CHECK(betti_table(minimal_resolution(moved)) == reference);
}

TEST_CASE("semicontinuity under initial ideals") {
  PrimeField f(31013);
  auto x = Polynomial::variable(f, 3, 1);
  auto y = Polynomial::variable(f, 3, 2);
  auto z = Polynomial::variable(f, 3, 3);
  std::vector<GradedIdeal> samples{
      GradedIdeal(f, 3, {x * x, x * y - z * z, y * y * y}),
      GradedIdeal(f, 3, {x * y - z * z, y * z}),
      GradedIdeal(f, 3, {x * x - y * z})};
  for (const auto& ideal : samples) {
    auto ti = betti_table(minimal_resolution(ideal));
    auto in = ideal.initial_ideal(MonomialOrder::degrevlex);
    auto tin =
        betti_table(minimal_resolution(GradedIdeal::from_monomials(f, in)));
    for (const auto& [ij, beta] : ti.entries()) {
      CHECK(beta <= tin.at(ij.first, ij.second));
    }
  }
}

TEST_CASE("Euler characteristic reproduces the Hilbert function") {
  PrimeField f(31013);
  auto x = Polynomial::variable(f, 3, 1);
  auto y = Polynomial::variable(f, 3, 2);
  auto z = Polynomial::variable(f, 3, 3);
  std::vector<GradedIdeal> samples{
      GradedIdeal(f, 3, {x * x, x * y - z * z, y * y * y}),
      GradedIdeal(f, 3, {x * y, y * z}),
      variable_ideal(f, 3)};
  for (const auto& ideal : samples) {
    auto r = minimal_resolution(ideal);
    auto hf = hilbert_function(ideal, 8);
    for (int d = 0; d <= 8; ++d) CHECK(euler_hilbert(r, d) == hf[d]);
  }
}

TEST_CASE("combinatorial Betti formula agrees with the engine on stable ideals") {
  PrimeField f(31013);
  std::mt19937_64 rng(61);
  int checked = 0;
  while (checked < 8) {
    int n = 2 + static_cast<int>(rng() % 3);
    std::vector<ExponentVector> gens;
    for (int i = 0; i < 4; ++i) {
      auto m = random_monomial(rng, n, 4);
      if (!m.is_one()) gens.push_back(m);
    }
    if (gens.empty()) continue;
    MonomialIdeal mono(n, gens);
    if (!is_stable(mono)) continue;
    auto engine = betti_table(
        minimal_resolution(GradedIdeal::from_monomials(f, mono)));
    CHECK(engine == ek_betti(mono));
    ++checked;
  }
}

TEST_CASE("resolution budget is honored") {
  PrimeField f(31013);
  Budget tiny(25);
  CHECK_THROWS_AS(minimal_resolution(two_by_four_minors(f),
                                     MonomialOrder::degrevlex, &tiny),
                  BudgetExceeded);
}
