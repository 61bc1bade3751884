#include <benchmark/benchmark.h>

#include "cwl/criteria.hpp"
#include "cwl/graded_ideal.hpp"
#include "cwl/groebner.hpp"
#include "cwl/monomial_ideal.hpp"
#include "cwl/resolution.hpp"
#include "cwl/simplicial_complex.hpp"

namespace {

using namespace cwl;

GradedIdeal generic_minors_2x4() {
  PrimeField f(31013);
  auto x = [&](int i) { return Polynomial::variable(f, 8, i); };
  std::vector<Polynomial> gens;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      gens.push_back(x(i) * x(j + 4) - x(j) * x(i + 4));
  return GradedIdeal(f, 8, gens);
}

GradedIdeal projective_plane_ideal(long p) {
  return GradedIdeal::from_monomials(PrimeField(p),
                                     stanley_reisner(rp2_triangulation()));
}

void BM_BuchbergerMinorsDegrevlex(benchmark::State& state) {
  for (auto _ : state) {
    auto ideal = generic_minors_2x4();
    benchmark::DoNotOptimize(ideal.groebner_basis(MonomialOrder::degrevlex));
  }
}
BENCHMARK(BM_BuchbergerMinorsDegrevlex);

void BM_BuchbergerChangedMinorsLex(benchmark::State& state) {
  auto base = generic_minors_2x4();
  auto phi = draw_coordinate_change(base.field(), base.arity(), 1);
  for (auto _ : state) {
    auto ideal = apply_coordinate_change(base, phi);
    benchmark::DoNotOptimize(ideal.groebner_basis(MonomialOrder::lex));
  }
}
BENCHMARK(BM_BuchbergerChangedMinorsLex);

void BM_MinimalResolutionMinors(benchmark::State& state) {
  for (auto _ : state) {
    auto ideal = generic_minors_2x4();
    benchmark::DoNotOptimize(minimal_resolution(ideal));
  }
}
BENCHMARK(BM_MinimalResolutionMinors);

void BM_MinimalResolutionProjectivePlane(benchmark::State& state) {
  for (auto _ : state) {
    auto ideal = projective_plane_ideal(2);
    benchmark::DoNotOptimize(minimal_resolution(ideal));
  }
}
BENCHMARK(BM_MinimalResolutionProjectivePlane);

void BM_GinSampleMinors(benchmark::State& state) {
  for (auto _ : state) {
    auto ideal = generic_minors_2x4();
    benchmark::DoNotOptimize(
        gin_sample(ideal, MonomialOrder::degrevlex, 1, 3));
  }
}
BENCHMARK(BM_GinSampleMinors);

void BM_LinearPartTestProjectivePlane(benchmark::State& state) {
  for (auto _ : state) {
    auto ideal = projective_plane_ideal(3);
    benchmark::DoNotOptimize(test_cwl_linear_part(ideal));
  }
}
BENCHMARK(BM_LinearPartTestProjectivePlane);

void BM_ClosedFormBettiPowerIdeal(benchmark::State& state) {
  auto ideal = power(max_ideal(4), int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ek_betti(ideal));
}
BENCHMARK(BM_ClosedFormBettiPowerIdeal)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
