#include "cwl/criteria.hpp"

#include <algorithm>
#include <stdexcept>

#include "cwl/monomial_ideal.hpp"

namespace cwl {

namespace {

std::string order_name(MonomialOrder ord) {
  return ord == MonomialOrder::degrevlex ? "degrevlex" : "lex";
}

nlohmann::json ideal_json(const MonomialIdeal& i) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : i.generators()) gens.push_back(g.str());
  return gens;
}

std::pair<int, int> generator_degree_range(const GradedIdeal& ideal) {
  auto gens = minimal_generators(ideal);
  int lo = gens.front().degree();
  int hi = lo;
  for (const auto& g : gens) {
    lo = std::min(lo, g.degree());
    hi = std::max(hi, g.degree());
  }
  return {lo, hi};
}

}  // namespace

std::string to_string(CwlDecision d) {
  switch (d) {
    case CwlDecision::yes:
      return "yes";
    case CwlDecision::no:
      return "no";
    default:
      return "inconclusive";
  }
}

bool has_linear_resolution(const GradedIdeal& ideal, int d, MonomialOrder ord,
                           Budget* budget) {
  if (ideal.is_zero()) {
    throw std::invalid_argument("has_linear_resolution: zero ideal");
  }
  auto [lo, hi] = generator_degree_range(ideal);
  if (lo != d || hi != d) {
    throw std::invalid_argument(
        "has_linear_resolution: ideal not generated in the stated degree");
  }
  auto table = betti_table(minimal_resolution(ideal, ord, budget)).for_ideal();
  for (const auto& [ij, beta] : table.entries()) {
    if (beta != 0 && ij.second != ij.first + d) return false;
  }
  return true;
}

CwlVerdict test_cwl_initial(const GradedIdeal& ideal, MonomialOrder ord,
                            Budget* budget) {
  if (ideal.is_zero()) {
    throw std::invalid_argument("test_cwl_initial: zero ideal");
  }
  CwlVerdict v;
  v.method = "initial";
  v.witness["order"] = order_name(ord);
  auto in = ideal.initial_ideal(ord, budget);
  v.witness["initial_ideal"] = ideal_json(in);
  auto stab = stability_report(in);
  if (!stab.stable) {
    v.decision = CwlDecision::inconclusive;
    v.witness["reason"] = "initial ideal is not stable";
    v.witness["stability_witness"] = stab.witness_generator.str();
    return v;
  }
  long b0_ideal = beta0(ideal);
  long b0_in = static_cast<long>(in.generators().size());
  v.witness["beta0_ideal"] = b0_ideal;
  v.witness["beta0_initial"] = b0_in;
  if (b0_ideal == b0_in) {
    v.decision = CwlDecision::yes;
  } else {
    v.decision = CwlDecision::inconclusive;
    v.witness["reason"] =
        "initial ideal is stable but has more minimal generators; the "
        "converse implication is unavailable in non-generic coordinates";
  }
  return v;
}

CwlVerdict test_cwl_gin(const GradedIdeal& ideal, std::uint64_t seed,
                        int trials, Budget* budget) {
  if (ideal.is_zero()) {
    throw std::invalid_argument("test_cwl_gin: zero ideal");
  }
  CwlVerdict v;
  v.method = "gin";
  v.probabilistic = true;
  v.witness["order"] = "degrevlex";
  v.witness["seed"] = seed;
  v.witness["trials"] = trials;
  auto sample = gin_sample(ideal, MonomialOrder::degrevlex, seed, trials,
                           budget);
  v.witness["agreed"] = sample.agreed;
  v.witness["gin"] = ideal_json(sample.ideal);
  if (!sample.agreed) {
    // the sampled initial ideals differ between trials, so none of them can
    // be trusted to be the gin (typical over very small fields, where random
    // coordinates are never generic)
    v.decision = CwlDecision::inconclusive;
    v.witness["reason"] =
        "coordinate-change trials produced different initial ideals; the "
        "sample is not generic";
    return v;
  }
  auto stab = stability_report(sample.ideal);
  if (!stab.stable) {
    v.decision = CwlDecision::no;
    v.witness["reason"] = "sampled generic initial ideal is not stable";
    v.witness["stability_witness"] = stab.witness_generator.str();
    return v;
  }
  long b0_ideal = beta0(ideal);
  long b0_gin = static_cast<long>(sample.ideal.generators().size());
  v.witness["beta0_ideal"] = b0_ideal;
  v.witness["beta0_gin"] = b0_gin;
  v.decision = b0_ideal == b0_gin ? CwlDecision::yes : CwlDecision::no;
  return v;
}

CwlVerdict test_cwl_linear_part(const GradedIdeal& ideal, Budget* budget) {
  if (ideal.is_zero()) {
    throw std::invalid_argument("test_cwl_linear_part: zero ideal");
  }
  CwlVerdict v;
  v.method = "linear-part";
  try {
    auto res = minimal_resolution(ideal, MonomialOrder::degrevlex, budget);
    if (res.length() < 2) {
      // free module: the resolution of I is a single free module, its linear
      // part is trivially acyclic
      v.decision = CwlDecision::yes;
      v.witness["reason"] = "ideal is free (no syzygies)";
      return v;
    }
    auto of_ideal = ideal_resolution(res);
    auto lin = linear_part(of_ideal);
    if (lin == of_ideal) {
      v.decision = CwlDecision::yes;
      v.witness["reason"] =
          "all differential entries are linear; the linear part is the "
          "minimal resolution itself";
      return v;
    }
    bool acyclic = is_acyclic(lin, budget);
    v.decision = acyclic ? CwlDecision::yes : CwlDecision::no;
    v.witness["linear_part_acyclic"] = acyclic;
  } catch (const BudgetExceeded&) {
    v.decision = CwlDecision::inconclusive;
    v.witness["reason"] = "computation budget exceeded";
  }
  return v;
}

CwlVerdict test_cwl_direct(const GradedIdeal& ideal, Budget* budget) {
  if (ideal.is_zero()) {
    throw std::invalid_argument("test_cwl_direct: zero ideal");
  }
  CwlVerdict v;
  v.method = "direct";
  try {
    auto [lo, hi] = generator_degree_range(ideal);
    v.witness["degree_range"] = {lo, hi};
    for (int d = lo; d <= hi; ++d) {
      auto comp = component_ideal(ideal, d);
      if (comp.is_zero()) continue;
      if (!has_linear_resolution(comp, d, MonomialOrder::degrevlex, budget)) {
        v.decision = CwlDecision::no;
        v.witness["failing_degree"] = d;
        return v;
      }
    }
    v.decision = CwlDecision::yes;
  } catch (const BudgetExceeded&) {
    v.decision = CwlDecision::inconclusive;
    v.witness["reason"] = "computation budget exceeded";
  }
  return v;
}

}  // namespace cwl
