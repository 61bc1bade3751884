#include "cwl/classifiers.hpp"

#include <algorithm>
#include <stdexcept>

#include "cwl/poly_matrix.hpp"

namespace cwl {

namespace {

// nonzero maximal (or otherwise sized) minors of a matrix as a graded ideal;
// the zero ideal when every minor vanishes
GradedIdeal minor_ideal(const HomogeneousMatrix& a, int size, Budget* budget) {
  PolyGrid grid;
  for (int i = 0; i < a.rows(); ++i) {
    std::vector<Polynomial> row;
    for (int j = 0; j < a.cols(); ++j) row.push_back(a.at(i, j));
    grid.push_back(std::move(row));
  }
  std::vector<Polynomial> nonzero;
  for (auto& m : grid_minors(grid, size, budget)) {
    if (!m.is_zero()) nonzero.push_back(m.monic());
  }
  return GradedIdeal(a.field(), a.arity(), std::move(nonzero));
}

}  // namespace

int SymmetricInput::s() const {
  int k = 1;
  while (k < m && doubled_degrees[k] == doubled_degrees[0]) ++k;
  return k;
}

int SymmetricInput::t() const {
  int k = m;
  while (k > 1 && doubled_degrees[k - 2] == doubled_degrees[m - 1]) --k;
  return k;
}

CwlVerdict classify_gorenstein(const GradedIdeal& ideal, Budget* budget) {
  if (ideal.is_zero()) {
    throw std::invalid_argument("classify_gorenstein: zero ideal");
  }
  CwlVerdict v;
  v.method = "classify-gorenstein";
  auto gens = minimal_generators(ideal);
  const long b0 = static_cast<long>(gens.size());
  const int h = height(ideal, budget);
  long linear = 0;
  for (const auto& g : gens) {
    if (g.degree() == 1) ++linear;
  }
  v.witness["beta0"] = b0;
  v.witness["height"] = h;
  v.witness["linear_generators"] = linear;
  if (b0 != h) {
    v.decision = CwlDecision::no;
    v.witness["reason"] = "not a complete intersection";
  } else if (linear + 1 < b0) {
    v.decision = CwlDecision::no;
    v.witness["reason"] = "more than one non-linear minimal generator";
  } else {
    v.decision = CwlDecision::yes;
  }
  return v;
}

MonomialIdeal gorenstein_companion(int c, int e) {
  if (c < 1 || e < 1) {
    throw std::invalid_argument("gorenstein_companion: need c >= 1, e >= 1");
  }
  std::vector<ExponentVector> gens;
  for (int i = 0; i < c - 1; ++i) {
    ExponentVector m(c);
    m.set(i, 1);
    gens.push_back(m);
  }
  ExponentVector last(c);
  last.set(c - 1, e);
  gens.push_back(last);
  return MonomialIdeal(c, std::move(gens));
}

CwlVerdict classify_determinantal(const DeterminantalInput& input) {
  const DegreeMatrix& d = input.degrees;
  if (d.rows() < d.cols()) {
    throw std::invalid_argument(
        "classify_determinantal: need at least as many rows as columns");
  }
  if (!d.is_normalized() || !d.satisfies_homogeneity()) {
    throw std::invalid_argument(
        "classify_determinantal: degree matrix must be normalized");
  }
  for (int i = 0; i < d.cols(); ++i) {
    if (d.at(i, i) < 1) {
      throw std::invalid_argument(
          "classify_determinantal: diagonal formal degrees must be positive");
    }
  }
  const int c = input.c();
  CwlVerdict v;
  v.method = "classify-determinantal";
  v.witness["m"] = input.m();
  v.witness["c"] = c;
  if (input.matrix.has_value()) {
    v.witness["height_checked"] = false;
  } else {
    v.witness["caveat"] = "degree-data-only: height hypothesis trusted";
  }
  if (c == 1) {
    v.decision = CwlDecision::yes;
    v.witness["reason"] = "principal: a single maximal minor";
    return v;
  }
  if (c == 2) {
    for (int i = 0; i < d.cols(); ++i) {
      if (d.at(i, i) != 1) {
        v.decision = CwlDecision::no;
        v.witness["reason"] = "a main-diagonal entry has degree >= 2";
        v.witness["position"] = {i + 1, i + 1};
        return v;
      }
    }
    v.decision = CwlDecision::yes;
    v.witness["reason"] = "main diagonal all of degree one";
    return v;
  }
  for (int i = 0; i + 1 < d.rows(); ++i) {
    for (int j = 0; j < d.cols(); ++j) {
      if (d.at(i, j) != 1) {
        v.decision = CwlDecision::no;
        v.witness["reason"] =
            "an entry outside the last row has degree different from one";
        v.witness["position"] = {i + 1, j + 1};
        return v;
      }
    }
  }
  v.decision = CwlDecision::yes;
  v.witness["reason"] = "all rows except possibly the last are linear";
  return v;
}

CwlVerdict test_cwl_determinantal(const HomogeneousMatrix& a, int c,
                                  Budget* budget) {
  const int m = a.cols();
  if (a.rows() != m + c - 1) {
    throw std::invalid_argument(
        "test_cwl_determinantal: expected an (m+c-1) x m matrix");
  }
  auto full = minor_ideal(a, m, budget);
  const int h = full.is_zero() ? 0 : height(full, budget);
  if (h != c) {
    throw std::invalid_argument(
        "test_cwl_determinantal: ideal of maximal minors does not have the "
        "declared height");
  }
  CwlVerdict v;
  v.method = "determinantal-linearization";
  v.witness["c"] = c;
  auto lin = minor_ideal(linearize(a), m, budget);
  const int hlin = lin.is_zero() ? 0 : height(lin, budget);
  v.witness["linearized_height"] = hlin;
  v.decision = hlin >= c - 1 ? CwlDecision::yes : CwlDecision::no;
  return v;
}

MonomialIdeal determinantal_companion(const DeterminantalInput& input) {
  const int c = input.c();
  if (c < 3) {
    throw std::invalid_argument("determinantal_companion: need c >= 3");
  }
  auto verdict = classify_determinantal(input);
  if (verdict.decision != CwlDecision::yes) {
    throw std::invalid_argument(
        "determinantal_companion: degree data is not componentwise linear");
  }
  return max_ideal_multiple(gorenstein_companion(c, input.e()),
                            input.m() - 1);
}

MinorDegeneracyReport minor_degeneracy_checks(const HomogeneousMatrix& a,
                                              Budget* budget) {
  const int m = a.cols();
  if (a.rows() != m + 1) {
    throw std::invalid_argument(
        "minor_degeneracy_checks: expected an (m+1) x m matrix");
  }
  if (!a.entries_in_max_ideal()) {
    throw std::invalid_argument(
        "minor_degeneracy_checks: entries must lie in the maximal ideal");
  }
  // the lemma hypotheses refer to entries ordered by degree; permuting rows
  // and columns into normalized position does not change the minor ideals
  auto norm = normalize_degree_matrix(a.degree_matrix());
  MinorDegeneracyReport r{};
  for (int i = 0; i < m; ++i) {
    if (norm.matrix.at(i, i) >= 2) r.diagonal_degree_two = true;
    if (norm.matrix.at(i + 1, i) >= 2) r.subdiagonal_degree_two = true;
  }
  auto lin = minor_ideal(linearize(a), m, budget);
  r.all_linearized_minors_zero = lin.is_zero();
  r.linearized_height_at_most_one =
      lin.is_zero() || height(lin, budget) <= 1;
  r.linearized_minor_survives = !lin.is_zero();
  bool diagonal_linear = true;
  for (int i = 0; i < m; ++i) {
    if (norm.matrix.at(i, i) != 1) diagonal_linear = false;
  }
  if (diagonal_linear && r.subdiagonal_degree_two) {
    auto full = minor_ideal(a, m, budget);
    r.mixed_hypotheses = !full.is_zero() && height(full, budget) == 2;
  }
  return r;
}

CwlVerdict classify_symmetric(const SymmetricInput& input) {
  const int m = input.m;
  if (m < 2 ||
      static_cast<int>(input.doubled_degrees.size()) != m ||
      !std::is_sorted(input.doubled_degrees.begin(),
                      input.doubled_degrees.end())) {
    throw std::invalid_argument(
        "classify_symmetric: need m >= 2 ascending doubled half-integers");
  }
  // realized entry degrees d_i + d_j must be integral, so all 2d_i must share
  // one parity
  for (int v : input.doubled_degrees) {
    if (((v - input.doubled_degrees[0]) % 2 + 2) % 2 != 0) {
      throw std::invalid_argument(
          "classify_symmetric: half-integer data of mixed parity");
    }
  }
  CwlVerdict v;
  v.method = "classify-symmetric";
  v.witness["m"] = m;
  v.witness["doubled_degrees"] = input.doubled_degrees;
  const bool all_linear = std::all_of(
      input.doubled_degrees.begin(), input.doubled_degrees.end(),
      [](int x) { return x == 1; });
  if (all_linear) {
    v.decision = CwlDecision::yes;
    v.witness["reason"] = "all entries of degree one";
    return v;
  }
  if (m % 2 == 0) {
    v.decision = CwlDecision::no;
    v.witness["reason"] = "m even with non-linear degree data";
    return v;
  }
  const int s = (m - 1) / 2;
  const int low = input.doubled_degrees[0];
  bool pattern = low <= 0;
  for (int i = 0; i < m && pattern; ++i) {
    const int expected = i < s ? low : 2 - low;
    if (input.doubled_degrees[i] != expected) pattern = false;
  }
  if (pattern) {
    v.decision = CwlDecision::yes;
    v.witness["reason"] =
        "split degree data d_1=...=d_s <= 0, d_{s+1}=...=d_m = 1 - d_1";
    v.witness["s"] = s;
  } else {
    v.decision = CwlDecision::no;
    v.witness["reason"] = "degree data matches neither admissible pattern";
  }
  return v;
}

CwlVerdict test_cwl_symmetric(const HomogeneousMatrix& a, Budget* budget) {
  if (a.rows() != a.cols() || !a.is_symmetric()) {
    throw std::invalid_argument("test_cwl_symmetric: matrix not symmetric");
  }
  const int m = a.rows();
  auto sub = minor_ideal(a, m - 1, budget);
  if (sub.is_zero() || height(sub, budget) != 3) {
    throw std::invalid_argument(
        "test_cwl_symmetric: submaximal minors must have height three");
  }
  CwlVerdict v;
  v.method = "symmetric-linearization";
  auto lin = minor_ideal(linearize(a), m - 1, budget);
  const int hlin = lin.is_zero() ? 0 : height(lin, budget);
  v.witness["linearized_height"] = hlin;
  v.decision = hlin >= 2 ? CwlDecision::yes : CwlDecision::no;
  return v;
}

BettiTable jozefiak_betti(int m, int e) {
  if (m < 3 || m % 2 == 0) {
    throw std::invalid_argument("jozefiak_betti: need m odd and >= 3");
  }
  if (e < 1) throw std::invalid_argument("jozefiak_betti: need e >= 1");
  const int s = (m - 1) / 2;
  BettiTable t(BettiTable::Subject::quotient);
  t.add(0, 0, 1);
  const long f1[3] = {binomial(s + 2, 2), static_cast<long>(s) * (s + 1),
                      binomial(s + 1, 2)};
  const int d1[3] = {m - 1, m - 2 + e, m - 3 + 2 * e};
  const long f2[3] = {static_cast<long>(s) * (s + 1),
                      2L * s * (s + 1), static_cast<long>(s) * (s + 1)};
  const int d2[3] = {m, m - 1 + e, m - 2 + 2 * e};
  const long f3[3] = {binomial(s, 2), static_cast<long>(s) * (s + 1),
                      binomial(s + 1, 2)};
  const int d3[3] = {m + 1, m + e, m - 1 + 2 * e};
  for (int k = 0; k < 3; ++k) {
    if (f1[k] > 0) t.add(1, d1[k], f1[k]);
    if (f2[k] > 0) t.add(2, d2[k], f2[k]);
    if (f3[k] > 0) t.add(3, d3[k], f3[k]);
  }
  return t;
}

std::pair<int, int> compute_tr(int s) {
  if (s < 1) throw std::invalid_argument("compute_tr: need s >= 1");
  const long target = binomial(s, 2);
  int t = -1;
  long sum = 0;  // sum_{i=2s-t}^{2s} i, empty for t = -1
  while (true) {
    long next = sum + (2L * s - (t + 1));
    if (next > target) break;
    ++t;
    sum = next;
  }
  return {t, static_cast<int>(target - sum)};
}

SymmetricCompanionResult symmetric_companion(int m, int e) {
  if (m < 3 || m % 2 == 0 || e < 1) {
    throw std::invalid_argument(
        "symmetric_companion: need m odd >= 3 and e >= 1");
  }
  if (e == 1) {
    MonomialIdeal ideal = power(max_ideal(3), m - 1);
    bool ok = is_strongly_stable(ideal) &&
              ek_betti(ideal) == jozefiak_betti(m, 1);
    return SymmetricCompanionResult{
        ideal, ok, ok ? "" : "linear case failed the Betti cross-check"};
  }
  const int s = (m - 1) / 2;
  auto [t, r] = compute_tr(s);

  // monomial-ideal products of the displayed five-term sum; a term with any
  // negative exponent is dropped, and (x1,x2)^{r-1} is zero when r = 0
  const MonomialIdeal m2 = MonomialIdeal(
      3, {ExponentVector(3, {1, 0, 0}), ExponentVector(3, {0, 1, 0})});
  const MonomialIdeal m3 = max_ideal(3);
  auto mono = [](int a, int b, int c) {
    return MonomialIdeal(3, {ExponentVector(3, {a, b, c})});
  };
  std::vector<std::string> dropped;
  std::vector<MonomialIdeal> terms;
  auto add_term = [&](const char* name, std::vector<int> exponents,
                      const std::function<MonomialIdeal()>& build) {
    for (int v : exponents) {
      if (v < 0) {
        dropped.push_back(name);
        return;
      }
    }
    terms.push_back(build());
  };
  add_term("term1", {2 * s - 1 - t, t + 1}, [&] {
    return power(m2, 2 * s - 1 - t) * power(m3, t + 1);
  });
  if (r == 0) {
    dropped.push_back("term2 ((x1,x2)^{r-1} with r = 0)");
  } else {
    add_term("term2", {2 * s - 1 - t - r, r - 1, t + 2}, [&] {
      return mono(2 * s - 1 - t - r, 0, 0) * power(m2, r - 1) *
             mono(0, 0, t + 2);
    });
  }
  add_term("term3", {2 * s - 2 - t - r, r, e + t - 1}, [&] {
    return power(m2, 2 * s - 2 - t - r) * mono(0, r, 0) *
           mono(0, 0, e + t - 1);
  });
  add_term("term4", {s, s - 3 - t, e + t - 2}, [&] {
    return power(m2, s) * power(m3, s - 3 - t) * mono(0, 0, e + t - 2);
  });
  add_term("term5", {s - 1, e + s - 1}, [&] {
    return power(m3, s - 1) * mono(0, 0, e + s - 1);
  });

  SymmetricCompanionResult out;
  for (const auto& d : dropped) {
    if (!out.note.empty()) out.note += "; ";
    out.note += "dropped " + d;
  }
  if (terms.empty()) {
    out.matches = false;
    out.note += "; no term of the displayed sum survives";
    return out;
  }
  MonomialIdeal ideal = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) ideal = ideal + terms[i];
  out.ideal = ideal;
  bool stable = is_strongly_stable(ideal);
  bool betti_ok = stable && ek_betti(ideal) == jozefiak_betti(m, e);
  out.matches = stable && betti_ok;
  if (!stable) {
    out.note += (out.note.empty() ? "" : "; ");
    out.note += "constructed ideal is not strongly stable";
  } else if (!betti_ok) {
    out.note += (out.note.empty() ? "" : "; ");
    out.note += "Betti cross-check against the resolution shifts failed";
  }
  return out;
}

}  // namespace cwl
