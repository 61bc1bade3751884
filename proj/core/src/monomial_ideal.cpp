#include "cwl/monomial_ideal.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace cwl {

long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void BettiTable::add(int i, int j, long mult) {
  if (mult == 0) return;
  auto it = e_.find({i, j});
  if (it == e_.end()) {
    e_.emplace(std::make_pair(i, j), mult);
  } else {
    it->second += mult;
    if (it->second == 0) e_.erase(it);
  }
}

long BettiTable::at(int i, int j) const {
  auto it = e_.find({i, j});
  return it == e_.end() ? 0 : it->second;
}

long BettiTable::total(int i) const {
  long s = 0;
  for (const auto& [k, v] : e_) {
    if (k.first == i) s += v;
  }
  return s;
}

int BettiTable::max_homological_index() const {
  int m = -1;
  for (const auto& [k, v] : e_) m = std::max(m, k.first);
  return m;
}

int BettiTable::regularity() const {
  int r = 0;
  bool any = false;
  for (const auto& [k, v] : e_) {
    r = any ? std::max(r, k.second - k.first) : k.second - k.first;
    any = true;
  }
  if (!any) throw std::domain_error("regularity of empty Betti table");
  return r;
}

BettiTable BettiTable::for_ideal() const {
  if (subject_ == Subject::ideal) return *this;
  BettiTable t(Subject::ideal);
  for (const auto& [k, v] : e_) {
    if (k.first == 0) continue;  // drop the free cover S itself
    t.add(k.first - 1, k.second, v);
  }
  return t;
}

BettiTable BettiTable::for_quotient() const {
  if (subject_ == Subject::quotient) return *this;
  BettiTable t(Subject::quotient);
  t.add(0, 0, 1);
  for (const auto& [k, v] : e_) t.add(k.first + 1, k.second, v);
  return t;
}

std::string BettiTable::str() const {
  std::ostringstream os;
  os << (subject_ == Subject::ideal ? "I" : "S/I") << ":";
  for (const auto& [k, v] : e_) {
    os << " b(" << k.first << "," << k.second << ")=" << v;
  }
  return os.str();
}

namespace {
std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const ExponentVector& a, const ExponentVector& b) {
              return a.degree() < b.degree();
            });
  std::vector<ExponentVector> out;
  for (const auto& g : gens) {
    bool redundant = std::any_of(
        out.begin(), out.end(),
        [&](const ExponentVector& h) { return h.divides(g); });
    if (!redundant && std::find(out.begin(), out.end(), g) == out.end()) {
      out.push_back(g);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ExponentVector& a, const ExponentVector& b) {
              return compare(a, b, MonomialOrder::degrevlex) ==
                     std::strong_ordering::greater;
            });
  return out;
}
}  // namespace

MonomialIdeal::MonomialIdeal(int arity, std::vector<ExponentVector> generators)
    : arity_(arity) {
  for (const auto& g : generators) {
    if (g.arity() != arity) {
      throw std::invalid_argument("MonomialIdeal: generator arity mismatch");
    }
  }
  gens_ = minimalize(std::move(generators));
}

bool MonomialIdeal::contains(const ExponentVector& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const ExponentVector& g) { return g.divides(m); });
}

int MonomialIdeal::min_generator_degree() const {
  if (gens_.empty()) throw std::domain_error("zero ideal has no generators");
  int d = gens_.front().degree();
  for (const auto& g : gens_) d = std::min(d, g.degree());
  return d;
}

int MonomialIdeal::max_generator_degree() const {
  if (gens_.empty()) throw std::domain_error("zero ideal has no generators");
  int d = gens_.front().degree();
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

long MonomialIdeal::monomial_count(int d) const {
  if (d < 0) return 0;
  long count = 0;
  for_each_monomial(arity_, d, [&](const ExponentVector& m) {
    if (contains(m)) ++count;
  });
  return count;
}

int MonomialIdeal::quotient_dimension() const {
  if (gens_.empty()) return arity_;
  int best = 0;
  for (unsigned mask = 0; mask < (1u << arity_); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& g : gens_) {
      bool supported_inside = true;
      for (int i = 0; i < arity_; ++i) {
        if (g[i] > 0 && !(mask & (1u << i))) {
          supported_inside = false;
          break;
        }
      }
      if (supported_inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

std::string MonomialIdeal::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].str();
  }
  return s + ")";
}

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.arity(), std::move(gens));
}

MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
  std::vector<ExponentVector> gens;
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(g * h);
  }
  return MonomialIdeal(a.arity(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, int k) {
  if (k < 0) throw std::invalid_argument("negative ideal power");
  if (k == 0) {
    return MonomialIdeal(a.arity(), {ExponentVector(a.arity())});  // unit
  }
  MonomialIdeal r = a;
  for (int i = 1; i < k; ++i) r = r * a;
  return r;
}

MonomialIdeal max_ideal(int arity) {
  std::vector<ExponentVector> gens;
  for (int i = 0; i < arity; ++i) {
    ExponentVector m(arity);
    m.set(i, 1);
    gens.push_back(m);
  }
  return MonomialIdeal(arity, std::move(gens));
}

MonomialIdeal max_ideal_multiple(const MonomialIdeal& a, int k) {
  return power(max_ideal(a.arity()), k) * a;
}

StabilityReport stability_report(const MonomialIdeal& ideal) {
  // exchange test on minimal generators only (this suffices)
  for (const auto& g : ideal.generators()) {
    int mx = g.max_var();
    if (mx == 0) continue;
    for (int j = 1; j < mx; ++j) {
      ExponentVector m = g;
      m.set(mx - 1, g[mx - 1] - 1);
      m.set(j - 1, g[j - 1] + 1);
      if (!ideal.contains(m)) {
        return StabilityReport{false, g, j};
      }
    }
  }
  return StabilityReport{true};
}

bool is_stable(const MonomialIdeal& ideal) {
  return stability_report(ideal).stable;
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
  for (const auto& g : ideal.generators()) {
    for (int i = 1; i <= g.arity(); ++i) {
      if (g[i - 1] == 0) continue;
      for (int j = 1; j < i; ++j) {
        ExponentVector m = g;
        m.set(i - 1, g[i - 1] - 1);
        m.set(j - 1, g[j - 1] + 1);
        if (!ideal.contains(m)) return false;
      }
    }
  }
  return true;
}

BettiTable ek_betti(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("ek_betti: zero ideal");
  auto rep = stability_report(ideal);
  if (!rep.stable) {
    throw std::invalid_argument("ek_betti: ideal is not stable (generator " +
                                rep.witness_generator.str() + ", variable x" +
                                std::to_string(rep.witness_variable) + ")");
  }
  BettiTable t(BettiTable::Subject::quotient);
  t.add(0, 0, 1);
  for (const auto& g : ideal.generators()) {
    const int j = g.degree();
    const int mx = g.max_var();
    for (int i = 1; i <= mx; ++i) {
      t.add(i, i + j - 1, binomial(mx - 1, i - 1));
    }
  }
  return t;
}

}  // namespace cwl
