#pragma once

#include <map>
#include <string>
#include <utility>

namespace cwl {

/// Graded Betti numbers beta_{i,j}: finitely supported map (i,j) -> positive
/// multiplicity, tagged with the module it describes (the ideal I or the
/// quotient S/I). The two views interconvert by the index shift
/// beta_{i,j}(I) = beta_{i+1,j}(S/I).
class BettiTable {
 public:
  enum class Subject { ideal, quotient };

  explicit BettiTable(Subject s) : subject_(s) {}

  Subject subject() const { return subject_; }
  void add(int i, int j, long mult);
  long at(int i, int j) const;
  const std::map<std::pair<int, int>, long>& entries() const { return e_; }

  long total(int i) const;                 // beta_i
  int max_homological_index() const;       // largest i with an entry
  int regularity() const;                  // max(j - i) over the support

  BettiTable for_ideal() const;
  BettiTable for_quotient() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

  std::string str() const;

 private:
  Subject subject_;
  std::map<std::pair<int, int>, long> e_;
};

}  // namespace cwl
