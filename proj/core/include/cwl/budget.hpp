#pragma once

#include <stdexcept>

namespace cwl {

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded() : std::runtime_error("computation budget exceeded") {}
};

/// Cooperative step counter so long computations can be time-boxed by a
/// caller; charge() throws BudgetExceeded when the budget runs out.
class Budget {
 public:
  explicit Budget(long steps) : remaining_(steps) {}
  void charge(long n = 1) {
    remaining_ -= n;
    if (remaining_ < 0) throw BudgetExceeded();
  }
  long remaining() const { return remaining_; }

 private:
  long remaining_;
};

}  // namespace cwl
